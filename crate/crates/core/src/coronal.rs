//! Signed coronals `χ_N(x) = μᵀ(xI − N)⁻¹μ` as exact reduced ratios.

use crate::algebra::{
    faddeev_leverrier, int, quadratic_form_from_terms, Matrix, Poly, RationalFn, Scalar,
};
use crate::error::{Error, Result};
use crate::graph::{MarkedSignedGraph, Marking, Sign};

/// Reduced decomposition of a coronal.
///
/// With `f = det(xI − N)` and `p = μᵀ·adj(xI − N)·μ`: `r = gcd(p, f)`,
/// `f = r·f_reduced`, and `χ = p_reduced / f_reduced` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronalTriple {
    /// Numerator, degree `d − 1`.
    pub p: Poly,
    /// Monic denominator, degree `d`.
    pub f: Poly,
    /// Monic cofactor of the characteristic polynomial, degree `n − d`.
    pub r: Poly,
}

impl CoronalTriple {
    /// `d`, the degree of the reduced denominator.
    pub fn d(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }

    pub fn ratio(&self) -> RationalFn {
        RationalFn::new(self.p.clone(), self.f.clone()).expect("denominator is monic")
    }

    /// `f·r`, the monic characteristic polynomial this triple came from.
    pub fn charpoly(&self) -> Poly {
        &self.f * &self.r
    }

    /// Equality of the reduced `(P, F)` pair, ignoring `R`.
    pub fn same_coronal(&self, other: &CoronalTriple) -> bool {
        self.p == other.p && self.f == other.f
    }
}

/// Computes the reduced coronal of `n` with respect to `mu`.
pub fn signed_coronal(n: &Matrix, mu: &Marking) -> Result<CoronalTriple> {
    coronal_of_vector(n, &mu.as_scalars())
}

/// Coronal for an arbitrary (not necessarily ±1) weight vector.
pub fn coronal_of_vector(n: &Matrix, u: &[Scalar]) -> Result<CoronalTriple> {
    let order = n.ensure_square()?;
    if u.len() != order {
        return Err(Error::Dimension(format!(
            "marking of length {} for a matrix of order {order}",
            u.len()
        )));
    }
    let fl = faddeev_leverrier(n)?;
    let p = quadratic_form_from_terms(&fl.adjugate_terms, u);
    let f = fl.charpoly;
    if p.is_zero() {
        return Ok(CoronalTriple {
            p,
            f: Poly::one(),
            r: f,
        });
    }
    let g = p.gcd(&f)?;
    Ok(CoronalTriple {
        p: p.div_exact(&g)?,
        f: f.div_exact(&g)?,
        r: g,
    })
}

/// Coronal of the μ-signed graph of `mg`, taken with `mg`'s own marking.
pub fn mu_coronal(mg: &MarkedSignedGraph) -> Result<CoronalTriple> {
    signed_coronal(&mg.mu_signed_graph().adjacency_matrix(), mg.marking())
}

/// `((n+1)x + 2n·c) / (x² − n)`, the adjacency coronal of a signed star
/// `K_{1,n}` under its canonical marking with center mark `c`.
pub fn star_coronal_closed_form(n: usize, center_mark: Sign) -> Result<RationalFn> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs n ≥ 1 leaves".into()));
    }
    let n = n as i64;
    RationalFn::new(
        Poly::from_i64(&[2 * n * center_mark.value(), n + 1]),
        Poly::from_i64(&[-n, 0, 1]),
    )
}

/// `n / (x − r)`: the coronal of the μ-signed graph of any signed graph whose
/// underlying graph is `r`-regular on `n` vertices.
pub fn regular_balanced_coronal(r: usize, n: usize) -> Result<RationalFn> {
    if n == 0 || r >= n {
        return Err(Error::InvalidParameter(format!(
            "need n ≥ 1 and 0 ≤ r < n, got r = {r}, n = {n}"
        )));
    }
    RationalFn::new(Poly::constant(int(n as i64)), Poly::linear(int(r as i64)))
}

/// `μᵀ(x₀I − N)⁻¹μ` by a direct linear solve; `None` when `x₀` is an eigenvalue.
pub fn coronal_at_point(n: &Matrix, mu: &Marking, x0: &Scalar) -> Result<Option<Scalar>> {
    let m = n.char_matrix_at(x0)?;
    let u = Matrix::column(&mu.as_scalars());
    match m.solve(&u) {
        Ok(sol) => Ok(Some(
            (0..u.rows()).map(|i| &u[(i, 0)] * &sol[(i, 0)]).sum(),
        )),
        Err(Error::InvalidParameter(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, star};
    use crate::graph::{Signature, SignedGraph};

    fn k2_plus() -> Matrix {
        Matrix::from_i64(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn k2_coronal() {
        let t = signed_coronal(&k2_plus(), &Marking::all_positive(2)).unwrap();
        assert_eq!(t.p, Poly::from_i64(&[2]));
        assert_eq!(t.f, Poly::from_i64(&[-1, 1]));
        assert_eq!(t.r, Poly::from_i64(&[1, 1]));
    }

    #[test]
    fn single_vertex_coronal() {
        let t = signed_coronal(&Matrix::zeros(1, 1), &Marking::all_positive(1)).unwrap();
        assert_eq!((t.p, t.f, t.r), (Poly::one(), Poly::x(), Poly::one()));
    }

    #[test]
    fn star_k12_coronal_any_signs() {
        for sig in ["++", "+-", "-+", "--"] {
            let g = star(3, &Signature::parse(sig).unwrap()).unwrap();
            let mu = g.canonical_marking();
            let t = signed_coronal(&g.adjacency_matrix(), &mu).unwrap();
            let c = mu.get(0).value();
            assert_eq!(t.p, Poly::from_i64(&[4 * c, 3]), "{sig}");
            assert_eq!(t.f, Poly::from_i64(&[-2, 0, 1]));
            assert_eq!(t.r, Poly::x());
        }
    }

    #[test]
    fn star_closed_form_examples() {
        let r = star_coronal_closed_form(2, Sign::Minus).unwrap();
        assert_eq!((r.num(), r.den()), (&Poly::from_i64(&[-4, 3]), &Poly::from_i64(&[-2, 0, 1])));
        let r = star_coronal_closed_form(1, Sign::Plus).unwrap();
        assert_eq!((r.num(), r.den()), (&Poly::from_i64(&[2]), &Poly::from_i64(&[-1, 1])));
        let r = star_coronal_closed_form(3, Sign::Plus).unwrap();
        assert_eq!((r.num(), r.den()), (&Poly::from_i64(&[6, 4]), &Poly::from_i64(&[-3, 0, 1])));
        assert!(star_coronal_closed_form(0, Sign::Plus).is_err());
    }

    #[test]
    fn regular_coronal_examples() {
        let c3 = MarkedSignedGraph::canonical(cycle(3, &Signature::AllPositive).unwrap());
        let t = mu_coronal(&c3).unwrap();
        assert_eq!(t.ratio(), regular_balanced_coronal(2, 3).unwrap());
        assert_eq!(t.ratio().to_string(), "3 / x - 2");

        let k4 = MarkedSignedGraph::canonical(complete(4, &Signature::AllPositive).unwrap());
        assert_eq!(mu_coronal(&k4).unwrap().ratio(), regular_balanced_coronal(3, 4).unwrap());

        let k1 = MarkedSignedGraph::canonical(SignedGraph::empty(1));
        assert_eq!(mu_coronal(&k1).unwrap().ratio(), regular_balanced_coronal(0, 1).unwrap());
        assert!(regular_balanced_coronal(3, 3).is_err());
    }

    #[test]
    fn raw_signed_regular_coronals_can_differ() {
        // All-positive vs all-negative K4 with all-positive marking.
        let mu = Marking::all_positive(4);
        let pos = signed_coronal(&complete(4, &Signature::AllPositive).unwrap().adjacency_matrix(), &mu).unwrap();
        let neg = signed_coronal(&complete(4, &Signature::AllNegative).unwrap().adjacency_matrix(), &mu).unwrap();
        assert_eq!(pos.ratio().to_string(), "4 / x - 3");
        assert_eq!(neg.ratio().to_string(), "4 / x + 3");
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(signed_coronal(&k2_plus(), &Marking::all_positive(3)).is_err());
        assert!(signed_coronal(&Matrix::zeros(2, 3), &Marking::all_positive(2)).is_err());
    }

    #[test]
    fn point_evaluation_matches() {
        let g = cycle(5, &Signature::parse("+-++-").unwrap()).unwrap();
        let mu = g.canonical_marking();
        let a = g.adjacency_matrix();
        let t = signed_coronal(&a, &mu).unwrap();
        for x0 in [int(7), Scalar::new(1.into(), 3.into()), int(-4)] {
            let direct = coronal_at_point(&a, &mu, &x0).unwrap().unwrap();
            assert_eq!(t.ratio().eval(&x0).unwrap(), direct);
        }
    }
}
