//! Factored characteristic polynomials of `Σ₁ ⊛ Σ₂`.
//!
//! Each factorization is assembled from the coronal triple `(P′, F′, R′)` of
//! `A(Σ₂μ)` and the characteristic polynomial `g` of `A(Σ₁μ)`. The product
//! over the eigenvalues `λ′_i` of `A(Σ₁μ)` is never formed from eigenvalues:
//! `∏_i (N(x) − λ′_i·D(x)) = D^{n₁}·g(N/D)` is expanded exactly instead.

use serde::{Deserialize, Serialize};

use crate::algebra::{charpoly, compose_with_rational, faddeev_leverrier, int, quadratic_form_from_terms, Poly, Scalar};
use crate::coronal::{coronal_at_point, mu_coronal, CoronalTriple};
use crate::error::Result;
use crate::graph::{MarkedSignedGraph, MatrixKind};
use crate::product::product;

/// Which constant to use for the degree of the `a`-vertices in the L and Q
/// factorizations of regular factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeMode {
    /// `n₂(r₁ + 1)`, the degree the construction actually produces.
    #[default]
    Constructed,
    /// `r₁ + 2n₂`, the constant stated alongside the published theorem.
    Paper,
}

impl DegreeMode {
    pub fn a_degree(self, r1: usize, n2: usize) -> usize {
        match self {
            DegreeMode::Constructed => n2 * (r1 + 1),
            DegreeMode::Paper => r1 + 2 * n2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DegreeMode::Constructed => "constructed",
            DegreeMode::Paper => "paper",
        }
    }
}

/// `power_factor.0^power_factor.1 · r_factor.0^r_factor.1 · bracket_product`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCharPoly {
    pub power_factor: (Poly, usize),
    pub r_factor: (Poly, usize),
    /// `∏_i [bracket_i]` over the spectrum of `A(Σ₁μ)`.
    pub bracket_product: Poly,
    /// Monic product of all three parts; degree `2n₁n₂`.
    pub assembled: Poly,
    /// Coronal triple of `A(Σ₂μ)` under `μ₂`.
    pub coronal: CoronalTriple,
    /// Characteristic polynomial of `A(Σ₁μ)`.
    pub first_charpoly: Poly,
}

impl FactoredCharPoly {
    fn assemble(
        power_factor: (Poly, usize),
        r_factor: (Poly, usize),
        bracket_product: Poly,
        coronal: CoronalTriple,
        first_charpoly: Poly,
    ) -> Self {
        let assembled =
            (&(&power_factor.0.pow(power_factor.1) * &r_factor.0.pow(r_factor.1)) * &bracket_product).monic();
        FactoredCharPoly {
            power_factor,
            r_factor,
            bracket_product,
            assembled,
            coronal,
            first_charpoly,
        }
    }

    /// Degrees of the three factors, `(n₁(n₂−1), n₁(n₂−d), n₁(d+1))`.
    pub fn factor_degrees(&self) -> (usize, usize, usize) {
        let deg = |p: &Poly| p.degree().unwrap_or(0);
        (
            deg(&self.power_factor.0) * self.power_factor.1,
            deg(&self.r_factor.0) * self.r_factor.1,
            deg(&self.bracket_product),
        )
    }
}

struct Inputs {
    n1: usize,
    n2: usize,
    g: Poly,
    triple: CoronalTriple,
}

fn inputs(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<Inputs> {
    Ok(Inputs {
        n1: mg1.n(),
        n2: mg2.n(),
        g: charpoly(&mg1.mu_signed_graph().adjacency_matrix())?,
        triple: mu_coronal(mg2)?,
    })
}

/// Adjacency polynomial:
/// `x^{n₁(n₂−1)} R′(x)^{n₁} ∏_i [xF′(x) − n₂(λ′_i F′(x) + P′(x))]`.
pub fn adjacency_factored(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<FactoredCharPoly> {
    let Inputs { n1, n2, g, triple } = inputs(mg1, mg2)?;
    let n2s = int(n2 as i64);
    let num = &(&Poly::x() * &triple.f) - &triple.p.scale(&n2s);
    let den = triple.f.scale(&n2s);
    let bracket = compose_with_rational(&g, &num, &den)?;
    Ok(FactoredCharPoly::assemble(
        (Poly::x(), n1 * (n2 - 1)),
        (triple.r.clone(), n1),
        bracket,
        triple,
        g,
    ))
}

struct RegularShape {
    d_a: usize,
    d_b: usize,
}

fn regular_shape(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph, mode: DegreeMode) -> Result<RegularShape> {
    let r1 = mg1.graph().check_regular()?;
    let r2 = mg2.graph().check_regular()?;
    Ok(RegularShape {
        d_a: mode.a_degree(r1, mg2.n()),
        d_b: r2 + mg2.n(),
    })
}

/// `d_b − x`.
fn reflect(d_b: usize) -> Poly {
    Poly::from_i64(&[d_b as i64, -1])
}

/// `x − d_b`.
fn shift(d_b: usize) -> Poly {
    Poly::from_i64(&[-(d_b as i64), 1])
}

/// Laplacian polynomial for regular factors. With `t = d_b − x`:
/// `(x−d_a)^{n₁(n₂−1)} R′(t)^{n₁} ∏_i [(x−d_a)F′(t) + n₂(λ′_i F′(t) + P′(t))]`.
///
/// The bracket carries `+n₂(…)`: the lower-right Schur block is
/// `(x − d_b)I + I⊗A(Σ₂μ) = −(tI − I⊗A(Σ₂μ))`, so the cross term enters with
/// the opposite sign to the signless case.
pub fn laplacian_factored(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    mode: DegreeMode,
) -> Result<FactoredCharPoly> {
    let RegularShape { d_a, d_b } = regular_shape(mg1, mg2, mode)?;
    let Inputs { n1, n2, g, triple } = inputs(mg1, mg2)?;
    let t = reflect(d_b);
    let (f_t, p_t, r_t) = (triple.f.compose(&t), triple.p.compose(&t), triple.r.compose(&t));
    let lin = Poly::linear(int(d_a as i64));
    let n2s = int(n2 as i64);
    // ∏(num + λ·den) = (−1)^{n₁}·∏(−num − λ·den)
    let num = &(&lin * &f_t) + &p_t.scale(&n2s);
    let den = f_t.scale(&n2s);
    let mut bracket = compose_with_rational(&g, &-&num, &den)?;
    if n1 % 2 == 1 {
        bracket = -&bracket;
    }
    Ok(FactoredCharPoly::assemble((lin, n1 * (n2 - 1)), (r_t, n1), bracket, triple, g))
}

/// The Laplacian factorization with the bracket sign as published,
/// `[(x−d_a)F′(t) − n₂(λ′_i F′(t) + P′(t))]`, monic. Kept for comparison
/// reports only.
pub fn laplacian_printed_form(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    mode: DegreeMode,
) -> Result<Poly> {
    let RegularShape { d_a, d_b } = regular_shape(mg1, mg2, mode)?;
    let Inputs { n1, n2, g, triple } = inputs(mg1, mg2)?;
    let t = reflect(d_b);
    let (f_t, p_t, r_t) = (triple.f.compose(&t), triple.p.compose(&t), triple.r.compose(&t));
    let lin = Poly::linear(int(d_a as i64));
    let n2s = int(n2 as i64);
    let num = &(&lin * &f_t) - &p_t.scale(&n2s);
    let bracket = compose_with_rational(&g, &num, &f_t.scale(&n2s))?;
    Ok(FactoredCharPoly::assemble((lin, n1 * (n2 - 1)), (r_t, n1), bracket, triple, g).assembled)
}

/// Signless Laplacian polynomial for regular factors. With `s = x − d_b`:
/// `(x−d_a)^{n₁(n₂−1)} R′(s)^{n₁} ∏_i [(x−d_a)F′(s) − n₂(λ′_i F′(s) + P′(s))]`.
pub fn signless_factored(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    mode: DegreeMode,
) -> Result<FactoredCharPoly> {
    let RegularShape { d_a, d_b } = regular_shape(mg1, mg2, mode)?;
    let Inputs { n1, n2, g, triple } = inputs(mg1, mg2)?;
    let s = shift(d_b);
    let (f_s, p_s, r_s) = (triple.f.compose(&s), triple.p.compose(&s), triple.r.compose(&s));
    let lin = Poly::linear(int(d_a as i64));
    let n2s = int(n2 as i64);
    let num = &(&lin * &f_s) - &p_s.scale(&n2s);
    let bracket = compose_with_rational(&g, &num, &f_s.scale(&n2s))?;
    Ok(FactoredCharPoly::assemble((lin, n1 * (n2 - 1)), (r_s, n1), bracket, triple, g))
}

/// Factored form for the requested matrix; `mode` is ignored for `A`.
pub fn factored(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    kind: MatrixKind,
    mode: DegreeMode,
) -> Result<FactoredCharPoly> {
    match kind {
        MatrixKind::Adjacency => adjacency_factored(mg1, mg2),
        MatrixKind::Laplacian => laplacian_factored(mg1, mg2, mode),
        MatrixKind::SignlessLaplacian => signless_factored(mg1, mg2, mode),
    }
}

/// Characteristic polynomial of the requested matrix of the explicitly
/// constructed product.
pub fn direct_charpoly(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph, kind: MatrixKind) -> Result<Poly> {
    let pg = product(mg1, mg2)?;
    charpoly(&pg.result().graph().matrix(kind))
}

/// Corona adjacency polynomial `f(A(Σ₂μ))^{n₁} ∏_i (x − λ′_i − χ(x))`, built
/// from the unreduced coronal `p/f` so it shares no code path with the
/// reduced-triple factorization.
pub fn corona_adjacency_charpoly(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<Poly> {
    let g = charpoly(&mg1.mu_signed_graph().adjacency_matrix())?;
    let fl = faddeev_leverrier(&mg2.mu_signed_graph().adjacency_matrix())?;
    let p = quadratic_form_from_terms(&fl.adjugate_terms, &mg2.marking().as_scalars());
    let f = fl.charpoly;
    let num = &(&Poly::x() * &f) - &p;
    Ok(compose_with_rational(&g, &num, &f)?.monic())
}

/// Right-hand side of the unreduced adjacency identity
/// `x^{n₁(n₂−1)} f(A(Σ₂μ),x)^{n₁} ∏_i [x − n₂(λ′_i + χ(x))]` at a rational
/// point, with `χ(x₀)` from a direct linear solve. `None` at a pole.
pub fn unreduced_identity_at(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    x0: &Scalar,
) -> Result<Option<Scalar>> {
    let (n1, n2) = (mg1.n(), mg2.n());
    let a2 = mg2.mu_signed_graph().adjacency_matrix();
    let Some(chi) = coronal_at_point(&a2, mg2.marking(), x0)? else {
        return Ok(None);
    };
    let g = charpoly(&mg1.mu_signed_graph().adjacency_matrix())?;
    let f2 = charpoly(&a2)?;
    let n2s = int(n2 as i64);
    // ∏_i (y − n₂λ_i) = n₂^{n₁} g(y / n₂)
    let y = x0 - &n2s * chi;
    let bracket = num_traits::pow(n2s.clone(), n1) * g.eval(&(y / &n2s));
    Ok(Some(
        num_traits::pow(x0.clone(), n1 * (n2 - 1)) * num_traits::pow(f2.eval(x0), n1) * bracket,
    ))
}

/// Which pair of products a co-spectrality check compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `Σ_A ⊛ Σ` vs `Σ_B ⊛ Σ`.
    Left,
    /// `Σ ⊛ Σ_A` vs `Σ ⊛ Σ_B`; additionally needs equal coronals.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CospectralFamilyReport {
    pub side: Side,
    /// `A(Σ_Aμ)` and `A(Σ_Bμ)` have equal characteristic polynomials.
    pub mu_graphs_cospectral: bool,
    /// Reduced coronals of the μ-signed inputs agree (checked for `Right` only).
    pub coronals_equal: Option<bool>,
    pub hypothesis_holds: bool,
    pub products_a_cospectral: bool,
    /// Checked when all three inputs are regular.
    pub products_l_cospectral: Option<bool>,
    pub products_q_cospectral: Option<bool>,
    pub conclusion_holds: bool,
    /// `false` only when the hypothesis holds and the conclusion does not.
    pub pass: bool,
}

pub fn cospectral_family_check(
    mg_a: &MarkedSignedGraph,
    mg_b: &MarkedSignedGraph,
    mg: &MarkedSignedGraph,
    side: Side,
) -> Result<CospectralFamilyReport> {
    let mu_a = charpoly(&mg_a.mu_signed_graph().adjacency_matrix())?;
    let mu_b = charpoly(&mg_b.mu_signed_graph().adjacency_matrix())?;
    let mu_graphs_cospectral = mu_a == mu_b;
    let coronals_equal = match side {
        Side::Left => None,
        Side::Right => Some(mu_coronal(mg_a)?.same_coronal(&mu_coronal(mg_b)?)),
    };
    let hypothesis_holds = mu_graphs_cospectral && coronals_equal.unwrap_or(true);

    let (pa, pb) = match side {
        Side::Left => (product(mg_a, mg)?, product(mg_b, mg)?),
        Side::Right => (product(mg, mg_a)?, product(mg, mg_b)?),
    };
    let same = |kind: MatrixKind| -> Result<bool> {
        Ok(charpoly(&pa.result().graph().matrix(kind))? == charpoly(&pb.result().graph().matrix(kind))?)
    };
    let all_regular = [mg_a, mg_b, mg].iter().all(|m| m.graph().regular_degree().is_some());
    let products_a_cospectral = same(MatrixKind::Adjacency)?;
    let (products_l_cospectral, products_q_cospectral) = if all_regular {
        (Some(same(MatrixKind::Laplacian)?), Some(same(MatrixKind::SignlessLaplacian)?))
    } else {
        (None, None)
    };
    let conclusion_holds = products_a_cospectral
        && products_l_cospectral.unwrap_or(true)
        && products_q_cospectral.unwrap_or(true);
    Ok(CospectralFamilyReport {
        side,
        mu_graphs_cospectral,
        coronals_equal,
        hypothesis_holds,
        products_a_cospectral,
        products_l_cospectral,
        products_q_cospectral,
        conclusion_holds,
        pass: !hypothesis_holds || conclusion_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path};
    use crate::graph::{Marking, Signature, SignedGraph};
    use crate::product::corona;

    fn canon(g: SignedGraph) -> MarkedSignedGraph {
        MarkedSignedGraph::canonical(g)
    }

    fn k1() -> MarkedSignedGraph {
        canon(SignedGraph::empty(1))
    }

    fn k2() -> MarkedSignedGraph {
        canon(complete(2, &Signature::AllPositive).unwrap())
    }

    #[test]
    fn k2_with_k1_is_path_p4() {
        let f = adjacency_factored(&k2(), &k1()).unwrap();
        assert_eq!(f.assembled, Poly::from_i64(&[1, 0, -3, 0, 1]));
        let p4 = charpoly(&path(4, &Signature::AllPositive).unwrap().adjacency_matrix()).unwrap();
        assert_eq!(f.assembled, p4);
    }

    #[test]
    fn adjacency_matches_direct_on_small_cases() {
        let c3 = canon(cycle(3, &Signature::parse("+--").unwrap()).unwrap());
        let p3 = MarkedSignedGraph::new(
            path(3, &Signature::parse("-+").unwrap()).unwrap(),
            Marking::new(vec![crate::graph::Sign::Minus, crate::graph::Sign::Plus, crate::graph::Sign::Plus]),
        )
        .unwrap();
        for (a, b) in [(&c3, &p3), (&p3, &c3), (&k2(), &c3), (&c3, &k1())] {
            let f = adjacency_factored(a, b).unwrap();
            assert_eq!(f.assembled, direct_charpoly(a, b, MatrixKind::Adjacency).unwrap());
            let (e0, e1, e2) = f.factor_degrees();
            assert_eq!(e0 + e1 + e2, 2 * a.n() * b.n());
        }
    }

    #[test]
    fn k1_k1_laplacian_sign() {
        // K1 ⊛ K1 = K2 with L-polynomial x² − 2x.
        let f = laplacian_factored(&k1(), &k1(), DegreeMode::Constructed).unwrap();
        assert_eq!(f.assembled, Poly::from_i64(&[0, -2, 1]));
        let printed = laplacian_printed_form(&k1(), &k1(), DegreeMode::Constructed).unwrap();
        assert_eq!(printed, Poly::from_i64(&[2, -2, 1]));
        let q = signless_factored(&k1(), &k1(), DegreeMode::Constructed).unwrap();
        assert_eq!(q.assembled, Poly::from_i64(&[0, -2, 1]));
    }

    #[test]
    fn laplacian_and_signless_match_direct() {
        let c3 = canon(cycle(3, &Signature::parse("+-+").unwrap()).unwrap());
        let k3 = canon(complete(3, &Signature::AllNegative).unwrap());
        let c4 = canon(cycle(4, &Signature::parse("--+-").unwrap()).unwrap());
        for (a, b) in [(&c3, &k2()), (&k2(), &c4), (&k3, &c3), (&c4, &k1())] {
            let l = laplacian_factored(a, b, DegreeMode::Constructed).unwrap();
            assert_eq!(l.assembled, direct_charpoly(a, b, MatrixKind::Laplacian).unwrap());
            let q = signless_factored(a, b, DegreeMode::Constructed).unwrap();
            assert_eq!(q.assembled, direct_charpoly(a, b, MatrixKind::SignlessLaplacian).unwrap());
        }
    }

    #[test]
    fn non_regular_input_rejected() {
        let p3 = canon(path(3, &Signature::AllPositive).unwrap());
        let err = laplacian_factored(&p3, &k2(), DegreeMode::Constructed).unwrap_err();
        assert!(err.to_string().contains("vertex 1"), "{err}");
        assert!(signless_factored(&k2(), &p3, DegreeMode::Paper).is_err());
    }

    #[test]
    fn corona_polynomial_agrees_with_n2_equals_one() {
        let c4 = canon(cycle(4, &Signature::parse("+-+-").unwrap()).unwrap());
        let a = adjacency_factored(&c4, &k1()).unwrap().assembled;
        assert_eq!(a, corona_adjacency_charpoly(&c4, &k1()).unwrap());
        let cor = corona(&c4, &k1()).unwrap();
        assert_eq!(a, charpoly(&cor.graph().adjacency_matrix()).unwrap());
    }

    #[test]
    fn unreduced_identity_point_check() {
        let c3 = canon(cycle(3, &Signature::parse("+--").unwrap()).unwrap());
        let s = canon(crate::graph::generators::star(4, &Signature::parse("+-+").unwrap()).unwrap());
        let f = adjacency_factored(&c3, &s).unwrap();
        for x0 in [int(5), Scalar::new(7.into(), 3.into()), int(-9)] {
            let rhs = unreduced_identity_at(&c3, &s, &x0).unwrap().unwrap();
            assert_eq!(f.assembled.eval(&x0), rhs);
        }
    }

    #[test]
    fn cospectral_family_examples() {
        let c3p = canon(cycle(3, &Signature::AllPositive).unwrap());
        let c3n = canon(cycle(3, &Signature::AllNegative).unwrap());
        let r = cospectral_family_check(&c3p, &c3n, &k2(), Side::Left).unwrap();
        assert!(r.hypothesis_holds && r.conclusion_holds && r.pass);

        let r = cospectral_family_check(&k2(), &k2(), &c3p, Side::Right).unwrap();
        assert!(r.hypothesis_holds && r.pass);
    }
}
