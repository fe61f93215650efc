//! Integral products and non-cospectral equienergetic pairs.

use serde::Serialize;

use crate::algebra::{charpoly, compose_with_rational, int, integer_roots, real_roots, Poly, Scalar};
use crate::coronal::{mu_coronal, regular_balanced_coronal, star_coronal_closed_form};
use crate::error::{Error, Result};
use crate::graph::generators::{complete_bipartite, line_graph, prism, star, Family, Signature};
use crate::graph::{MarkedSignedGraph, Sign, SignedGraph};
use crate::product::product;
use crate::spectra::{energy, integrality_of, is_integral};
use crate::theorems::adjacency_factored;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorVerdict {
    /// `x-power`, `r-factor` or `bracket-product`.
    pub factor: &'static str,
    pub polynomial: String,
    pub exponent: usize,
    /// Distinct-with-multiplicity integer roots of `polynomial`, descending.
    pub integer_roots: Vec<i64>,
    /// Monic cofactor left after extracting the integer roots.
    pub remaining: String,
    pub integral: bool,
}

fn factor_verdict(factor: &'static str, p: &Poly, exponent: usize) -> Result<FactorVerdict> {
    let found = integer_roots(p)?;
    Ok(FactorVerdict {
        factor,
        polynomial: p.to_string(),
        exponent,
        integer_roots: found.roots.iter().map(big_to_i64).collect(),
        remaining: found.quotient.to_string(),
        integral: found.is_complete(),
    })
}

fn big_to_i64(b: &num_bigint::BigInt) -> i64 {
    num_traits::ToPrimitive::to_i64(b).expect("graph eigenvalues are bounded by the vertex count")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub overall: bool,
    pub per_factor: Vec<FactorVerdict>,
    /// `is_integral` of the explicitly built product.
    pub direct_integral: bool,
    pub agrees: bool,
}

/// Integrality of `Σ₁ ⊛ Σ₂` from the three factors of its adjacency
/// polynomial, cross-checked against the constructed product.
pub fn integral_product_check(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<IntegralityReport> {
    let f = adjacency_factored(mg1, mg2)?;
    let mut per_factor = Vec::with_capacity(3);
    if f.power_factor.1 > 0 {
        per_factor.push(factor_verdict("x-power", &f.power_factor.0, f.power_factor.1)?);
    }
    if !f.r_factor.0.is_constant() {
        per_factor.push(factor_verdict("r-factor", &f.r_factor.0, f.r_factor.1)?);
    }
    per_factor.push(factor_verdict("bracket-product", &f.bracket_product, 1)?);
    let overall = per_factor.iter().all(|v| v.integral);
    let direct_integral = is_integral(product(mg1, mg2)?.result())?.integral;
    Ok(IntegralityReport {
        overall,
        per_factor,
        direct_integral,
        agrees: overall == direct_integral,
    })
}

/// The signed star `K_{1,n}` (center 0) under its canonical marking, with
/// the first edge carrying `center_mark` and the rest positive.
pub fn signed_star(n: usize, center_mark: Sign) -> Result<MarkedSignedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs n ≥ 1 leaves".into()));
    }
    let mut signs = vec![Sign::Plus; n];
    signs[0] = center_mark;
    Ok(MarkedSignedGraph::canonical(star(n + 1, &Signature::Explicit(signs))?))
}

/// Numerator and `λ`-coefficient of the star cubic, so that the cubic for an
/// eigenvalue `λ` is `num − λ·den`. `num` follows the coronal substitution
/// `x(x²−n) − n₂((n+1)x + 2nc)`, `den = n₂(x² − n)`.
pub fn star_cubic_parts(n: usize, c: Sign) -> (Poly, Poly) {
    let (n, n2) = (n as i64, n as i64 + 1);
    let num = Poly::from_i64(&[-2 * n * n2 * c.value(), -n - n2 * (n + 1), 0, 1]);
    let den = Poly::from_i64(&[-n * n2, 0, n2]);
    (num, den)
}

/// The same cubic as printed with middle coefficient `−(n₂² − n₂ + 1)`.
pub fn printed_star_cubic_parts(n: usize, c: Sign) -> (Poly, Poly) {
    let n2 = n as i64 + 1;
    let num = Poly::from_i64(&[-2 * n2 * (n2 - 1) * c.value(), -(n2 * n2 - n2 + 1), 0, 1]);
    let den = Poly::from_i64(&[-n2 * (n2 - 1), 0, n2]);
    (num, den)
}

/// `x³ − n₂λx² − (n₂² + n₂ − 1)x + n₂(n₂ − 1)(λ − 2c)`.
pub fn expanded_star_cubic(n2: usize, lambda: &Scalar, c: Sign) -> Poly {
    let n2 = int(n2 as i64);
    let one = int(1);
    Poly::new(vec![
        &n2 * (&n2 - &one) * (lambda - int(2 * c.value())),
        -(&n2 * &n2 + &n2 - &one),
        -(&n2 * lambda),
        one,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubicAudit {
    /// The coronal substitution expands to [`expanded_star_cubic`].
    pub substitution_matches_expansion: bool,
    /// The coronal substitution matches the printed middle coefficient.
    pub substitution_matches_printed: bool,
}

/// Compares the star cubic from the closed-form coronal against the expanded
/// formula and the printed one. Every coefficient is affine in `λ`, so
/// agreement at two values of `λ` is agreement as polynomials in `λ`.
pub fn star_cubic_audit(n: usize, c: Sign) -> Result<CubicAudit> {
    let chi = star_coronal_closed_form(n, c)?;
    let n2 = n + 1;
    let n2s = int(n2 as i64);
    // unreduced: for n = 1 the closed form cancels a common factor
    let (num, den) = (
        Poly::from_i64(&[2 * n as i64 * c.value(), n as i64 + 1]),
        Poly::from_i64(&[-(n as i64), 0, 1]),
    );
    if crate::algebra::RationalFn::new(num.clone(), den.clone())? != chi {
        return Ok(CubicAudit {
            substitution_matches_expansion: false,
            substitution_matches_printed: false,
        });
    }
    let (pnum, pden) = printed_star_cubic_parts(n, c);
    let mut expansion = true;
    let mut printed = true;
    for lambda in [int(0), int(1), Scalar::new((-3).into(), 2.into())] {
        // (x² − n)·[x − n₂(λ + P/F)] with F = x² − n.
        let sub = &(&(&Poly::x() - &Poly::constant(&n2s * &lambda)) * &den) - &num.scale(&n2s);
        expansion &= sub == expanded_star_cubic(n2, &lambda, c);
        printed &= sub == &pnum - &pden.scale(&lambda);
    }
    Ok(CubicAudit {
        substitution_matches_expansion: expansion,
        substitution_matches_printed: printed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarIntegralityReport {
    pub n: usize,
    pub center_mark: Sign,
    /// `∏_i cubic(λ′_i)` over the spectrum of `A(Σ₁μ)`.
    pub cubic_product: String,
    pub integer_roots: Vec<i64>,
    pub integral: bool,
    /// Verdict when the coronal of the signed star itself (center mark as
    /// given) is substituted instead of the coronal of its μ-signed graph.
    pub given_center_mark_verdict: bool,
    /// Verdict from the cubic with the printed middle coefficient.
    pub printed_cubic_verdict: bool,
    /// `K_{1,n}` is integral iff `n` is a perfect square.
    pub star_integral: bool,
    pub audit: CubicAudit,
    pub product_check: bool,
    pub agrees_with_product_check: bool,
}

fn is_canonical_star(mg2: &MarkedSignedGraph) -> bool {
    let g = mg2.graph();
    let n2 = g.n();
    n2 >= 2
        && g.edge_count() == n2 - 1
        && (1..n2).all(|v| g.sign(0, v).is_some())
        && mg2.marking() == &g.canonical_marking()
}

/// Integrality of `Σ₁ ⊛ K_{1,n}` via the star cubic.
pub fn star_product_integral_check(mg1: &MarkedSignedGraph, n: usize, center_mark: Sign) -> Result<StarIntegralityReport> {
    star_product_integral_check_for(mg1, &signed_star(n, center_mark)?)
}

/// As [`star_product_integral_check`] for an explicitly given star, which
/// must have its center at vertex 0 and carry its canonical marking.
pub fn star_product_integral_check_for(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
) -> Result<StarIntegralityReport> {
    if !is_canonical_star(mg2) {
        return Err(Error::NotStar);
    }
    let n = mg2.n() - 1;
    let center_mark = mg2.marking().get(0);
    let g = charpoly(&mg1.mu_signed_graph().adjacency_matrix())?;
    let composed = |(num, den): (Poly, Poly)| compose_with_rational(&g, &num, &den);

    // The μ-signed star is K_{1,n} with an all-ones-equivalent marking, so
    // its coronal is the closed form with center mark +1.
    let cubic_product = composed(star_cubic_parts(n, Sign::Plus))?;
    let verdict = integrality_of(&cubic_product)?;
    let given = integrality_of(&composed(star_cubic_parts(n, center_mark))?)?;
    let printed = integrality_of(&composed(printed_star_cubic_parts(n, Sign::Plus))?)?;
    let root = (n as f64).sqrt().round() as usize;
    let product_check = integral_product_check(mg1, mg2)?.overall;
    Ok(StarIntegralityReport {
        n,
        center_mark,
        cubic_product: cubic_product.to_string(),
        integer_roots: verdict.roots.iter().map(big_to_i64).collect(),
        integral: verdict.integral,
        given_center_mark_verdict: given.integral,
        printed_cubic_verdict: printed.integral,
        star_integral: root * root == n,
        audit: star_cubic_audit(n, center_mark)?,
        product_check,
        agrees_with_product_check: verdict.integral == product_check,
    })
}

/// First factors used by the star search: every family member with
/// `1 ≤ size ≤ max_n1`, all-positive and all-negative, canonical marking.
pub fn small_first_factors(max_n1: usize) -> Vec<(String, MarkedSignedGraph)> {
    let mut out = Vec::new();
    for fam in [Family::Star, Family::Path, Family::Cycle, Family::Complete] {
        for size in fam.min_size()..=max_n1 {
            for (tag, sig) in [("+", Signature::AllPositive), ("-", Signature::AllNegative)] {
                let g = fam.build(size, &sig).expect("size within family range");
                if tag == "-" && g.edge_count() == 0 {
                    continue;
                }
                out.push((format!("{fam}({size}){tag}"), MarkedSignedGraph::canonical(g)));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarSearchEntry {
    pub first: String,
    pub report: StarIntegralityReport,
}

/// Runs the star check over [`small_first_factors`] × `K_{1,n}` for
/// `n ≤ max_n` and both center marks.
pub fn integral_star_search(max_n1: usize, max_n: usize) -> Result<Vec<StarSearchEntry>> {
    let mut out = Vec::new();
    for (first, mg1) in small_first_factors(max_n1) {
        for n in 1..=max_n {
            for c in [Sign::Plus, Sign::Minus] {
                out.push(StarSearchEntry {
                    first: first.clone(),
                    report: star_product_integral_check(&mg1, n, c)?,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub mu_graphs_non_cospectral: bool,
    pub mu_graphs_equienergetic: bool,
    pub equal_coronal: bool,
    /// `regular-closed-form` when both inputs are r-regular of the same order.
    pub coronal_route: &'static str,
    pub coronals: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductSummary {
    #[serde(skip)]
    pub graph: MarkedSignedGraph,
    pub vertices: usize,
    pub edges: usize,
    #[serde(serialize_with = "serialize_poly")]
    pub charpoly: Poly,
    pub energy: f64,
    /// `n·Σ|roots of R′ᵢ| + Σ|roots of Π|`.
    pub decomposed_energy: f64,
    pub bracket_product: String,
}

fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coeff_strings())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquienergeticCertificate {
    pub valid: bool,
    pub failed_clause: Option<String>,
    pub tolerance: f64,
    pub input_energies: [f64; 2],
    pub hypotheses: Hypotheses,
    pub products: Option<[ProductSummary; 2]>,
    pub products_cospectral: Option<bool>,
    pub energy_difference: Option<f64>,
    pub bracket_products_equal: Option<bool>,
    pub decomposition_holds: Option<bool>,
}

fn abs_root_sum(p: &Poly) -> Result<f64> {
    Ok(real_roots(p)?.iter().map(|r| r.abs()).sum())
}

fn product_summary(mg: &MarkedSignedGraph, mgi: &MarkedSignedGraph) -> Result<ProductSummary> {
    let pg = product(mg, mgi)?;
    let graph = pg.into_result();
    let f = adjacency_factored(mg, mgi)?;
    let decomposed = mg.n() as f64 * abs_root_sum(&f.r_factor.0)? + abs_root_sum(&f.bracket_product)?;
    Ok(ProductSummary {
        vertices: graph.n(),
        edges: graph.graph().edge_count(),
        charpoly: charpoly(&graph.graph().adjacency_matrix())?,
        energy: energy(&graph)?.value,
        decomposed_energy: decomposed,
        bracket_product: f.bracket_product.to_string(),
        graph,
    })
}

/// Checks the hypotheses on `mg1`, `mg2` and, when they hold, certifies that
/// `mg ⊛ mg1` and `mg ⊛ mg2` are non-cospectral and equienergetic.
pub fn equienergetic_family(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    mg: &MarkedSignedGraph,
    tol: f64,
) -> Result<EquienergeticCertificate> {
    let mu1 = MarkedSignedGraph::canonical(mg1.mu_signed_graph());
    let mu2 = MarkedSignedGraph::canonical(mg2.mu_signed_graph());
    let mu_graphs_non_cospectral = mg1.n() != mg2.n()
        || charpoly(&mu1.graph().adjacency_matrix())? != charpoly(&mu2.graph().adjacency_matrix())?;
    let input_energies = [energy(&mu1)?.value, energy(&mu2)?.value];
    let mu_graphs_equienergetic = (input_energies[0] - input_energies[1]).abs() <= tol;

    let regular = match (mg1.graph().regular_degree(), mg2.graph().regular_degree()) {
        (Some(r1), Some(r2)) if r1 == r2 && mg1.n() == mg2.n() && r1 < mg1.n() => Some(r1),
        _ => None,
    };
    let (equal_coronal, coronal_route, coronals) = match regular {
        Some(r) => {
            let c = regular_balanced_coronal(r, mg1.n())?.to_string();
            (true, "regular-closed-form", [c.clone(), c])
        }
        None => {
            let (t1, t2) = (mu_coronal(mg1)?, mu_coronal(mg2)?);
            (t1.same_coronal(&t2), "computed", [t1.ratio().to_string(), t2.ratio().to_string()])
        }
    };
    let hypotheses = Hypotheses {
        mu_graphs_non_cospectral,
        mu_graphs_equienergetic,
        equal_coronal,
        coronal_route,
        coronals,
    };
    let failed = [
        (mu_graphs_non_cospectral, "mu-graphs are cospectral"),
        (mu_graphs_equienergetic, "mu-graphs are not equienergetic"),
        (equal_coronal, "coronals differ"),
    ]
    .into_iter()
    .find(|(ok, _)| !ok)
    .map(|(_, clause)| clause.to_string());
    if failed.is_some() {
        return Ok(EquienergeticCertificate {
            valid: false,
            failed_clause: failed,
            tolerance: tol,
            input_energies,
            hypotheses,
            products: None,
            products_cospectral: None,
            energy_difference: None,
            bracket_products_equal: None,
            decomposition_holds: None,
        });
    }

    let p1 = product_summary(mg, mg1)?;
    let p2 = product_summary(mg, mg2)?;
    let products_cospectral = p1.charpoly == p2.charpoly;
    let energy_difference = (p1.energy - p2.energy).abs();
    let bracket_products_equal = p1.bracket_product == p2.bracket_product;
    let decomposition_holds = [&p1, &p2]
        .iter()
        .all(|p| (p.energy - p.decomposed_energy).abs() <= 2.0 * tol);
    let failed_clause = if products_cospectral {
        Some("products are cospectral".to_string())
    } else if energy_difference > tol {
        Some("product energies differ".to_string())
    } else {
        None
    };
    Ok(EquienergeticCertificate {
        valid: failed_clause.is_none(),
        failed_clause,
        tolerance: tol,
        input_energies,
        hypotheses,
        products: Some([p1, p2]),
        products_cospectral: Some(products_cospectral),
        energy_difference: Some(energy_difference),
        bracket_products_equal: Some(bracket_products_equal),
        decomposition_holds: Some(decomposition_holds),
    })
}

/// `(L²(K₃,₃), L²(C₃×K₂), K₂)`, all-positive with canonical markings.
pub fn line_graph_demo_inputs() -> (MarkedSignedGraph, MarkedSignedGraph, MarkedSignedGraph) {
    let twice = |g: SignedGraph| line_graph(&line_graph(&g));
    let k33 = complete_bipartite(3, 3, &Signature::AllPositive).expect("valid parts");
    let pr = prism(3, &Signature::AllPositive).expect("valid prism");
    let k2 = star(2, &Signature::AllPositive).expect("valid star");
    (
        MarkedSignedGraph::canonical(twice(k33)),
        MarkedSignedGraph::canonical(twice(pr)),
        MarkedSignedGraph::canonical(k2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path};

    fn canon(g: SignedGraph) -> MarkedSignedGraph {
        MarkedSignedGraph::canonical(g)
    }

    #[test]
    fn k2_with_k1_not_integral() {
        let k2 = canon(complete(2, &Signature::AllPositive).unwrap());
        let k1 = canon(SignedGraph::empty(1));
        let r = integral_product_check(&k2, &k1).unwrap();
        assert!(!r.overall && r.agrees);
        let bracket = r.per_factor.iter().find(|v| v.factor == "bracket-product").unwrap();
        assert_eq!(bracket.polynomial, "x^4 - 3x^2 + 1");
    }

    #[test]
    fn single_vertices_give_k2() {
        let k1 = canon(SignedGraph::empty(1));
        let r = integral_product_check(&k1, &k1).unwrap();
        assert!(r.overall && r.direct_integral);
        assert_eq!(r.per_factor.last().unwrap().integer_roots, vec![1, -1]);
    }

    #[test]
    fn star_path_single_vertex() {
        let k1 = canon(SignedGraph::empty(1));
        let r = star_product_integral_check(&k1, 1, Sign::Plus).unwrap();
        let direct = is_integral(product(&k1, &signed_star(1, Sign::Plus).unwrap()).unwrap().result()).unwrap();
        assert_eq!(r.integral, direct.integral);
        assert!(r.agrees_with_product_check);
    }

    #[test]
    fn non_star_rejected() {
        let k1 = canon(SignedGraph::empty(1));
        let p3 = canon(path(3, &Signature::AllPositive).unwrap());
        assert_eq!(star_product_integral_check_for(&k1, &p3).unwrap_err(), Error::NotStar);
        let s = star(3, &Signature::AllPositive).unwrap();
        let wrong = MarkedSignedGraph::new(s, crate::graph::Marking::new(vec![Sign::Minus, Sign::Plus, Sign::Plus])).unwrap();
        assert_eq!(star_product_integral_check_for(&k1, &wrong).unwrap_err(), Error::NotStar);
    }

    #[test]
    fn cubic_audit() {
        for n in 1..=6 {
            for c in [Sign::Plus, Sign::Minus] {
                let a = star_cubic_audit(n, c).unwrap();
                assert!(a.substitution_matches_expansion);
                assert!(!a.substitution_matches_printed);
            }
        }
    }

    #[test]
    fn star_search_agrees() {
        for e in integral_star_search(3, 3).unwrap() {
            assert!(e.report.agrees_with_product_check, "{} n={}", e.first, e.report.n);
        }
    }

    #[test]
    fn identical_inputs_fail_hypothesis() {
        let c4 = canon(cycle(4, &Signature::AllPositive).unwrap());
        let k2 = canon(complete(2, &Signature::AllPositive).unwrap());
        let cert = equienergetic_family(&c4, &c4, &k2, 1e-7).unwrap();
        assert!(!cert.valid);
        assert_eq!(cert.failed_clause.as_deref(), Some("mu-graphs are cospectral"));
        assert!(cert.products.is_none());
    }
}
