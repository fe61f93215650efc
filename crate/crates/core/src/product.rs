//! The marked signed graph product `Σ₁ ⊛ Σ₂`.
//!
//! Vertex layout: `a_{ik}` (i over Σ₁, k over Σ₂) at index `i·n₂ + k`, then
//! `b_{iq}` at `n₁n₂ + i·n₂ + q`. Edges:
//!
//! * `a_{ik} ~ a_{jl}` for every edge `u_i u_j` of Σ₁ and all `k, l`;
//! * `b_{ri} ~ b_{rj}` for every edge `v_i v_j` of Σ₂ and all `r`;
//! * `a_{ip} ~ b_{iq}` for all `i, p, q`.
//!
//! Every edge is signed by the product of its endpoint marks, with
//! `mark(a_{ik}) = μ₁(u_i)` and `mark(b_{iq}) = μ₂(v_q)`.

use crate::algebra::{Matrix, Scalar};
use crate::error::{Error, Result};
use crate::graph::{MarkedSignedGraph, Marking, Sign, SignedGraph};

/// Where a product vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductVertex {
    /// `a_{ik}`: copy `k` of Σ₁-vertex `i`.
    A { i: usize, k: usize },
    /// `b_{iq}`: Σ₂-vertex `q` in the copy attached to Σ₁-vertex `i`.
    B { i: usize, q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    result: MarkedSignedGraph,
    n1: usize,
    n2: usize,
}

impl ProductGraph {
    pub fn result(&self) -> &MarkedSignedGraph {
        &self.result
    }

    pub fn into_result(self) -> MarkedSignedGraph {
        self.result
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn a_index(&self, i: usize, k: usize) -> usize {
        i * self.n2 + k
    }

    pub fn b_index(&self, i: usize, q: usize) -> usize {
        self.n1 * self.n2 + i * self.n2 + q
    }

    pub fn origin(&self, v: usize) -> ProductVertex {
        let half = self.n1 * self.n2;
        if v < half {
            ProductVertex::A {
                i: v / self.n2,
                k: v % self.n2,
            }
        } else {
            let w = v - half;
            ProductVertex::B {
                i: w / self.n2,
                q: w % self.n2,
            }
        }
    }

    /// Underlying degree of every product vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.result.graph().degrees()
    }
}

/// `2·n₁·n₂`.
pub fn expected_vertex_count(n1: usize, n2: usize) -> usize {
    2 * n1 * n2
}

/// `n₂²(n₁ + e₁) + n₁e₂`.
pub fn expected_edge_count(n1: usize, e1: usize, n2: usize, e2: usize) -> usize {
    n2 * n2 * (n1 + e1) + n1 * e2
}

/// Builds `Σ₁ ⊛ Σ₂` edge by edge.
pub fn product(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<ProductGraph> {
    let (n1, n2) = (mg1.n(), mg2.n());
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidParameter("product factors must be nonempty".into()));
    }
    let a = |i: usize, k: usize| i * n2 + k;
    let b = |i: usize, q: usize| n1 * n2 + i * n2 + q;
    let mu1 = mg1.marking();
    let mu2 = mg2.marking();

    let mut marks = Vec::with_capacity(2 * n1 * n2);
    for i in 0..n1 {
        marks.extend(std::iter::repeat_n(mu1.get(i), n2));
    }
    for _ in 0..n1 {
        marks.extend_from_slice(mu2.signs());
    }

    let mut edges = Vec::new();
    for e in mg1.graph().edges() {
        let s = mu1.get(e.u) * mu1.get(e.v);
        for k in 0..n2 {
            for l in 0..n2 {
                edges.push((a(e.u, k), a(e.v, l), s));
            }
        }
    }
    for e in mg2.graph().edges() {
        let s = mu2.get(e.u) * mu2.get(e.v);
        for r in 0..n1 {
            edges.push((b(r, e.u), b(r, e.v), s));
        }
    }
    for i in 0..n1 {
        for p in 0..n2 {
            for q in 0..n2 {
                edges.push((a(i, p), b(i, q), mu1.get(i) * mu2.get(q)));
            }
        }
    }
    let graph = SignedGraph::new(2 * n1 * n2, edges)?;
    let result = MarkedSignedGraph::new(graph, Marking::new(marks))?;
    Ok(ProductGraph { result, n1, n2 })
}

/// `φ(Σ₁) = diag(μ₁)`.
pub fn phi(mg1: &MarkedSignedGraph) -> Matrix {
    mg1.marking().as_diagonal()
}

/// Adjacency of `Σ₁ ⊛ Σ₂` assembled from Kronecker blocks:
/// `[[A(Σ₁μ)⊗J, φ⊗(1μ₂ᵀ)], [φ⊗(μ₂1ᵀ), I⊗A(Σ₂μ)]]`.
pub fn block_adjacency(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<Matrix> {
    let (n1, n2) = (mg1.n(), mg2.n());
    let a1 = mg1.mu_signed_graph().adjacency_matrix();
    let a2 = mg2.mu_signed_graph().adjacency_matrix();
    let phi = phi(mg1);
    let ones = Matrix::ones(n2, 1);
    let mu2 = Matrix::column(&mg2.marking().as_scalars());
    let top_right = phi.kron(&ones.try_mul(&mu2.transpose())?);
    let bottom_left = phi.kron(&mu2.try_mul(&ones.transpose())?);
    Matrix::block2(
        &a1.kron(&Matrix::ones(n2, n2)),
        &top_right,
        &bottom_left,
        &Matrix::identity(n1).kron(&a2),
    )
}

/// The Schur cross term `{φ⊗(1μᵀ)}(x₀I − I⊗A(Σ₂μ))⁻¹{φ⊗(μ1ᵀ)}` evaluated
/// exactly at a rational point; `None` when `x₀` is an eigenvalue of `A(Σ₂μ)`.
pub fn schur_cross_term(
    mg1: &MarkedSignedGraph,
    mg2: &MarkedSignedGraph,
    x0: &Scalar,
) -> Result<Option<Matrix>> {
    let (n1, n2) = (mg1.n(), mg2.n());
    let a2 = mg2.mu_signed_graph().adjacency_matrix();
    let phi = phi(mg1);
    let ones = Matrix::ones(n2, 1);
    let mu2 = Matrix::column(&mg2.marking().as_scalars());
    let left = phi.kron(&ones.try_mul(&mu2.transpose())?);
    let right = phi.kron(&mu2.try_mul(&ones.transpose())?);
    let middle = Matrix::identity(n1).kron(&a2).char_matrix_at(x0)?;
    match middle.solve(&right) {
        Ok(sol) => Ok(Some(left.try_mul(&sol)?)),
        Err(Error::InvalidParameter(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Signed corona `Σ₁ ∘ Σ₂` of the μ-signed graphs: vertex `i` of Σ₁ gets its
/// own copy of Σ₂ (vertices `n₁ + i·n₂ + q`) and is joined to every vertex of
/// it with sign `μ₁(u_i)·μ₂(v_q)`. Built independently of [`product`].
pub fn corona(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Result<MarkedSignedGraph> {
    let (n1, n2) = (mg1.n(), mg2.n());
    let g1 = mg1.mu_signed_graph();
    let g2 = mg2.mu_signed_graph();
    let mut edges: Vec<(usize, usize, Sign)> = g1.edges().map(|e| (e.u, e.v, e.sign)).collect();
    let mut marks = mg1.marking().signs().to_vec();
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(g2.edges().map(|e| (base + e.u, base + e.v, e.sign)));
        for q in 0..n2 {
            edges.push((i, base + q, mg1.marking().get(i) * mg2.marking().get(q)));
        }
        marks.extend_from_slice(mg2.marking().signs());
    }
    MarkedSignedGraph::new(SignedGraph::new(n1 * (1 + n2), edges)?, Marking::new(marks))
}
