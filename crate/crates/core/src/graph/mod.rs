//! Signed graphs, vertex markings and the matrices attached to them.

pub mod generators;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::algebra::{int, Matrix, Scalar};
use crate::error::{Error, Result};

pub use generators::Signature;

/// Sign carried by an edge or a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn scalar(self) -> Scalar {
        int(self.value())
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An edge `(u, v, sign)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// Simple undirected graph on vertices `0..n` with a ±1 signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Sign>,
    adjacency: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a graph, rejecting self-loops, repeated vertex pairs (whatever
    /// their signs) and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b, s) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if map.insert(key, s).is_some() {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (&(u, v), &s) in &map {
            adjacency[u].push((v, s));
            adjacency[v].push((u, s));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SignedGraph {
            n,
            edges: map,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph is valid")
    }

    /// Order.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &sign)| Edge { u, v, sign })
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        self.check_regular().ok()
    }

    /// Like [`regular_degree`](Self::regular_degree) but names the first
    /// vertex whose degree differs from vertex 0.
    pub fn check_regular(&self) -> Result<usize> {
        let expected = self.adjacency.first().map_or(0, Vec::len);
        match (0..self.n).find(|&v| self.degree(v) != expected) {
            None => Ok(expected),
            Some(vertex) => Err(Error::NotRegular {
                vertex,
                degree: self.degree(vertex),
                expected,
            }),
        }
    }

    /// Same graph with every edge positive.
    pub fn underlying(&self) -> SignedGraph {
        self.map_signs(|_| Sign::Plus)
    }

    /// Same graph with every edge sign flipped.
    pub fn negated(&self) -> SignedGraph {
        self.map_signs(|e| -e.sign)
    }

    pub fn map_signs(&self, mut f: impl FnMut(Edge) -> Sign) -> SignedGraph {
        SignedGraph::new(self.n, self.edges().map(|e| (e.u, e.v, f(e)))).expect("same structure")
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.values().all(|&s| s == Sign::Plus)
    }

    /// Mark of each vertex is the product of its incident edge signs; an
    /// isolated vertex gets `+`.
    pub fn canonical_marking(&self) -> Marking {
        Marking(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(Sign::Plus, |acc, &(_, s)| acc * s))
                .collect(),
        )
    }

    /// A marking `μ` with `σ(uv) = μ(u)μ(v)` on every edge, if one exists.
    ///
    /// Propagates marks breadth-first through each component and checks every
    /// edge for consistency.
    pub fn balance_witness(&self) -> Option<Marking> {
        let mut mark: Vec<Option<Sign>> = vec![None; self.n];
        for root in 0..self.n {
            if mark[root].is_some() {
                continue;
            }
            mark[root] = Some(Sign::Plus);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let mu = mark[u].expect("queued vertices are marked");
                for &(v, s) in &self.adjacency[u] {
                    match mark[v] {
                        None => {
                            mark[v] = Some(mu * s);
                            queue.push_back(v);
                        }
                        Some(mv) if mu * mv != s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Marking(mark.into_iter().map(|m| m.expect("all marked")).collect()))
    }

    pub fn is_balanced(&self) -> bool {
        self.balance_witness().is_some()
    }

    /// Signed adjacency matrix `A`.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for e in self.edges() {
            a[(e.u, e.v)] = e.sign.scalar();
            a[(e.v, e.u)] = e.sign.scalar();
        }
        a
    }

    /// Diagonal matrix of underlying degrees.
    pub fn degree_matrix(&self) -> Matrix {
        let d: Vec<Scalar> = self.degrees().into_iter().map(|d| int(d as i64)).collect();
        Matrix::diagonal(&d)
    }

    pub fn laplacian(&self) -> Matrix {
        &self.degree_matrix() - &self.adjacency_matrix()
    }

    pub fn signless_laplacian(&self) -> Matrix {
        &self.degree_matrix() + &self.adjacency_matrix()
    }

    pub fn matrix(&self, kind: MatrixKind) -> Matrix {
        match kind {
            MatrixKind::Adjacency => self.adjacency_matrix(),
            MatrixKind::Laplacian => self.laplacian(),
            MatrixKind::SignlessLaplacian => self.signless_laplacian(),
        }
    }

    pub fn matrices(&self) -> GraphMatrices {
        let a = self.adjacency_matrix();
        let d = self.degree_matrix();
        GraphMatrices {
            l: &d - &a,
            q: &d + &a,
            a,
            d,
        }
    }
}

/// Which graph matrix a spectrum or polynomial refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "A")]
    Adjacency,
    #[serde(rename = "L")]
    Laplacian,
    #[serde(rename = "Q")]
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
        }
    }
}

/// `A`, `D`, `L = D − A` and `Q = D + A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMatrices {
    pub a: Matrix,
    pub d: Matrix,
    pub l: Matrix,
    pub q: Matrix,
}

/// A ±1 label on each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking(Vec<Sign>);

impl Marking {
    pub fn new(signs: Vec<Sign>) -> Self {
        Marking(signs)
    }

    pub fn all_positive(n: usize) -> Self {
        Marking(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn as_scalars(&self) -> Vec<Scalar> {
        self.0.iter().map(|s| s.scalar()).collect()
    }

    pub fn as_diagonal(&self) -> Matrix {
        Matrix::diagonal(&self.as_scalars())
    }
}

/// A signed graph together with a marking of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSignedGraph {
    graph: SignedGraph,
    marking: Marking,
}

impl MarkedSignedGraph {
    pub fn new(graph: SignedGraph, marking: Marking) -> Result<Self> {
        if marking.len() != graph.n() {
            return Err(Error::MarkingLength {
                expected: graph.n(),
                got: marking.len(),
            });
        }
        Ok(MarkedSignedGraph { graph, marking })
    }

    /// Marks the graph with its canonical marking.
    pub fn canonical(graph: SignedGraph) -> Self {
        let marking = graph.canonical_marking();
        MarkedSignedGraph { graph, marking }
    }

    /// All-positive signature with all-positive marking: how unsigned graphs
    /// are represented.
    pub fn unsigned(graph: &SignedGraph) -> Self {
        MarkedSignedGraph {
            graph: graph.underlying(),
            marking: Marking::all_positive(graph.n()),
        }
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn marking(&self) -> &Marking {
        &self.marking
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The μ-signed graph: every edge `uv` re-signed to `μ(u)μ(v)`.
    pub fn mu_signed_graph(&self) -> SignedGraph {
        self.graph
            .map_signs(|e| self.marking.get(e.u) * self.marking.get(e.v))
    }

    /// The μ-signed graph keeping the same marking.
    pub fn mu_signed(&self) -> MarkedSignedGraph {
        MarkedSignedGraph {
            graph: self.mu_signed_graph(),
            marking: self.marking.clone(),
        }
    }

    pub fn matrices(&self) -> GraphMatrices {
        self.graph.matrices()
    }
}
