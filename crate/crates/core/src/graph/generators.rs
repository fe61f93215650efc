//! Standard graph families.
//!
//! Explicit signatures are applied to edges in lexicographic `(u, v)` order,
//! the same order [`SignedGraph::edges`] reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Sign, SignedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Signature {
    AllPositive,
    AllNegative,
    Explicit(Vec<Sign>),
}

impl Signature {
    /// Parses a string of `+`/`-` characters.
    pub fn parse(s: &str) -> Result<Signature> {
        s.chars()
            .map(|c| {
                Sign::from_symbol(c)
                    .ok_or_else(|| Error::InvalidParameter(format!("bad sign character {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Signature::Explicit)
    }

    fn apply(&self, mut pairs: Vec<(usize, usize)>, n: usize) -> Result<SignedGraph> {
        for p in &mut pairs {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        let signs: Vec<Sign> = match self {
            Signature::AllPositive => vec![Sign::Plus; pairs.len()],
            Signature::AllNegative => vec![Sign::Minus; pairs.len()],
            Signature::Explicit(s) if s.len() == pairs.len() => s.clone(),
            Signature::Explicit(s) => {
                return Err(Error::InvalidParameter(format!(
                    "signature has {} signs, graph has {} edges",
                    s.len(),
                    pairs.len()
                )))
            }
        };
        SignedGraph::new(n, pairs.into_iter().zip(signs).map(|((u, v), s)| (u, v, s)))
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `K_{1,n−1}` on `n` vertices, center 0.
pub fn star(n: usize, sig: &Signature) -> Result<SignedGraph> {
    require(n >= 1, "star needs at least one vertex")?;
    sig.apply((1..n).map(|v| (0, v)).collect(), n)
}

pub fn cycle(n: usize, sig: &Signature) -> Result<SignedGraph> {
    require(n >= 3, "cycle needs at least three vertices")?;
    sig.apply((0..n).map(|i| (i, (i + 1) % n)).collect(), n)
}

pub fn path(n: usize, sig: &Signature) -> Result<SignedGraph> {
    require(n >= 1, "path needs at least one vertex")?;
    sig.apply((1..n).map(|i| (i - 1, i)).collect(), n)
}

pub fn complete(n: usize, sig: &Signature) -> Result<SignedGraph> {
    require(n >= 1, "complete graph needs at least one vertex")?;
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    sig.apply(pairs, n)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize, sig: &Signature) -> Result<SignedGraph> {
    require(a >= 1 && b >= 1, "both parts need at least one vertex")?;
    let pairs = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    sig.apply(pairs, a + b)
}

/// `C_n × K_2`: two `n`-cycles `0..n` and `n..2n` joined by a perfect matching.
pub fn prism(n: usize, sig: &Signature) -> Result<SignedGraph> {
    require(n >= 3, "prism needs n ≥ 3")?;
    let mut pairs = Vec::with_capacity(3 * n);
    for i in 0..n {
        pairs.push((i, (i + 1) % n));
        pairs.push((n + i, n + (i + 1) % n));
        pairs.push((i, n + i));
    }
    sig.apply(pairs, 2 * n)
}

/// Line graph of the underlying graph, all-positive. Vertex `k` is the
/// `k`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &SignedGraph) -> SignedGraph {
    let edges: Vec<_> = g.edges().collect();
    let mut pairs = Vec::new();
    for (i, a) in edges.iter().enumerate() {
        for (j, b) in edges.iter().enumerate().skip(i + 1) {
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                pairs.push((i, j));
            }
        }
    }
    Signature::AllPositive
        .apply(pairs, edges.len())
        .expect("line graph is simple")
}

/// Named families used by the command line and the randomized campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Star,
    Cycle,
    Path,
    Complete,
    Prism,
    Empty,
}

impl Family {
    pub fn build(self, n: usize, sig: &Signature) -> Result<SignedGraph> {
        match self {
            Family::Star => star(n, sig),
            Family::Cycle => cycle(n, sig),
            Family::Path => path(n, sig),
            Family::Complete => complete(n, sig),
            Family::Prism => prism(n, sig),
            Family::Empty => {
                require(n >= 1, "empty graph needs at least one vertex")?;
                sig.apply(Vec::new(), n)
            }
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Cycle | Family::Prism => 3,
            _ => 1,
        }
    }

    /// Number of edges of the member with parameter `n`.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            Family::Star | Family::Path => n.saturating_sub(1),
            Family::Cycle => n,
            Family::Complete => n * n.saturating_sub(1) / 2,
            Family::Prism => 3 * n,
            Family::Empty => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Prism => "prism",
            Family::Empty => "empty",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "star" => Family::Star,
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "complete" => Family::Complete,
            "prism" => Family::Prism,
            "empty" => Family::Empty,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}
