#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;
use sigspec::algebra::{int, Matrix};
use sigspec::graph::generators::{Family, Signature};
use sigspec::{MarkedSignedGraph, Marking, MatrixKind, Sign, SignedGraph};

/// Adjacency of the product decided pair by pair from the vertex labels,
/// sharing no code with the library construction.
pub fn oracle_product_adjacency(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph) -> Matrix {
    let (n1, n2) = (mg1.n(), mg2.n());
    let half = n1 * n2;
    let label = |v: usize| -> (bool, usize, usize) {
        if v < half {
            (true, v / n2, v % n2)
        } else {
            (false, (v - half) / n2, (v - half) % n2)
        }
    };
    let mark = |v: usize| -> i64 {
        match label(v) {
            (true, i, _) => mg1.marking().get(i).value(),
            (false, _, q) => mg2.marking().get(q).value(),
        }
    };
    Matrix::from_fn(2 * half, 2 * half, |v, w| {
        let adjacent = match (label(v), label(w)) {
            ((true, i, _), (true, j, _)) => mg1.graph().sign(i, j).is_some(),
            ((false, i, q), (false, j, r)) => i == j && mg2.graph().sign(q, r).is_some(),
            ((true, i, _), (false, j, _)) | ((false, j, _), (true, i, _)) => i == j,
        };
        if adjacent {
            int(mark(v) * mark(w))
        } else {
            int(0)
        }
    })
}

/// `A`, `D − A` or `D + A` from an adjacency matrix with ±1/0 entries.
pub fn oracle_matrix(adj: &Matrix, kind: MatrixKind) -> Matrix {
    let n = adj.rows();
    let deg: Vec<i64> = (0..n)
        .map(|i| (0..n).filter(|&j| adj[(i, j)] != int(0)).count() as i64)
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        let d = if i == j { int(deg[i]) } else { int(0) };
        match kind {
            MatrixKind::Adjacency => adj[(i, j)].clone(),
            MatrixKind::Laplacian => d - &adj[(i, j)],
            MatrixKind::SignlessLaplacian => d + &adj[(i, j)],
        }
    })
}

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random family member of size `≤ max_n` with random signs and a marking
/// that is canonical half of the time and random otherwise.
pub fn random_member(rng: &mut impl Rng, pool: &[Family], max_n: usize) -> MarkedSignedGraph {
    let pool: Vec<Family> = pool.iter().copied().filter(|f| f.min_size() <= max_n).collect();
    let fam = pool[rng.gen_range(0..pool.len())];
    let n = rng.gen_range(fam.min_size()..=max_n);
    let sig = Signature::Explicit((0..fam.edge_count(n)).map(|_| random_sign(rng)).collect());
    let g = fam.build(n, &sig).unwrap();
    let marking = if rng.gen_bool(0.5) {
        g.canonical_marking()
    } else {
        Marking::new((0..n).map(|_| random_sign(rng)).collect())
    };
    MarkedSignedGraph::new(g, marking).unwrap()
}

/// Erdős–Rényi style random signed graph with a random marking.
pub fn random_graph(rng: &mut impl Rng, max_n: usize, p: f64) -> MarkedSignedGraph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, random_sign(rng)));
            }
        }
    }
    let g = SignedGraph::new(n, edges).unwrap();
    let marking = Marking::new((0..n).map(|_| random_sign(rng)).collect());
    MarkedSignedGraph::new(g, marking).unwrap()
}

/// Balance by two-colouring: `+` edges join equal colours, `−` edges differ.
pub fn oracle_balanced(g: &SignedGraph) -> bool {
    let n = g.n();
    let mut colour: Vec<Option<i64>> = vec![None; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(1);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let cu = colour[u].unwrap();
            for v in 0..n {
                let Some(s) = g.sign(u, v) else { continue };
                let want = cu * s.value();
                match colour[v] {
                    None => {
                        colour[v] = Some(want);
                        stack.push(v);
                    }
                    Some(c) if c != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}
