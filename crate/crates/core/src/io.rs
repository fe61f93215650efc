//! Plain-text graph format.
//!
//! ```text
//! # comment
//! n m
//! i j s        (m lines, s is + or -)
//! marking s s ... s   (optional, n signs)
//! ```
//!
//! Without a marking line the canonical marking is used.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{MarkedSignedGraph, Marking, Sign, SignedGraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_sign(tok: &str, line: usize) -> Result<Sign> {
    let mut chars = tok.chars();
    match (chars.next().and_then(Sign::from_symbol), chars.next()) {
        (Some(s), None) => Ok(s),
        _ => Err(parse_err(line, format!("bad sign token {tok:?}"))),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<MarkedSignedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be \"n m\""));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut marking = None;
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "marking" {
            if marking.is_some() {
                return Err(parse_err(lineno, "second marking line"));
            }
            if toks.len() - 1 != n {
                return Err(parse_err(lineno, format!("marking has {} signs, expected {n}", toks.len() - 1)));
            }
            let signs = toks[1..].iter().map(|t| parse_sign(t, lineno)).collect::<Result<Vec<_>>>()?;
            marking = Some(Marking::new(signs));
            continue;
        }
        if marking.is_some() {
            return Err(parse_err(lineno, "edge after marking line"));
        }
        if toks.len() != 3 {
            return Err(parse_err(lineno, "edge line must be \"i j s\""));
        }
        let u = parse_usize(toks[0], lineno, "vertex")?;
        let v = parse_usize(toks[1], lineno, "vertex")?;
        let s = parse_sign(toks[2], lineno)?;
        let err = if u >= n || v >= n {
            Some(Error::VertexOutOfRange { u, v, n })
        } else if u == v {
            Some(Error::SelfLoop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(Error::DuplicateEdge(u.min(v), u.max(v)))
        } else {
            None
        };
        if let Some(e) = err {
            return Err(parse_err(lineno, e.to_string()));
        }
        edges.push((u, v, s));
    }
    if edges.len() != m {
        return Err(parse_err(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = SignedGraph::new(n, edges)?;
    match marking {
        Some(mu) => MarkedSignedGraph::new(graph, mu),
        None => Ok(MarkedSignedGraph::canonical(graph)),
    }
}

/// Writes `mg` in the text format; the marking line is emitted only when
/// the marking is not the canonical one.
pub fn serialize_graph(mg: &MarkedSignedGraph) -> String {
    let g = mg.graph();
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.sign);
    }
    if mg.marking() != &g.canonical_marking() {
        out.push_str("marking");
        for s in mg.marking().signs() {
            let _ = write!(out, " {s}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, prism, star, Signature};

    #[test]
    fn parses_examples() {
        let k2 = parse_graph("2 1\n0 1 +").unwrap();
        assert_eq!(k2.graph().sign(0, 1), Some(Sign::Plus));
        assert_eq!(k2.marking().signs(), &[Sign::Plus, Sign::Plus]);

        let c3 = parse_graph("3 3\n0 1 -\n1 2 -\n0 2 -").unwrap();
        assert_eq!(c3.graph().edge_count(), 3);
        assert_eq!(c3.marking(), &Marking::all_positive(3));
    }

    #[test]
    fn comments_and_explicit_marking() {
        let text = "# a path\n3 2  # header\n0 1 +\n1 2 -\nmarking - + +\n";
        let mg = parse_graph(text).unwrap();
        assert_eq!(mg.marking().signs(), &[Sign::Minus, Sign::Plus, Sign::Plus]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("2 1\n0 0 +").unwrap_err();
        assert!(matches!(&err, Error::Parse { line: 2, msg } if msg.contains("self-loop")), "{err}");
        let err = parse_graph("3 2\n0 1 +\n1 0 -").unwrap_err();
        assert!(matches!(&err, Error::Parse { line: 3, msg } if msg.contains("duplicate")), "{err}");
        let err = parse_graph("2 1\n0 5 +").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("2 1\n0 1 x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_graph("2 2\n0 1 +").is_err());
        assert!(parse_graph("2 1\n0 1 +\nmarking +").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn round_trip_generators() {
        let graphs = [
            cycle(5, &Signature::parse("+-+--").unwrap()).unwrap(),
            complete(4, &Signature::AllNegative).unwrap(),
            star(4, &Signature::parse("-++").unwrap()).unwrap(),
            prism(3, &Signature::AllPositive).unwrap(),
            SignedGraph::empty(2),
        ];
        for g in graphs {
            let mg = MarkedSignedGraph::canonical(g.clone());
            assert_eq!(parse_graph(&serialize_graph(&mg)).unwrap(), mg);
            let flipped = Marking::new(mg.marking().signs().iter().map(|&s| -s).collect());
            let mg = MarkedSignedGraph::new(g, flipped).unwrap();
            let text = serialize_graph(&mg);
            assert!(text.contains("marking"));
            assert_eq!(parse_graph(&text).unwrap(), mg);
        }
    }
}
