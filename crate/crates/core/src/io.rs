//! graph6, edge-list and DOT text formats.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest order the single size byte of graph6 can express.
pub const GRAPH6_SHORT_LIMIT: usize = 62;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one graph6 line. Both the one-byte and the `~`-prefixed size
/// forms are accepted; orders above 64 are refused.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside 63..=126")));
    }
    let (n, data) = match bytes {
        [] => return Err(g6_err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated size"));
            }
            let n = rest[..6].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated size"));
            }
            let n = rest[..3].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (u64::from(b - 63), rest),
    };
    if n == 0 || n > MAX_VERTICES as u64 {
        return Err(Error::BadVertexCount(n as usize));
    }
    let n = n as usize;
    let bits = n * (n - 1) / 2;
    let want = bits.div_ceil(6);
    if data.len() != want {
        return Err(g6_err(format!("expected {want} data bytes for n = {n}, found {}", data.len())));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    if !bits.is_multiple_of(6) && (data[want - 1] - 63) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(g6_err("nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

/// Short-form graph6 encoding (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_SHORT_LIMIT {
        return Err(g6_err(format!("n = {n} needs the long size form")));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}

/// Parses `n=<int>` followed by one `u v` line per edge. Blank lines are
/// ignored; pairs may come in any order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, msg: &str| Error::EdgeList { line, msg: msg.to_string() };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| err(hline + 1, "expected n=<int>"))?;
    let mut edges = Vec::new();
    for (i, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(i + 1, "expected two vertex ids")))
            .collect::<Result<_>>()?;
        let [u, v] = nums[..] else {
            return Err(err(i + 1, "expected two vertex ids"));
        };
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Canonical edge-list text: header, then sorted `u v` pairs with `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT text for an undirected graph, with `highlight` vertices filled.
pub fn to_dot(g: &Graph, highlight: VertexSet) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        if highlight >> v & 1 == 1 {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=red];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn graph6_examples() {
        let k1 = g(1, &[]);
        let k2 = g(2, &[(0, 1)]);
        let c3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        for (graph, text) in [(&k1, "@"), (&k2, "A_"), (&c3, "Bw")] {
            assert_eq!(to_graph6(graph).unwrap(), text);
            assert_eq!(&parse_graph6(text).unwrap(), graph);
        }
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), c3);
        assert_eq!(parse_graph6("~??B?").unwrap(), g(3, &[]));
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B w"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("?"), Err(Error::BadVertexCount(0))));
        let big = g(63, &[]);
        assert!(matches!(to_graph6(&big), Err(Error::Graph6(_))));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("n=2\n0 1\n").unwrap(), g(2, &[(0, 1)]));
        assert_eq!(parse_edge_list("n=3\n0 1\n1 2\n").unwrap(), g(3, &[(0, 1), (1, 2)]));
        assert_eq!(parse_edge_list("n=1\n").unwrap(), g(1, &[]));
        assert_eq!(to_edge_list(&g(3, &[(2, 1), (1, 0)])), "n=3\n0 1\n1 2\n");
        assert!(matches!(parse_edge_list("n=2\n0 1\n1 0\n"), Err(Error::DuplicateEdge(..))));
        assert!(matches!(parse_edge_list("n=2\n1 1\n"), Err(Error::SelfLoop(1))));
        assert!(matches!(parse_edge_list("n=2\n0\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("m=2\n"), Err(Error::EdgeList { line: 1, .. })));
    }

    #[test]
    fn dot_examples() {
        let k2 = to_dot(&g(2, &[(0, 1)]), 0);
        assert_eq!(k2, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
        let c3 = to_dot(&g(3, &[(0, 1), (1, 2), (0, 2)]), 0b111);
        assert_eq!(c3.matches("style=filled").count(), 3);
    }
}
