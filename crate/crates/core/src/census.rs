//! Brute-force counting of connected subgraphs.
//!
//! A subgraph is a vertex set together with an edge set on those vertices.
//! Single vertices count, the empty subgraph does not, so a connected
//! subgraph with two or more vertices is determined by its (connected, non
//! empty) edge set. Counts here are ground truth for everything else.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet, MAX_VERTICES};

/// Exact non-negative subgraph count.
pub type Count = BigUint;

/// Edge sets are enumerated as one machine word.
pub const EDGE_LIMIT: usize = 64;

/// A connected subgraph reported by the enumerator. `edges` indexes into
/// [`Graph::edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectedSubgraph {
    pub vertices: VertexSet,
    pub edges: u64,
}

pub(crate) struct EdgeIndex {
    ends: Vec<(usize, usize)>,
    incident: [u64; MAX_VERTICES],
}

impl EdgeIndex {
    pub(crate) fn new(g: &Graph) -> Result<EdgeIndex> {
        let ends = g.edges();
        if ends.len() > EDGE_LIMIT {
            return Err(Error::TooManyEdges { edges: ends.len(), limit: EDGE_LIMIT });
        }
        let mut incident = [0u64; MAX_VERTICES];
        for (i, &(u, v)) in ends.iter().enumerate() {
            incident[u] |= 1 << i;
            incident[v] |= 1 << i;
        }
        Ok(EdgeIndex { ends, incident })
    }

    fn edges_among(&self, set: VertexSet) -> u64 {
        let mut out = 0;
        for (i, &(u, v)) in self.ends.iter().enumerate() {
            if set >> u & 1 == 1 && set >> v & 1 == 1 {
                out |= 1 << i;
            }
        }
        out
    }
}

fn check_set(g: &Graph, req: VertexSet) -> Result<()> {
    let outside = req & !g.vertex_set();
    if outside != 0 {
        return Err(Error::VertexOutOfRange { vertex: outside.trailing_zeros() as usize, n: g.n() });
    }
    Ok(())
}

/// Grows connected edge sets from the current one. Every frontier edge is
/// tried in turn and then excluded for its later siblings, so each connected
/// edge set reachable from the start is produced exactly once.
fn grow<B>(
    ix: &EdgeIndex,
    allowed: u64,
    chosen: u64,
    verts: VertexSet,
    mut frontier: u64,
    mut excluded: u64,
    visit: &mut impl FnMut(ConnectedSubgraph) -> ControlFlow<B>,
) -> ControlFlow<B> {
    while frontier != 0 {
        let e = frontier.trailing_zeros() as usize;
        let bit = 1u64 << e;
        frontier &= !bit;
        let (a, b) = ix.ends[e];
        let grown = verts | 1 << a | 1 << b;
        let with = chosen | bit;
        let mut next = frontier;
        for x in members(grown & !verts) {
            next |= ix.incident[x];
        }
        next &= allowed & !with & !excluded;
        visit(ConnectedSubgraph { vertices: grown, edges: with })?;
        grow(ix, allowed, with, grown, next, excluded, visit)?;
        excluded |= bit;
    }
    ControlFlow::Continue(())
}

/// Visits every connected subgraph containing all of `req` (all connected
/// subgraphs when `req` is empty) until the visitor breaks.
pub(crate) fn try_enumerate<B>(
    g: &Graph,
    req: VertexSet,
    mut visit: impl FnMut(ConnectedSubgraph) -> ControlFlow<B>,
) -> Result<ControlFlow<B>> {
    check_set(g, req)?;
    let ix = EdgeIndex::new(g)?;
    let all_edges = if ix.ends.len() == 64 { u64::MAX } else { (1u64 << ix.ends.len()) - 1 };
    let mut filtered = |s: ConnectedSubgraph| {
        if s.vertices & req == req {
            visit(s)
        } else {
            ControlFlow::Continue(())
        }
    };
    if req != 0 {
        // anchor at the smallest required vertex
        let r = req.trailing_zeros() as usize;
        let start = ConnectedSubgraph { vertices: 1 << r, edges: 0 };
        if let ControlFlow::Break(b) = filtered(start) {
            return Ok(ControlFlow::Break(b));
        }
        return Ok(grow(&ix, all_edges, 0, 1 << r, ix.incident[r], 0, &mut filtered));
    }
    // every subgraph is anchored at its smallest vertex
    for r in 0..g.n() {
        let above = g.vertex_set() & !((1u64 << r) - 1);
        let allowed = ix.edges_among(above);
        if let ControlFlow::Break(b) = filtered(ConnectedSubgraph { vertices: 1 << r, edges: 0 }) {
            return Ok(ControlFlow::Break(b));
        }
        let flow = grow(&ix, allowed, 0, 1 << r, ix.incident[r] & allowed, 0, &mut filtered);
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Calls `visitor` once per connected subgraph containing `req`, in a
/// deterministic order.
pub fn enumerate_connected_subgraphs(
    g: &Graph,
    req: VertexSet,
    mut visitor: impl FnMut(ConnectedSubgraph),
) -> Result<()> {
    try_enumerate::<()>(g, req, |s| {
        visitor(s);
        ControlFlow::Continue(())
    })
    .map(|_| ())
}

/// Number of connected subgraphs whose vertex set contains `req`.
pub fn count_containing(g: &Graph, req: VertexSet) -> Result<Count> {
    let mut count = 0u64;
    enumerate_connected_subgraphs(g, req, |_| count += 1)?;
    Ok(Count::from(count))
}

/// Like [`count_containing`] but gives up once the count exceeds `limit`,
/// returning `None`.
pub fn count_containing_bounded(g: &Graph, req: VertexSet, limit: u64) -> Result<Option<u64>> {
    let mut count = 0u64;
    let flow = try_enumerate(g, req, |_| {
        count += 1;
        if count > limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(if flow.is_break() { None } else { Some(count) })
}

/// `F(G)`: all connected subgraphs.
pub fn count_connected_subgraphs(g: &Graph) -> Result<Count> {
    count_containing(g, 0)
}

/// `f_G(v)`: connected subgraphs containing `v`.
pub fn subgraph_number(g: &Graph, v: usize) -> Result<Count> {
    g.check_vertex(v)?;
    count_containing(g, 1 << v)
}

/// The exhaustive edge-subset count kept as an independent check on the
/// enumerator: every subset of edges is tested with a union-find.
pub mod naive {
    use super::*;

    pub const EDGE_LIMIT: usize = 24;

    struct Dsu(Vec<usize>);

    impl Dsu {
        fn find(&mut self, x: usize) -> usize {
            let mut r = x;
            while self.0[r] != r {
                r = self.0[r];
            }
            let mut y = x;
            while self.0[y] != r {
                let next = self.0[y];
                self.0[y] = r;
                y = next;
            }
            r
        }

        fn union(&mut self, a: usize, b: usize) -> bool {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                return false;
            }
            self.0[ra] = rb;
            true
        }
    }

    pub fn count_containing(g: &Graph, req: VertexSet) -> Result<Count> {
        check_set(g, req)?;
        let edges = g.edges();
        if edges.len() > EDGE_LIMIT {
            return Err(Error::TooManyEdges { edges: edges.len(), limit: EDGE_LIMIT });
        }
        let mut count: u64 = match req.count_ones() {
            0 => g.n() as u64,
            1 => 1,
            _ => 0,
        };
        let mut dsu = Dsu((0..g.n()).collect());
        for mask in 1u64..(1u64 << edges.len()) {
            for (i, p) in dsu.0.iter_mut().enumerate() {
                *p = i;
            }
            let mut verts = 0u64;
            let mut merges = 0;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    verts |= 1 << u | 1 << v;
                    if dsu.union(u, v) {
                        merges += 1;
                    }
                }
            }
            // connected iff the touched vertices collapse to one component
            if merges + 1 == verts.count_ones() && verts & req == req {
                count += 1;
            }
        }
        Ok(Count::from(count))
    }

    pub fn count_connected_subgraphs(g: &Graph) -> Result<Count> {
        count_containing(g, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set_of;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn totals() {
        assert_eq!(count_connected_subgraphs(&g(1, &[])).unwrap(), c(1));
        assert_eq!(count_connected_subgraphs(&cycle(4)).unwrap(), c(17));
        assert_eq!(count_connected_subgraphs(&g(4, &[(0, 1), (1, 2), (2, 3)])).unwrap(), c(10));
        assert_eq!(count_connected_subgraphs(&g(4, &[(0, 1), (0, 2), (0, 3)])).unwrap(), c(11));
    }

    #[test]
    fn vertex_numbers() {
        assert_eq!(subgraph_number(&g(1, &[]), 0).unwrap(), c(1));
        assert_eq!(subgraph_number(&g(4, &[(0, 1), (0, 2), (0, 3)]), 0).unwrap(), c(8));
        assert_eq!(subgraph_number(&g(3, &[(0, 1), (1, 2)]), 0).unwrap(), c(3));
        for v in 0..5 {
            assert_eq!(subgraph_number(&cycle(5), v).unwrap(), c(16));
        }
        assert!(subgraph_number(&cycle(5), 5).is_err());
    }

    #[test]
    fn containing_sets() {
        let c6 = cycle(6);
        assert_eq!(count_containing(&c6, set_of(&[0, 1])).unwrap(), c(17));
        assert_eq!(count_containing(&c6, set_of(&[0, 3])).unwrap(), c(13));
        assert_eq!(count_containing(&g(3, &[(0, 1), (1, 2)]), set_of(&[0, 2])).unwrap(), c(1));
        assert!(matches!(count_containing(&c6, set_of(&[7])), Err(Error::VertexOutOfRange { vertex: 7, .. })));
    }

    #[test]
    fn req_across_components_is_zero() {
        let two = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(count_containing(&two, set_of(&[0, 3])).unwrap(), c(0));
        assert_eq!(count_connected_subgraphs(&two).unwrap(), c(6));
    }

    #[test]
    fn enumeration_visits() {
        let mut seen = Vec::new();
        enumerate_connected_subgraphs(&g(1, &[]), 0, |s| seen.push(s)).unwrap();
        assert_eq!(seen, vec![ConnectedSubgraph { vertices: 1, edges: 0 }]);

        let mut k2 = Vec::new();
        enumerate_connected_subgraphs(&g(2, &[(0, 1)]), 0, |s| k2.push(s)).unwrap();
        assert_eq!(k2.len(), 3);

        let mut visits = 0;
        enumerate_connected_subgraphs(&cycle(3), 1, |_| visits += 1).unwrap();
        assert_eq!(visits, 7);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut seen = std::collections::HashSet::new();
        enumerate_connected_subgraphs(&k4, 0, |s| assert!(seen.insert((s.vertices, s.edges)))).unwrap();
        assert_eq!(Count::from(seen.len()), naive::count_connected_subgraphs(&k4).unwrap());
    }

    #[test]
    fn bounded_stops_early() {
        let c6 = cycle(6);
        assert_eq!(count_containing_bounded(&c6, 0, 37).unwrap(), Some(37));
        assert_eq!(count_containing_bounded(&c6, 0, 36).unwrap(), None);
        assert_eq!(count_containing_bounded(&c6, 1, 100).unwrap(), Some(22));
    }

    #[test]
    fn naive_matches_small_cases() {
        assert_eq!(naive::count_connected_subgraphs(&cycle(4)).unwrap(), c(17));
        assert_eq!(naive::count_containing(&cycle(6), set_of(&[0, 3])).unwrap(), c(13));
        assert_eq!(naive::count_containing(&g(1, &[]), 1).unwrap(), c(1));
    }
}
