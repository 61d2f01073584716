//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex, together with the structural queries the counting and
//! search code relies on: connectivity, cut vertices, blocks, girth and
//! distances.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertex ids packed into one word; bit `v` set means vertex `v`.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

/// Iterates the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Builds a vertex set from ids.
pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Trusted constructor for rows already known to be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..adj.len()).all(|u| members(adj[u]).all(|v| v < adj.len() && adj[v] >> u & 1 == 1)));
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in members(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { n: self.n, adj }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0; self.n];
        for u in 0..self.n {
            for v in members(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|` in increasing
    /// id order, plus the map from new ids back to the original ones.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = members(set).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map.iter().map(|&v| members(self.adj[v] & set).fold(0u64, |acc, w| acc | 1 << index[w])).collect();
        (Graph { n: map.len(), adj }, map)
    }

    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set).map(|v| (self.adj[v] & set).count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, within);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertex_set()) == self.vertex_set()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Articulation vertices of a connected graph.
    pub fn cut_vertices(&self) -> Result<VertexSet> {
        self.require_connected()?;
        Ok(self.cut_vertices_within(self.vertex_set()))
    }

    /// Articulation vertices of the induced subgraph on `within`, which must
    /// be connected. One depth-first pass with low-link values.
    pub(crate) fn cut_vertices_within(&self, within: VertexSet) -> VertexSet {
        if within.count_ones() < 3 {
            return 0;
        }
        let mut dfs = LowLink::new(self, within);
        let root = within.trailing_zeros() as usize;
        dfs.visit(root, usize::MAX);
        dfs.cuts
    }

    /// Blocks (maximal 2-connected subgraphs and bridges) of the connected
    /// induced subgraph on `within`, as vertex sets.
    pub(crate) fn blocks_within(&self, within: VertexSet) -> Vec<VertexSet> {
        if within.count_ones() == 1 {
            return vec![within];
        }
        let mut dfs = LowLink::new(self, within);
        dfs.collect_blocks = true;
        let root = within.trailing_zeros() as usize;
        dfs.visit(root, usize::MAX);
        let mut blocks = dfs.blocks;
        blocks.sort_by_key(|b| (b.trailing_zeros(), *b));
        blocks
    }

    pub fn block_cut_tree(&self) -> Result<BlockCutTree> {
        self.require_connected()?;
        let blocks = self.blocks_within(self.vertex_set());
        let cut_vertices = self.cut_vertices_within(self.vertex_set());
        let incidence = members(cut_vertices)
            .map(|w| {
                let at: Vec<usize> = (0..blocks.len()).filter(|&b| blocks[b] >> w & 1 == 1).collect();
                (w, at)
            })
            .collect();
        Ok(BlockCutTree { blocks, cut_vertices, incidence })
    }

    /// Shortest cycle length by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in members(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Number of edges on a shortest `u`-`v` path.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut d = 0;
        while seen >> v & 1 == 0 {
            let mut next = 0;
            for x in members(frontier) {
                next |= self.adj[x];
            }
            next &= !seen;
            if next == 0 {
                return Err(Error::Disconnected);
            }
            seen |= next;
            frontier = next;
            d += 1;
        }
        Ok(d)
    }

    /// Pendant blocks whose cut vertex is shared with exactly one
    /// non-pendant block.
    pub fn s_pendant_blocks(&self) -> Result<Vec<VertexSet>> {
        let tree = self.block_cut_tree()?;
        if tree.cut_vertices == 0 {
            return Err(Error::NoCutVertex);
        }
        let out = (0..tree.blocks.len())
            .filter(|&b| tree.is_pendant(b))
            .filter(|&b| {
                let w = (tree.blocks[b] & tree.cut_vertices).trailing_zeros() as usize;
                tree.blocks_at(w).iter().filter(|&&o| !tree.is_pendant(o)).count() == 1
            })
            .map(|b| tree.blocks[b])
            .collect();
        Ok(out)
    }
}

struct LowLink<'a> {
    g: &'a Graph,
    within: VertexSet,
    disc: [u8; MAX_VERTICES],
    low: [u8; MAX_VERTICES],
    time: u8,
    cuts: VertexSet,
    collect_blocks: bool,
    stack: Vec<usize>,
    blocks: Vec<VertexSet>,
}

impl<'a> LowLink<'a> {
    fn new(g: &'a Graph, within: VertexSet) -> Self {
        LowLink {
            g,
            within,
            disc: [0; MAX_VERTICES],
            low: [0; MAX_VERTICES],
            time: 0,
            cuts: 0,
            collect_blocks: false,
            stack: Vec::new(),
            blocks: Vec::new(),
        }
    }

    // disc == 0 marks unvisited, so times start at 1
    fn visit(&mut self, v: usize, parent: usize) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        if self.collect_blocks {
            self.stack.push(v);
        }
        let mut children = 0;
        for w in members(self.g.adj[v] & self.within) {
            if self.disc[w] == 0 {
                children += 1;
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.cuts |= 1 << v;
                    }
                    if self.collect_blocks {
                        let mut block = 1u64 << v;
                        while let Some(x) = self.stack.pop() {
                            block |= 1 << x;
                            if x == w {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                }
            } else if w != parent {
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.cuts |= 1 << v;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Blocks and cut vertices of a connected graph with their incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
    incidence: Vec<(usize, Vec<usize>)>,
}

impl BlockCutTree {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_vertices
    }

    /// Indices of the blocks containing cut vertex `w` (empty if `w` is not one).
    pub fn blocks_at(&self, w: usize) -> &[usize] {
        self.incidence.iter().find(|(x, _)| *x == w).map(|(_, b)| b.as_slice()).unwrap_or(&[])
    }

    /// Cut vertices lying in block `b`.
    pub fn cuts_in(&self, b: usize) -> VertexSet {
        self.blocks[b] & self.cut_vertices
    }

    pub fn is_pendant(&self, b: usize) -> bool {
        self.cuts_in(b).count_ones() == 1
    }

    pub fn block_index(&self, set: VertexSet) -> Option<usize> {
        self.blocks.iter().position(|&b| b == set)
    }

    /// Number of block/cut-vertex incidences; equals `blocks + cuts - 1` for a tree.
    pub fn incidence_count(&self) -> usize {
        self.incidence.iter().map(|(_, b)| b.len()).sum()
    }
}
