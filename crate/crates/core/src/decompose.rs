//! Counting through cut vertices.
//!
//! Brute force is confined to 2-connected blocks; everything else is
//! assembled from block counts with the merge rule at a cut vertex
//! `F(G) = F(G1) + F(G2) - 1 + (f1(w) - 1)(f2(w) - 1)`, the product rule
//! `f_G(w) = prod f_Gi(w)`, and the block expansion over subsets of a
//! block's cut vertices.
//!
//! All work happens on vertex subsets of the input graph. Every piece the
//! recursion produces (a component of `G - w` plus `w`) is an induced
//! subgraph, so a `(vertex set, required set)` pair identifies a
//! subproblem and is the memo key within one evaluation.

use std::collections::HashMap;

use num_traits::One;

use crate::census::{self, Count};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};

/// Blocks with more edges than this are not brute-forced.
pub const BLOCK_EDGE_LIMIT: usize = 25;

const EXPANSION_CUT_LIMIT: usize = 24;

/// Which cut vertex the recursion splits at when there is a choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitOrder {
    #[default]
    Smallest,
    Largest,
    /// Pseudo-random but reproducible choice.
    Seeded(u64),
}

impl SplitOrder {
    fn pick(self, cuts: VertexSet, within: VertexSet) -> usize {
        match self {
            SplitOrder::Smallest => cuts.trailing_zeros() as usize,
            SplitOrder::Largest => 63 - cuts.leading_zeros() as usize,
            SplitOrder::Seeded(seed) => {
                let mut x = seed ^ within.wrapping_mul(0x9E37_79B9_7F4A_7C15);
                x ^= x >> 33;
                x = x.wrapping_mul(0xff51_afd7_ed55_8ccd);
                x ^= x >> 33;
                let k = (x % cuts.count_ones() as u64) as usize;
                members(cuts).nth(k).unwrap()
            }
        }
    }
}

/// `F(G1) + F(G2) - 1 + (f1(w) - 1)(f2(w) - 1)` for graphs glued at `w`.
pub fn merge_count(f_total_1: &Count, f_total_2: &Count, f_w_1: &Count, f_w_2: &Count) -> Count {
    let one = Count::one();
    f_total_1 + f_total_2 - &one + (f_w_1 - &one) * (f_w_2 - &one)
}

/// One side of a split: an induced subgraph, relabelled, with its vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub vertices: VertexSet,
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Part {
    fn new(g: &Graph, vertices: VertexSet) -> Part {
        let (graph, labels) = g.induced(vertices);
        Part { vertices, graph, labels }
    }

    /// Id of original vertex `v` inside this part.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.labels.iter().position(|&x| x == v)
    }
}

/// The pieces of `G` at a cut vertex: one per component of `G - w`, each
/// with `w` added back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitAtCutVertex {
    pub cut_vertex: usize,
    pub parts: Vec<Part>,
}

fn split_masks(g: &Graph, within: VertexSet, w: usize) -> Vec<VertexSet> {
    g.components_within(within & !(1 << w)).into_iter().map(|c| c | 1 << w).collect()
}

pub fn split_at(g: &Graph, w: usize) -> Result<SplitAtCutVertex> {
    g.check_vertex(w)?;
    let cuts = g.cut_vertices()?;
    if cuts >> w & 1 == 0 {
        return Err(Error::NotCutVertex(w));
    }
    let parts = split_masks(g, g.vertex_set(), w).into_iter().map(|m| Part::new(g, m)).collect();
    Ok(SplitAtCutVertex { cut_vertex: w, parts })
}

/// Position of each member of `set` among the members of `within`.
fn compress(within: VertexSet, set: VertexSet) -> VertexSet {
    members(set).fold(0, |acc, v| acc | 1 << (within & ((1u64 << v) - 1)).count_ones())
}

struct Engine<'a> {
    g: &'a Graph,
    order: SplitOrder,
    memo: HashMap<(VertexSet, VertexSet), Count>,
    totals: HashMap<VertexSet, Count>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, order: SplitOrder) -> Self {
        Engine { g, order, memo: HashMap::new(), totals: HashMap::new() }
    }

    fn block_count(&self, block: VertexSet, req: VertexSet) -> Result<Count> {
        let edges = self.g.edges_within(block);
        if edges > BLOCK_EDGE_LIMIT {
            return Err(Error::BlockTooLarge { edges, limit: BLOCK_EDGE_LIMIT });
        }
        let (h, _) = self.g.induced(block);
        census::count_containing(&h, compress(block, req))
    }

    /// Connected subgraphs of `G[within]` containing `req`.
    ///
    /// At a cut vertex `c` with pieces `P_i`, the subgraphs through `c` are
    /// independent choices in each piece, and the rest live inside the one
    /// piece that holds all of `req`.
    fn count(&mut self, within: VertexSet, req: VertexSet) -> Result<Count> {
        if let Some(hit) = self.memo.get(&(within, req)) {
            return Ok(hit.clone());
        }
        let cuts = self.g.cut_vertices_within(within);
        let value = if cuts == 0 {
            self.block_count(within, req)?
        } else {
            let c = self.order.pick(cuts, within);
            let cbit = 1u64 << c;
            let parts = split_masks(self.g, within, c);
            let mut through = Count::one();
            for &p in &parts {
                through *= self.count(p, (req & p) | cbit)?;
            }
            let avoiding = if req & cbit != 0 {
                Count::default()
            } else if req == 0 {
                let mut sum = Count::default();
                for &p in &parts {
                    sum += self.count(p, 0)? - self.count(p, cbit)?;
                }
                sum
            } else if let Some(&p) = parts.iter().find(|&&p| req & !p == 0) {
                self.count(p, req)? - self.count(p, req | cbit)?
            } else {
                Count::default()
            };
            through + avoiding
        };
        self.memo.insert((within, req), value.clone());
        Ok(value)
    }

    /// `F(G[within])` by splitting at a cut vertex and folding the pieces
    /// pairwise with [`merge_count`].
    fn total(&mut self, within: VertexSet) -> Result<Count> {
        if let Some(hit) = self.totals.get(&within) {
            return Ok(hit.clone());
        }
        let cuts = self.g.cut_vertices_within(within);
        let value = if cuts == 0 {
            self.block_count(within, 0)?
        } else {
            let c = self.order.pick(cuts, within);
            let parts = split_masks(self.g, within, c);
            let mut acc_total = self.total(parts[0])?;
            let mut acc_at_c = self.count(parts[0], 1 << c)?;
            for &p in &parts[1..] {
                let part_total = self.total(p)?;
                let part_at_c = self.count(p, 1 << c)?;
                acc_total = merge_count(&acc_total, &part_total, &acc_at_c, &part_at_c);
                acc_at_c *= part_at_c;
            }
            acc_total
        };
        self.totals.insert(within, value.clone());
        Ok(value)
    }

    /// `f(v)` in `G[within]`: a product over the pieces when `v` is a cut
    /// vertex, otherwise `f1(v) + f1(v, c)(f2(c) - 1)` across a cut vertex `c`.
    fn vertex(&mut self, within: VertexSet, v: usize) -> Result<Count> {
        let cuts = self.g.cut_vertices_within(within);
        if cuts == 0 {
            return self.block_count(within, 1 << v);
        }
        if cuts >> v & 1 == 1 {
            let mut product = Count::one();
            for p in split_masks(self.g, within, v) {
                product *= self.vertex(p, v)?;
            }
            return Ok(product);
        }
        let c = self.order.pick(cuts, within);
        let parts = split_masks(self.g, within, c);
        let side = *parts.iter().find(|&&p| p >> v & 1 == 1).unwrap();
        let rest = within & !(side & !(1 << c));
        let own = self.vertex(side, v)?;
        let pair = self.count(side, 1 << v | 1 << c)?;
        let beyond = self.vertex(rest, c)?;
        Ok(own + pair * (beyond - Count::one()))
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn count_via_decomposition(g: &Graph) -> Result<Count> {
    count_via_decomposition_with(g, SplitOrder::default())
}

pub fn count_via_decomposition_with(g: &Graph, order: SplitOrder) -> Result<Count> {
    require_connected(g)?;
    Engine::new(g, order).total(g.vertex_set())
}

pub fn subgraph_number_via_decomposition(g: &Graph, v: usize) -> Result<Count> {
    subgraph_number_via_decomposition_with(g, v, SplitOrder::default())
}

pub fn subgraph_number_via_decomposition_with(g: &Graph, v: usize, order: SplitOrder) -> Result<Count> {
    g.check_vertex(v)?;
    require_connected(g)?;
    Engine::new(g, order).vertex(g.vertex_set(), v)
}

/// `f(v)` for every vertex, sharing one memo table.
pub fn all_subgraph_numbers(g: &Graph) -> Result<Vec<Count>> {
    require_connected(g)?;
    let mut engine = Engine::new(g, SplitOrder::default());
    (0..g.n()).map(|v| engine.count(g.vertex_set(), 1 << v)).collect()
}

/// Connected subgraphs containing every vertex of `req`.
pub fn count_containing_via_decomposition(g: &Graph, req: VertexSet) -> Result<Count> {
    if req & !g.vertex_set() != 0 {
        let v = (req & !g.vertex_set()).trailing_zeros() as usize;
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    require_connected(g)?;
    Engine::new(g, SplitOrder::default()).count(g.vertex_set(), req)
}

/// `f_G(w) = prod f_Gi(w)` over the pieces at cut vertex `w`.
pub fn cut_vertex_subgraph_number(g: &Graph, w: usize) -> Result<Count> {
    let split = split_at(g, w)?;
    let mut engine = Engine::new(g, SplitOrder::default());
    let mut product = Count::one();
    for part in &split.parts {
        product *= engine.vertex(part.vertices, w)?;
    }
    Ok(product)
}

/// A block with, for each of its cut vertices `w_i`, the branch `G_i`
/// hanging off the block at `w_i`.
struct Branches {
    block: VertexSet,
    cuts: Vec<usize>,
    branch: Vec<VertexSet>,
}

fn branches(g: &Graph, block: VertexSet) -> Result<Branches> {
    let tree = g.block_cut_tree()?;
    if tree.block_index(block).is_none() {
        return Err(Error::NotABlock);
    }
    let cuts: Vec<usize> = members(block & tree.cut_vertices()).collect();
    if cuts.len() > EXPANSION_CUT_LIMIT {
        return Err(Error::ExpansionTooLarge(cuts.len()));
    }
    let mut branch: Vec<VertexSet> = cuts.iter().map(|&w| 1u64 << w).collect();
    for comp in g.components_within(g.vertex_set() & !block) {
        let touch = members(comp).fold(0, |acc, x| acc | g.neighbors(x)) & block;
        let at = cuts.iter().position(|&w| touch == 1 << w).expect("component hangs off one cut vertex");
        branch[at] |= comp;
    }
    Ok(Branches { block, cuts, branch })
}

/// `F(G)` expanded over the subsets of a block's cut vertices:
/// `F(B) + sum (F(G_i) - 1) + sum_S c(S) prod_{i in S} (f_Gi(w_i) - 1)`,
/// where `c({i}) = f_B(w_i) - 1` and `c(S) = f_B(S)` for larger `S`.
pub fn block_expansion_count(g: &Graph, block: VertexSet) -> Result<Count> {
    let b = branches(g, block)?;
    let mut engine = Engine::new(g, SplitOrder::default());
    let one = Count::one();
    let mut total = engine.block_count(b.block, 0)?;
    let mut weights = Vec::with_capacity(b.cuts.len());
    for (i, &w) in b.cuts.iter().enumerate() {
        total += engine.count(b.branch[i], 0)? - &one;
        weights.push(engine.count(b.branch[i], 1 << w)? - &one);
    }
    for subset in 1u64..(1u64 << b.cuts.len()) {
        let chosen: VertexSet = members(subset).fold(0, |acc, i| acc | 1 << b.cuts[i]);
        let mut term = engine.block_count(b.block, chosen)?;
        if subset.count_ones() == 1 {
            term -= &one;
        }
        for i in members(subset) {
            term *= &weights[i];
        }
        total += term;
    }
    Ok(total)
}

/// `f_G(v0)` for `v0` in the block, expanded the same way:
/// `sum_S f_B({v0} + S) prod_{i in S} (f_Gi(w_i) - 1)` over all subsets `S`.
pub fn block_expansion_subgraph_number(g: &Graph, block: VertexSet, v0: usize) -> Result<Count> {
    g.check_vertex(v0)?;
    let b = branches(g, block)?;
    if block >> v0 & 1 == 0 {
        return Err(Error::VertexOutOfRange { vertex: v0, n: g.n() });
    }
    let mut engine = Engine::new(g, SplitOrder::default());
    let one = Count::one();
    let mut weights = Vec::with_capacity(b.cuts.len());
    for (i, &w) in b.cuts.iter().enumerate() {
        weights.push(engine.count(b.branch[i], 1 << w)? - &one);
    }
    let mut total = Count::default();
    for subset in 0u64..(1u64 << b.cuts.len()) {
        let chosen: VertexSet = members(subset).fold(1u64 << v0, |acc, i| acc | 1 << b.cuts[i]);
        let mut term = engine.block_count(b.block, chosen)?;
        for i in members(subset) {
            term *= &weights[i];
        }
        total += term;
    }
    Ok(total)
}
