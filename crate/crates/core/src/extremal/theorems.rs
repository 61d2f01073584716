//! Exhaustive checks of extremal statements over small classes.
//!
//! Each check either scans every graph of the relevant classes or runs a
//! minimizer search and compares the complete minimizer set with the
//! expected family members. Threshold checks use enumerations that stop
//! just past the threshold, so dense graphs are cheap.

use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{
    generate, search_min_f, search_min_vertex_subgraph_number, ClassSpec, Minimizer, SearchReport, Subset,
    GENERATION_CAP,
};
use crate::canon::{are_isomorphic, canonize_colored};
use crate::census::{count_connected_subgraphs, count_containing, count_containing_bounded};
use crate::decompose::{
    block_expansion_count, count_via_decomposition, count_via_decomposition_with, subgraph_number_via_decomposition,
    SplitOrder,
};
use crate::error::{Error, Result};
use crate::families::{FamilySpec, Tag};
use crate::graph::{members, Graph};
use crate::io::to_graph6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub passed: bool,
    /// Number of instances examined.
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {} checked={}", self.id, self.checked)?;
        for c in &self.counterexamples {
            writeln!(f, "  counterexample: {c}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

struct Tally {
    checked: usize,
    counterexamples: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { checked: 0, counterexamples: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(what());
        }
    }

    fn finish(self, id: &str) -> TheoremReport {
        TheoremReport {
            id: id.to_string(),
            passed: self.counterexamples.is_empty(),
            checked: self.checked,
            counterexamples: self.counterexamples,
            notes: self.notes,
        }
    }
}

/// Id, description, and the largest order the check will run at.
const THEOREMS: &[(&str, &str, usize)] = &[
    ("edge-effect", "deleting an edge strictly lowers F and every f(v)", 6),
    ("decomposition", "cut-vertex recursion, vertex formula and block expansion equal enumeration", 7),
    ("no-cut-vertex", "2-connected: f(v) >= (n^2+n+2)/2, equality exactly for cycles", GENERATION_CAP),
    ("two-connected-total", "2-connected: F >= n^2+1, equality exactly for cycles", GENERATION_CAP),
    ("cycle-pair", "cycle pairs: (n^2+2n+4)/4 <= f(u,v) <= (n^2-n+4)/2 with distance 1 and n/2 equality", 64),
    ("pair-2connected", "2-connected non-cycle: f(u,v) exceeds every cycle pair count", GENERATION_CAP),
    ("min-pair", "u,v in one block: f(u,v) >= 2(n-k)-1 unless K_{1,3}", GENERATION_CAP),
    ("min-not-cut", "vertex minimizers: argmin vertex is not a cut vertex, graph is triangle-free", GENERATION_CAP),
    (
        "sharing-w",
        "non-tree vertex minimizers: the argmin block shares each cut vertex with at most four blocks",
        GENERATION_CAP,
    ),
    ("moving-component", "moving a component to another vertex of a neighbor lowers f", GENERATION_CAP),
    ("min-subgraph-number", "non-trees: min f = ((n-k)^2+n+k+2)/2, only at the pendant of L(n,n-k)", GENERATION_CAP),
    ("three-regime", "all graphs: minimum f by regime k <= n-6, k = n-5, k in {n-4, n-3}", GENERATION_CAP),
    ("tree-min-vertex", "trees: min f = 2^(n-k-1)+k at the path end of PS(k+1,n-k-1)", GENERATION_CAP),
    ("min-on-trees", "trees: min F attained only by the balanced double broom", GENERATION_CAP),
    ("finite-girth", "non-trees with girth >= k: min F = F(L(n,n-k)), tie with Q at n = 2k+1", GENERATION_CAP),
    ("triangle-free-min", "F minimizers with k >= 1 are triangle-free", GENERATION_CAP),
    (
        "pendant-block-cycle",
        "non-tree F minimizers with girth >= k: pendant blocks are edges or cycles",
        GENERATION_CAP,
    ),
    ("cut-vertex-bound", "a connected graph on n >= 2 vertices has at most n-2 cut vertices", GENERATION_CAP),
];

/// Theorem ids with one-line descriptions.
pub fn theorem_ids() -> Vec<(&'static str, &'static str)> {
    THEOREMS.iter().map(|&(id, what, _)| (id, what)).collect()
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn all_connected(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(&ClassSpec::new(n), |g| out.push(g.clone()))?;
    Ok(out)
}

fn cut_count(g: &Graph) -> usize {
    g.cut_vertices().map_or(0, |c| c.count_ones() as usize)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// `f` of the set, or `None` when it exceeds `limit`.
fn bounded(g: &Graph, req: u64, limit: u64) -> Result<Option<u64>> {
    count_containing_bounded(g, req, limit)
}

/// Whether `(g, v)` and `(h, w)` are isomorphic as rooted graphs.
fn rooted_match(g: &Graph, v: usize, h: &Graph, w: usize) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let mark = |n: usize, x: usize| (0..n).map(|i| usize::from(i == x)).collect::<Vec<_>>();
    canonize_colored(g, &mark(g.n(), v)).graph == canonize_colored(h, &mark(h.n(), w)).graph
}

/// A vertex minimizer equals the family member rooted at the tagged vertex,
/// with the argmin being exactly that vertex's orbit.
fn minimizer_is(m: &Minimizer, spec: FamilySpec, tag: Tag) -> Result<bool> {
    let h = spec.build()?;
    let w = spec.special_vertex(tag)?;
    let orbits = m.argmin_orbits.as_deref().unwrap_or(&[]);
    Ok(orbits.len() == 1 && rooted_match(&m.graph, orbits[0][0], &h, w))
}

/// The minimizer set is exactly `expected` up to isomorphism.
fn minimizers_are(report: &SearchReport, expected: &[Graph]) -> bool {
    report.minimizers.len() == expected.len()
        && expected.iter().all(|e| report.minimizers.iter().any(|m| are_isomorphic(&m.graph, e)))
}

fn describe(report: &SearchReport) -> String {
    let names: Vec<&str> = report.minimizers.iter().map(|m| m.graph6.as_str()).collect();
    format!(
        "{}: min={} minimizers=[{}]",
        report.class,
        report.minimum.as_ref().map_or("none".into(), |m| m.to_string()),
        names.join(",")
    )
}

fn min_u64(report: &SearchReport) -> Option<u64> {
    report.minimum.as_ref().and_then(|m| m.to_u64())
}

fn edge_effect(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 2..=n_max {
        for g in all_connected(n)? {
            let total = count_connected_subgraphs(&g)?;
            let per: Vec<_> = (0..n).map(|v| count_containing(&g, 1 << v)).collect::<Result<_>>()?;
            for (u, v) in g.edges() {
                let h = g.without_edge(u, v);
                let ok = count_connected_subgraphs(&h)? < total
                    && (0..n).all(|x| count_containing(&h, 1 << x).is_ok_and(|c| c < per[x]));
                t.check(ok, || format!("{} edge {u}-{v}", g6(&g)));
            }
        }
    }
    Ok(())
}

fn decomposition(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        for g in all_connected(n)? {
            if g.cut_vertices()? == 0 {
                continue;
            }
            let total = count_connected_subgraphs(&g)?;
            let mut ok = count_via_decomposition(&g)? == total
                && count_via_decomposition_with(&g, SplitOrder::Largest)? == total;
            for v in 0..n {
                ok &= subgraph_number_via_decomposition(&g, v)? == count_containing(&g, 1 << v)?;
            }
            for &b in g.block_cut_tree()?.blocks() {
                ok &= block_expansion_count(&g, b)? == total;
            }
            t.check(ok, || g6(&g));
        }
    }
    Ok(())
}

fn two_connected(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(&ClassSpec::new(n).with_cut_vertices(0), |g| out.push(g.clone()))?;
    Ok(out)
}

fn no_cut_vertex(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        let bound = ((n * n + n + 2) / 2) as u64;
        for g in two_connected(n)? {
            let cycle = is_cycle(&g);
            for v in 0..n {
                let f = bounded(&g, 1 << v, bound)?;
                let ok = match f {
                    Some(x) if x < bound => false,
                    Some(_) => cycle,
                    None => !cycle,
                };
                t.check(ok, || format!("{} vertex {v}: f={f:?} bound={bound}", g6(&g)));
            }
        }
    }
    Ok(())
}

fn two_connected_total(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        let bound = (n * n + 1) as u64;
        for g in two_connected(n)? {
            let f = bounded(&g, 0, bound)?;
            let ok = match f {
                Some(x) => x == bound && is_cycle(&g),
                None => !is_cycle(&g),
            };
            t.check(ok, || format!("{}: F={f:?} bound={bound}", g6(&g)));
        }
    }
    Ok(())
}

fn cycle_pair(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        let c = FamilySpec::Cycle { n }.build()?;
        let lower4 = (n * n + 2 * n + 4) as u64;
        let upper2 = (n * n - n + 4) as u64;
        for u in 0..n {
            for v in u + 1..n {
                let f = count_containing(&c, 1 << u | 1 << v)?.to_u64().unwrap();
                let d = c.distance(u, v)?;
                let ok = lower4 <= 4 * f
                    && 2 * f <= upper2
                    && (4 * f == lower4) == (2 * d == n)
                    && (2 * f == upper2) == (d == 1);
                t.check(ok, || format!("C{n} pair {u},{v}: f={f} distance={d}"));
            }
        }
    }
    Ok(())
}

fn pair_two_connected(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        let cycle_max = ((n * n - n + 4) / 2) as u64;
        for g in two_connected(n)? {
            if is_cycle(&g) {
                continue;
            }
            for u in 0..n {
                for v in u + 1..n {
                    let f = bounded(&g, 1 << u | 1 << v, cycle_max)?;
                    t.check(f.is_none(), || format!("{} pair {u},{v}: f={f:?} <= {cycle_max}", g6(&g)));
                }
            }
        }
    }
    Ok(())
}

fn min_pair(n_max: usize, t: &mut Tally) -> Result<()> {
    let claw = FamilySpec::Star { n: 4 }.build()?;
    for n in 3..=n_max {
        for g in all_connected(n)? {
            let k = cut_count(&g);
            if k + 3 > n || are_isomorphic(&g, &claw) {
                continue;
            }
            let bound = (2 * (n - k) - 1) as u64;
            for &b in g.block_cut_tree()?.blocks() {
                let vs: Vec<usize> = members(b).collect();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        let f = bounded(&g, 1 << u | 1 << v, bound)?;
                        let ok = f.is_none_or(|x| x >= bound);
                        t.check(ok, || format!("{} pair {u},{v}: f={f:?} < {bound}", g6(&g)));
                    }
                }
            }
        }
    }
    Ok(())
}

fn min_not_cut(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 0..=n - 2 {
            let r = search_min_vertex_subgraph_number(&ClassSpec::new(n).with_cut_vertices(k))?;
            for m in &r.minimizers {
                let cuts = m.graph.cut_vertices()?;
                let argmin: u64 = m.argmin_orbits.iter().flatten().flatten().fold(0, |a, &v| a | 1 << v);
                let ok = argmin & cuts == 0 && m.graph.girth().is_at_least(4);
                t.check(ok, || describe(&r));
            }
        }
    }
    Ok(())
}

fn sharing_w(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 5..=n_max {
        for k in 1..=n - 3 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_subset(Subset::NonTrees);
            let r = search_min_vertex_subgraph_number(&class)?;
            for m in &r.minimizers {
                let tree = m.graph.block_cut_tree()?;
                let mut ok = true;
                for v in m.argmin_orbits.iter().flatten().flatten() {
                    for (bi, &b) in tree.blocks().iter().enumerate() {
                        if b >> v & 1 == 0 {
                            continue;
                        }
                        for w in members(tree.cuts_in(bi)) {
                            let others: Vec<usize> = tree.blocks_at(w).iter().copied().filter(|&x| x != bi).collect();
                            ok &= others.len() <= 4;
                            if others.len() >= 2 {
                                ok &= others.iter().all(|&x| tree.blocks()[x].count_ones() == 2 && tree.is_pendant(x));
                            }
                        }
                    }
                }
                t.check(ok, || format!("{} in {}", m.graph6, describe(&r)));
            }
        }
    }
    Ok(())
}

/// Glues `b` onto `a` by identifying `b`'s vertex `bv` with `a`'s vertex
/// `av`; `b`'s other vertices are appended after `a`'s.
fn glue(a: &Graph, av: usize, b: &Graph, bv: usize) -> Result<(Graph, Vec<usize>)> {
    let mut map = vec![0; b.n()];
    let mut next = a.n();
    for (x, slot) in map.iter_mut().enumerate() {
        if x == bv {
            *slot = av;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(x, y)| (map[x], map[y])));
    Ok((Graph::from_edges(next, &edges)?, map))
}

fn moving_component(t: &mut Tally) -> Result<()> {
    let mut rooted: Vec<(Graph, usize)> = Vec::new();
    for n in 1..=3 {
        for g in all_connected(n)? {
            for r in 0..n {
                rooted.push((g.clone(), r));
            }
        }
    }
    for (g1, r1) in &rooted {
        for (g2, r2) in rooted.iter().filter(|(g, _)| g.n() >= 2) {
            for (g3, r3) in rooted.iter().filter(|(g, _)| g.n() >= 2) {
                let (g12, map2) = glue(g1, *r1, g2, *r2)?;
                let (before, _) = glue(&g12, *r1, g3, *r3)?;
                for w2 in (0..g2.n()).filter(|&x| x != *r2) {
                    let (after, _) = glue(&g12, map2[w2], g3, *r3)?;
                    for v in 0..g1.n() {
                        let ok = count_containing(&after, 1 << v)? < count_containing(&before, 1 << v)?;
                        t.check(ok, || format!("G={} G*={} v={v}", g6(&before), g6(&after)));
                    }
                }
            }
        }
    }
    t.notes.push(format!("{} (G, G*, v) triples from rooted pieces on at most 3 vertices", t.checked));
    Ok(())
}

fn min_subgraph_number(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 1..=n - 3 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_subset(Subset::NonTrees);
            let r = search_min_vertex_subgraph_number(&class)?;
            let want = (((n - k) * (n - k) + n + k + 2) / 2) as u64;
            let l = FamilySpec::L { n, g: n - k };
            let ok = min_u64(&r) == Some(want)
                && r.minimizers.len() == 1
                && minimizer_is(&r.minimizers[0], l, Tag::Pendant)?;
            t.check(ok, || format!("{} expected {want} at pendant of {l}", describe(&r)));
        }
    }
    Ok(())
}

fn three_regime(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 1..=n - 3 {
            let r = search_min_vertex_subgraph_number(&ClassSpec::new(n).with_cut_vertices(k))?;
            let path_star = FamilySpec::PathStar { k: k + 1, m: n - k - 1 };
            let lollipop = FamilySpec::L { n, g: n - k };
            let (want, expected): (u64, Vec<(FamilySpec, Tag)>) = if k + 6 <= n {
                ((((n - k) * (n - k) + n + k + 2) / 2) as u64, vec![(lollipop, Tag::Pendant)])
            } else if k + 5 == n {
                (16 + k as u64, vec![(path_star, Tag::End), (lollipop, Tag::Pendant)])
            } else {
                ((1u64 << (n - k - 1)) + k as u64, vec![(path_star, Tag::End)])
            };
            let mut ok = min_u64(&r) == Some(want) && r.minimizers.len() == expected.len();
            for &(spec, tag) in &expected {
                let mut found = false;
                for m in &r.minimizers {
                    found |= minimizer_is(m, spec, tag)?;
                }
                ok &= found;
            }
            t.check(ok, || format!("{} expected {want}", describe(&r)));
        }
    }
    Ok(())
}

fn tree_min_vertex(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_subset(Subset::Trees);
            let r = search_min_vertex_subgraph_number(&class)?;
            let want = (1u64 << (n - k - 1)) + k as u64;
            let spec = FamilySpec::PathStar { k: k + 1, m: n - k - 1 };
            let mut found = false;
            for m in &r.minimizers {
                let h = spec.build()?;
                let w = spec.special_vertex(Tag::End)?;
                found |= m.argmin_orbits.iter().flatten().any(|o| rooted_match(&m.graph, o[0], &h, w));
            }
            t.check(min_u64(&r) == Some(want) && found, || format!("{} expected {want}", describe(&r)));
        }
    }
    Ok(())
}

fn min_on_trees(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 2..=n - 2 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_subset(Subset::Trees);
            let r = search_min_f(&class)?;
            let spec = FamilySpec::DoubleBroom { l: (n - k) / 2, m: (n - k).div_ceil(2), d: k };
            let want = spec.closed_form_f_total()?;
            let ok = r.minimum.as_ref() == Some(&want) && minimizers_are(&r, &[spec.build()?]);
            t.check(ok, || format!("{} expected {spec} with {want}", describe(&r)));
        }
    }
    Ok(())
}

fn finite_girth(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 1..=n - 3 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_min_girth(k).with_subset(Subset::NonTrees);
            let r = search_min_f(&class)?;
            if n < 2 * k {
                // L(n, n-k) has girth n-k < k, and the class is empty
                t.check(r.class_size == 0, || format!("{} expected an empty class", describe(&r)));
                continue;
            }
            let l = FamilySpec::L { n, g: n - k };
            let mut expected = vec![l.build()?];
            if n == 2 * k + 1 && k >= 3 {
                expected.push(FamilySpec::Q { n, k }.build()?);
            }
            let want = l.closed_form_f_total()?;
            let ok = r.minimum.as_ref() == Some(&want) && minimizers_are(&r, &expected);
            t.check(ok, || format!("{} expected {} graph(s) with {want}", describe(&r), expected.len()));
        }
    }
    Ok(())
}

fn triangle_free_min(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 1..=n - 2 {
            let r = search_min_f(&ClassSpec::new(n).with_cut_vertices(k))?;
            let ok = r.minimizers.iter().all(|m| m.graph.girth().is_at_least(4));
            t.check(ok, || describe(&r));
        }
    }
    Ok(())
}

fn pendant_block_cycle(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 4..=n_max {
        for k in 1..=n - 3 {
            let class = ClassSpec::new(n).with_cut_vertices(k).with_min_girth(k).with_subset(Subset::NonTrees);
            let r = search_min_f(&class)?;
            for m in &r.minimizers {
                let tree = m.graph.block_cut_tree()?;
                let ok = (0..tree.blocks().len()).filter(|&b| tree.is_pendant(b)).all(|b| {
                    let set = tree.blocks()[b];
                    set.count_ones() == 2 || m.graph.edges_within(set) == set.count_ones() as usize
                });
                t.check(ok, || format!("{} in {}", m.graph6, describe(&r)));
            }
        }
    }
    Ok(())
}

fn cut_vertex_bound(n_max: usize, t: &mut Tally) -> Result<()> {
    for n in 2..=n_max {
        for g in all_connected(n)? {
            let k = cut_count(&g);
            t.check(k + 2 <= n, || format!("{} has {k} cut vertices", g6(&g)));
        }
    }
    Ok(())
}

/// Runs one check over orders up to `n_max` (each check starts at the
/// smallest order where its statement applies).
pub fn verify_theorem(id: &str, n_max: usize) -> Result<TheoremReport> {
    let &(_, _, limit) = THEOREMS.iter().find(|t| t.0 == id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let mut t = Tally::new();
    if n_max > limit {
        t.notes.push(format!("orders above {limit} are not checked"));
    }
    let n_max = n_max.min(limit);
    match id {
        "edge-effect" => edge_effect(n_max, &mut t)?,
        "decomposition" => decomposition(n_max, &mut t)?,
        "no-cut-vertex" => no_cut_vertex(n_max, &mut t)?,
        "two-connected-total" => two_connected_total(n_max, &mut t)?,
        "cycle-pair" => cycle_pair(n_max, &mut t)?,
        "pair-2connected" => pair_two_connected(n_max, &mut t)?,
        "min-pair" => min_pair(n_max, &mut t)?,
        "min-not-cut" => min_not_cut(n_max, &mut t)?,
        "sharing-w" => sharing_w(n_max, &mut t)?,
        "moving-component" => moving_component(&mut t)?,
        "min-subgraph-number" => min_subgraph_number(n_max, &mut t)?,
        "three-regime" => three_regime(n_max, &mut t)?,
        "tree-min-vertex" => tree_min_vertex(n_max, &mut t)?,
        "min-on-trees" => min_on_trees(n_max, &mut t)?,
        "finite-girth" => finite_girth(n_max, &mut t)?,
        "triangle-free-min" => triangle_free_min(n_max, &mut t)?,
        "pendant-block-cycle" => pendant_block_cycle(n_max, &mut t)?,
        "cut-vertex-bound" => cut_vertex_bound(n_max, &mut t)?,
        _ => return Err(Error::UnknownTheorem(id.to_string())),
    }
    Ok(t.finish(id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        for (id, _, _) in THEOREMS {
            let r = verify_theorem(id, 5).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn unknown_id() {
        assert_eq!(verify_theorem("nope", 5), Err(Error::UnknownTheorem("nope".into())));
    }

    #[test]
    fn glue_appends_new_vertices() {
        let p2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (g, map) = glue(&p2, 1, &p2, 0).unwrap();
        assert_eq!(map, vec![1, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }
}
