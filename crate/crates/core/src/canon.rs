//! Canonical labeling by partition refinement with individualization.
//!
//! The search tree is the usual one: refine an ordered partition until it
//! is equitable, individualize each vertex of the first smallest
//! non-singleton cell in turn, and recurse. Leaves are discrete partitions;
//! the canonical form is the least relabelled adjacency over all leaves.
//! Automorphisms discovered from equal leaves prune children that lie in
//! one orbit of the pointwise stabilizer of the current prefix.
//!
//! Initial cells are ordered by (color, degree), so the vertex that gets
//! the last canonical label always has the largest degree among vertices
//! of the largest color.

use crate::graph::{full_set, members, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// The graph relabelled canonically.
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    cert: Vec<u64>,
    labeling: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().fold(0, |acc, &v| acc | 1u64 << v)).collect();
        let mut next = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect(), v)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Orbit representative map of the group generated by `gens`.
fn orbit_roots(n: usize, gens: &[&Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gamma in gens {
        for (u, &v) in gamma.iter().enumerate() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

impl<'a> Search<'a> {
    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.n();
        let mut labeling = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let mut cert = vec![0u64; n];
        for v in 0..n {
            cert[labeling[v]] = members(self.g.neighbors(v)).fold(0, |acc, u| acc | 1u64 << labeling[u]);
        }
        let leaf = Leaf { cert, labeling };
        let Some(first) = &self.first else {
            self.first = Some(Leaf { cert: leaf.cert.clone(), labeling: leaf.labeling.clone() });
            self.best = Some(leaf);
            return;
        };
        let best = self.best.as_ref().unwrap();
        let reference = if leaf.cert == first.cert {
            Some(first)
        } else if leaf.cert == best.cert {
            Some(best)
        } else {
            None
        };
        match reference {
            Some(r) => {
                let mut inverse = vec![0; n];
                for (v, &l) in r.labeling.iter().enumerate() {
                    inverse[l] = v;
                }
                let gamma: Vec<usize> = leaf.labeling.iter().map(|&l| inverse[l]).collect();
                if gamma.iter().enumerate().any(|(u, &v)| u != v) {
                    self.automorphisms.push(gamma);
                }
            }
            None if leaf.cert < best.cert => self.best = Some(leaf),
            None => {}
        }
    }

    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        if cells.len() == self.g.n() {
            self.leaf(&cells);
            return;
        }
        let (target, _) =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).unwrap();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let fixing: Vec<&Vec<usize>> =
                    self.automorphisms.iter().filter(|gamma| prefix.iter().all(|&p| gamma[p] == p)).collect();
                if !fixing.is_empty() {
                    let roots = orbit_roots(self.g.n(), &fixing);
                    if tried.iter().any(|&u| roots[u] == roots[v]) {
                        continue;
                    }
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            tried.push(v);
        }
    }
}

/// Canonical labeling preserving a vertex coloring: only color-preserving
/// relabellings are considered, and smaller colors get smaller labels.
pub fn canonize_colored(g: &Graph, colors: &[usize]) -> Canonical {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (colors[v], g.degree(v)));
    let mut cells: Cells = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(c) if (colors[c[0]], g.degree(c[0])) == (colors[v], g.degree(v)) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.descend(cells, &mut Vec::new());
    let best = search.best.unwrap();
    Canonical { graph: Graph::from_rows(best.cert), labeling: best.labeling }
}

pub fn canonize(g: &Graph) -> Canonical {
    canonize_colored(g, &vec![0; g.n()])
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonize(g).graph
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Orbits of the automorphism group on vertices, each as a vertex set,
/// ordered by least member. Two vertices share an orbit exactly when
/// marking either one gives the same canonical colored graph.
pub fn vertex_orbits(g: &Graph) -> Vec<VertexSet> {
    let mut seen: Vec<Graph> = Vec::new();
    let mut orbits: Vec<VertexSet> = Vec::new();
    for v in 0..g.n() {
        let mut colors = vec![0; g.n()];
        colors[v] = 1;
        let key = canonize_colored(g, &colors).graph;
        match seen.iter().position(|s| *s == key) {
            Some(i) => orbits[i] |= 1 << v,
            None => {
                seen.push(key);
                orbits.push(1 << v);
            }
        }
    }
    orbits
}

/// Least relabelled adjacency over all `n!` permutations. Exponential;
/// kept as an independent reference for small graphs.
pub fn brute_force_canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    assert!(n <= 9, "brute-force canonical form is limited to 9 vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    let mut c = vec![0usize; n];
    let mut consider = |perm: &[usize]| {
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = members(g.neighbors(v)).fold(0, |acc, u| acc | 1u64 << perm[u]);
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    };
    consider(&perm);
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let rows = best.unwrap();
    debug_assert_eq!(rows.iter().fold(0, |a, r| a | r) & !full_set(n), 0);
    Graph::from_rows(rows)
}
