#![allow(dead_code)]

use cutcount::Graph;
use rand::rngs::StdRng;
use rand::Rng;

/// Counts connected subgraphs `(S, E')` with `req` inside `S`, by trying
/// every vertex subset and every edge subset of the induced graph.
pub fn oracle_containing(g: &Graph, req: u64) -> u64 {
    let mut total = 0;
    oracle_visit(g, req, |_| total += 1);
    total
}

/// `F(G)` and every `f_G(v)` from one pass of the same enumeration.
pub fn oracle_all(g: &Graph) -> (u64, Vec<u64>) {
    let mut total = 0;
    let mut per_vertex = vec![0; g.n()];
    oracle_visit(g, 0, |s| {
        total += 1;
        for (v, c) in per_vertex.iter_mut().enumerate() {
            *c += s >> v & 1;
        }
    });
    (total, per_vertex)
}

fn oracle_visit(g: &Graph, req: u64, mut hit: impl FnMut(u64)) {
    let n = g.n();
    let edges = g.edges();
    for s in 1u64..(1 << n) {
        if s & req != req {
            continue;
        }
        let inside: Vec<(usize, usize)> =
            edges.iter().copied().filter(|&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1).collect();
        let size = s.count_ones() as usize;
        for pick in 0u64..(1 << inside.len()) {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                p[x] = r;
                r
            }
            let mut joined = 0;
            for (i, &(u, v)) in inside.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    if a != b {
                        parent[a] = b;
                        joined += 1;
                    }
                }
            }
            if joined + 1 == size {
                hit(s);
            }
        }
    }
}

pub fn oracle_total(g: &Graph) -> u64 {
    oracle_containing(g, 0)
}

pub fn oracle_vertex(g: &Graph, v: usize) -> u64 {
    oracle_containing(g, 1 << v)
}

/// Every labeled graph on `n` vertices, by edge mask over the pairs `i < j`.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// A random connected graph: a random tree on `n` vertices plus extra
/// edges until there are `m` (capped at the complete graph).
pub fn random_connected(rng: &mut StdRng, n: usize, m: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let target = m.max(n - 1).min(n * (n - 1) / 2);
    while edges.len() < target {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (a.min(b), a.max(b));
        if a != b && !edges.contains(&e) {
            edges.push(e);
        }
    }
    let perm: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    };
    Graph::from_edges(n, &edges).unwrap().relabel(&perm)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}
