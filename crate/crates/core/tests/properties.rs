use cutcount::canon::canonical_form;
use cutcount::census::{count_connected_subgraphs, subgraph_number};
use cutcount::decompose::{all_subgraph_numbers, count_via_decomposition, merge_count};
use cutcount::io::{parse_graph6, to_graph6};
use cutcount::Graph;
use proptest::prelude::*;

/// Connected graph from a parent list (a tree) plus extra pairs.
fn connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, prop::collection::vec((0..n, 0..n), 0..=max_extra)).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (a, b) in extra {
                let e = (a.min(b), a.max(b));
                if a != b && !edges.iter().any(|&(u, v)| (u.min(v), u.max(v)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn glue(a: &Graph, wa: usize, b: &Graph, wb: usize) -> Graph {
    // b's vertices shift by a.n(), except wb which becomes wa.
    let map = |v: usize| {
        if v == wb {
            wa
        } else if v < wb {
            a.n() + v
        } else {
            a.n() + v - 1
        }
    };
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (map(u), map(v))));
    Graph::from_edges(a.n() + b.n() - 1, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_matches_census(g in connected(11, 8)) {
        prop_assert_eq!(count_via_decomposition(&g).unwrap(), count_connected_subgraphs(&g).unwrap());
        let per_vertex = all_subgraph_numbers(&g).unwrap();
        for (v, f) in per_vertex.iter().enumerate() {
            prop_assert_eq!(f, &subgraph_number(&g, v).unwrap());
        }
    }

    #[test]
    fn deleting_an_edge_loses_subgraphs(g in connected(8, 6)) {
        let total = count_connected_subgraphs(&g).unwrap();
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v);
            prop_assert!(count_connected_subgraphs(&h).unwrap() < total);
            for x in 0..g.n() {
                prop_assert!(subgraph_number(&h, x).unwrap() < subgraph_number(&g, x).unwrap());
            }
        }
    }

    #[test]
    fn gluing_at_a_vertex_follows_merge_rule(
        a in connected(7, 4), b in connected(7, 4), pa in any::<prop::sample::Index>(), pb in any::<prop::sample::Index>()
    ) {
        let (wa, wb) = (pa.index(a.n()), pb.index(b.n()));
        let g = glue(&a, wa, &b, wb);
        let want = merge_count(
            &count_connected_subgraphs(&a).unwrap(),
            &count_connected_subgraphs(&b).unwrap(),
            &subgraph_number(&a, wa).unwrap(),
            &subgraph_number(&b, wb).unwrap(),
        );
        prop_assert_eq!(count_connected_subgraphs(&g).unwrap(), want.clone());
        prop_assert_eq!(count_via_decomposition(&g).unwrap(), want);
        let fw = subgraph_number(&a, wa).unwrap() * subgraph_number(&b, wb).unwrap();
        prop_assert_eq!(subgraph_number(&g, wa).unwrap(), fw);
    }

    #[test]
    fn counts_and_canonical_form_ignore_labels(g in connected(9, 6), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(count_via_decomposition(&g).unwrap(), count_via_decomposition(&h).unwrap());
        for (v, &pv) in perm.iter().enumerate() {
            prop_assert_eq!(subgraph_number(&g, v).unwrap(), subgraph_number(&h, pv).unwrap());
        }
    }

    #[test]
    fn graph6_round_trips(g in connected(30, 30)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }
}
