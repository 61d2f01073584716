mod common;

use common::{oracle_all, random_connected};
use cutcount::census::{count_connected_subgraphs, subgraph_number};
use cutcount::decompose::{
    all_subgraph_numbers, block_expansion_count, block_expansion_subgraph_number, count_via_decomposition,
    count_via_decomposition_with, cut_vertex_subgraph_number, split_at, SplitOrder,
};
use cutcount::extremal::{generate_all, ClassSpec};
use cutcount::graph::members;
use cutcount::{Count, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn agree_everywhere(g: &Graph) {
    let (total, per_vertex_oracle) = oracle_all(g);
    let total = Count::from(total);
    assert_eq!(count_connected_subgraphs(g).unwrap(), total);
    assert_eq!(count_via_decomposition(g).unwrap(), total);
    let per_vertex = all_subgraph_numbers(g).unwrap();
    for v in 0..g.n() {
        let want = Count::from(per_vertex_oracle[v]);
        assert_eq!(per_vertex[v], want, "f({v})");
        assert_eq!(subgraph_number(g, v).unwrap(), want, "census f({v})");
    }
    let tree = g.block_cut_tree().unwrap();
    for &block in tree.blocks() {
        assert_eq!(block_expansion_count(g, block).unwrap(), total);
        for v in members(block) {
            assert_eq!(block_expansion_subgraph_number(g, block, v).unwrap(), per_vertex[v]);
        }
    }
    for w in members(g.cut_vertices().unwrap()) {
        assert_eq!(cut_vertex_subgraph_number(g, w).unwrap(), per_vertex[w]);
    }
}

#[test]
fn exhaustive_with_cut_vertex_up_to_seven() {
    let mut seen = 0;
    for n in 3..=7 {
        for g in generate_all(&ClassSpec::new(n)).unwrap() {
            if g.cut_vertices().unwrap() != 0 {
                agree_everywhere(&g);
                seen += 1;
            }
        }
    }
    // Connected minus 2-connected: 1 + 3 + 11 + 56 + 385.
    assert_eq!(seen, 456);
}

#[test]
fn random_connected_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..250 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(n - 1..=20);
        agree_everywhere(&random_connected(&mut rng, n, m));
    }
}

#[test]
fn split_order_does_not_matter() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.gen_range(2..=14);
        let m = rng.gen_range(n - 1..=n + 6);
        let g = random_connected(&mut rng, n, m);
        let base = count_via_decomposition_with(&g, SplitOrder::Smallest).unwrap();
        assert_eq!(count_via_decomposition_with(&g, SplitOrder::Largest).unwrap(), base);
        for seed in 0..3 {
            assert_eq!(count_via_decomposition_with(&g, SplitOrder::Seeded(seed)).unwrap(), base);
        }
    }
}

#[test]
fn splits_reassemble() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let g = random_connected(&mut rng, n, n + 2);
        for w in members(g.cut_vertices().unwrap()) {
            let split = split_at(&g, w).unwrap();
            assert!(split.parts.len() >= 2);
            let mut union = 0;
            let mut edges = 0;
            for part in &split.parts {
                assert!(part.graph.is_connected());
                assert_eq!(part.vertices & union, 1 << w & union);
                union |= part.vertices;
                edges += part.graph.edge_count();
            }
            assert_eq!(union, g.vertex_set());
            assert_eq!(edges, g.edge_count());
        }
    }
}
