mod common;

use std::collections::BTreeSet;

use common::all_labeled;
use cutcount::canon::{are_isomorphic, brute_force_canonical_form, canonical_form, vertex_orbits};
use cutcount::extremal::{generate, generate_all, ClassSpec, Subset};
use cutcount::io::to_graph6;
use cutcount::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn key(g: &Graph) -> String {
    to_graph6(&brute_force_canonical_form(g)).unwrap()
}

/// Isomorphism classes found by filtering every labeled graph.
fn naive_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<String> {
    all_labeled(n).filter(|g| g.is_connected() && keep(g)).map(|g| key(&g)).collect()
}

#[test]
fn complete_against_labeled_enumeration() {
    for n in 1..=6 {
        let want = naive_classes(n, |_| true);
        let got: BTreeSet<String> = generate_all(&ClassSpec::new(n)).unwrap().iter().map(key).collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn complete_for_restricted_classes() {
    for n in 3..=6 {
        for k in 0..=n - 2 {
            for girth in [3, 4, 5] {
                let class = ClassSpec::new(n).with_cut_vertices(k).with_min_girth(girth);
                let want = naive_classes(n, |g| class.admits(g));
                let got: BTreeSet<String> = generate_all(&class).unwrap().iter().map(key).collect();
                assert_eq!(got, want, "{class}");
            }
        }
        for subset in [Subset::Trees, Subset::NonTrees] {
            let class = ClassSpec::new(n).with_subset(subset);
            let want = naive_classes(n, |g| class.admits(g));
            let got: BTreeSet<String> = generate_all(&class).unwrap().iter().map(key).collect();
            assert_eq!(got, want, "{class}");
        }
    }
}

#[test]
fn no_duplicates_up_to_seven() {
    for n in 1..=7 {
        let all = generate_all(&ClassSpec::new(n)).unwrap();
        let distinct: BTreeSet<String> = all.iter().map(key).collect();
        assert_eq!(distinct.len(), all.len(), "n = {n}");
    }
}

#[test]
fn known_class_sizes() {
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &want) in connected.iter().enumerate() {
        assert_eq!(generate(&ClassSpec::new(i + 1), |_| {}).unwrap(), want);
    }
    let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &want) in trees.iter().enumerate() {
        let class = ClassSpec::new(i + 1).with_subset(Subset::Trees);
        assert_eq!(generate(&class, |_| {}).unwrap(), want);
    }
}

#[test]
fn generation_is_repeatable() {
    let class = ClassSpec::new(8).with_cut_vertices(2);
    let a: Vec<String> = generate_all(&class).unwrap().iter().map(|g| to_graph6(g).unwrap()).collect();
    let b: Vec<String> = generate_all(&class).unwrap().iter().map(|g| to_graph6(g).unwrap()).collect();
    assert_eq!(a, b);
}

#[test]
fn canonical_form_matches_brute_force_on_invariance() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_eq!(brute_force_canonical_form(&g), brute_force_canonical_form(&h));
        assert!(are_isomorphic(&g, &h));
    }
}

#[test]
fn orbits_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let g = common::random_graph(&mut rng, n, 0.4);
        let orbits = vertex_orbits(&g);
        let autos = automorphisms(&g);
        for u in 0..n {
            for v in 0..n {
                let same = orbits.iter().any(|o| o >> u & 1 == 1 && o >> v & 1 == 1);
                assert_eq!(same, autos.iter().any(|p| p[u] == v), "{g:?} {u} {v}");
            }
        }
    }
}

fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, perm: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
        let u = perm.len();
        if u == g.n() {
            out.push(perm.clone());
            return;
        }
        for v in 0..g.n() {
            if used >> v & 1 == 0 && (0..u).all(|w| g.has_edge(u, w) == g.has_edge(v, perm[w])) {
                perm.push(v);
                extend(g, perm, used | 1 << v, out);
                perm.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), 0, &mut out);
    out
}
