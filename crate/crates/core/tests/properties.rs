use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

use augecc::ecc::eccentricities;
use augecc::enumerate::{canonical_code, free_trees, random_tree, tree_from_prufer};
use augecc::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use augecc::index::{index_value, IndexKind};
use augecc::Graph;

fn connected_graph() -> impl Strategy<Value = Graph> {
    (
        3usize..=12,
        any::<u64>(),
        prop::collection::vec((0usize..12, 0usize..12), 0..20),
    )
        .prop_map(|(n, seed, extra)| {
            let t = random_tree(n, seed).unwrap();
            let mut edges: HashSet<(usize, usize)> = t.edges().into_iter().collect();
            for (a, b) in extra {
                let (a, b) = (a % n, b % n);
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            Graph::new(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn index_is_relabelling_invariant((g, perm) in connected_graph().prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&perm).unwrap();
        for kind in IndexKind::ALL {
            prop_assert_eq!(index_value(&g, kind).unwrap(), index_value(&h, kind).unwrap());
        }
    }

    #[test]
    fn augmented_denominator_divides_lcm_of_eccentricities(g in connected_graph()) {
        let d = eccentricities(&g).unwrap().diameter;
        let lcm = (1..=d).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
        let v = index_value(&g, IndexKind::Augmented).unwrap();
        prop_assert!((lcm % v.denom()) == BigInt::from(0));
    }

    #[test]
    fn adjacent_eccentricities_differ_by_at_most_one(g in connected_graph()) {
        let e = eccentricities(&g).unwrap().ecc;
        for (u, v) in g.edges() {
            prop_assert!(e[u].abs_diff(e[v]) <= 1);
        }
    }

    #[test]
    fn tree_eccentricities_match_bfs(n in 2usize..40, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        let p = eccentricities(&t).unwrap();
        for u in 0..n {
            let far = t.bfs(u).into_iter().max().unwrap();
            prop_assert_eq!(p.ecc[u], far);
        }
        prop_assert!(p.center.len() <= 2);
        prop_assert_eq!(p.diameter, *p.ecc.iter().max().unwrap());
    }

    #[test]
    fn canonical_code_ignores_labels(n in 2usize..30, seed in any::<u64>(), shuffle in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic Fisher-Yates from the drawn word
        let mut s = shuffle | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let code = canonical_code(&t).unwrap();
        prop_assert_eq!(&code, &canonical_code(&t.relabel(&perm).unwrap()).unwrap());
        prop_assert_eq!(canonical_code(&code.to_graph()).unwrap(), code);
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in connected_graph()) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn random_tree_codes_appear_in_enumeration() {
    for n in 2..=14 {
        let codes: HashSet<_> = free_trees(n).unwrap().map(|t| canonical_code(&t).unwrap()).collect();
        for seed in 0..1000 {
            let c = canonical_code(&random_tree(n, seed).unwrap()).unwrap();
            assert!(codes.contains(&c), "n={n} seed={seed}");
        }
    }
}

#[test]
fn random_trees_are_uniform_on_four_labels() {
    // 16 labelled trees on 4 vertices; χ² with 15 degrees of freedom
    const DRAWS: u64 = 100_000;
    let mut counts: HashMap<Vec<(usize, usize)>, u64> = HashMap::new();
    for seed in 0..DRAWS {
        *counts.entry(random_tree(4, seed).unwrap().edges()).or_default() += 1;
    }
    assert_eq!(counts.len(), 16);
    let expected = DRAWS as f64 / 16.0;
    let chi2: f64 = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    // 0.999 quantile of χ²(15)
    assert!(chi2 < 37.70, "χ² = {chi2}");
}

#[test]
fn prufer_decoding_is_a_bijection_for_five_labels() {
    let mut seen = HashSet::new();
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                seen.insert(tree_from_prufer(5, &[a, b, c]).unwrap().edges());
            }
        }
    }
    assert_eq!(seen.len(), 125);
}
