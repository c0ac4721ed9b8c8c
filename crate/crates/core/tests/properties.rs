use std::collections::BTreeSet;

use cfcolor::coloring::Coloring;
use cfcolor::exact::chi_cf_exact;
use cfcolor::greedy::greedy_cf_coloring;
use cfcolor::io::{parse_coloring, parse_hypergraph, write_coloring, write_hypergraph};
use cfcolor::verify::{is_conflict_free, is_proper, strong_condition};
use cfcolor::Hypergraph;
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn hypergraph(max_n: usize, sizes: std::ops::RangeInclusive<usize>, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (*sizes.end()..=max_n).prop_flat_map(move |n| {
        let edge = btree_set(1..=n, sizes.clone()).prop_map(|s: BTreeSet<usize>| s.into_iter().collect::<Vec<_>>());
        vec(edge, 0..=max_m).prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn uniform(max_n: usize, r: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    hypergraph(max_n, r..=r, max_m)
}

fn with_coloring<S: Strategy<Value = Hypergraph>>(h: S, k: usize) -> impl Strategy<Value = (Hypergraph, Coloring)> {
    h.prop_flat_map(move |h| {
        let n = h.n();
        (Just(h), vec(1..=k, n).prop_map(|c| Coloring::new(c).unwrap()))
    })
}

proptest! {
    #[test]
    fn degree_sum_equals_size_sum(h in hypergraph(20, 1..=5, 25)) {
        let deg: usize = h.degrees().iter().sum();
        let size: usize = h.edges().iter().map(Vec::len).sum();
        prop_assert_eq!(deg, size);
    }

    #[test]
    fn dual_swaps_degrees_and_sizes(h in hypergraph(12, 1..=4, 20)) {
        prop_assume!(h.degrees()[1..].iter().all(|&d| d > 0));
        let d = h.dual().unwrap();
        prop_assert_eq!(d.n(), h.m());
        prop_assert_eq!(d.m(), h.n());
        let sizes: Vec<usize> = d.edges().iter().map(Vec::len).collect();
        prop_assert_eq!(&sizes[..], &h.degrees()[1..]);
        let back: Vec<usize> = h.edges().iter().map(Vec::len).collect();
        prop_assert_eq!(&d.degrees()[1..], &back[..]);
        prop_assert_eq!(d.dual().unwrap(), h);
    }

    #[test]
    fn save_then_load_is_identity((h, c) in with_coloring(hypergraph(15, 1..=5, 20), 6)) {
        prop_assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
        prop_assert_eq!(parse_coloring(&write_coloring(&c)).unwrap(), c);
    }

    #[test]
    fn edge_degree_bounded(h in (2usize..=5).prop_flat_map(|r| uniform(14, r, 20))) {
        if let Some(r) = h.uniformity() {
            let delta = h.max_degree();
            prop_assert!(h.max_edge_degree() <= r * (delta - 1));
        }
    }

    #[test]
    fn strong_implies_conflict_free((h, c) in with_coloring((3usize..=6).prop_flat_map(|r| uniform(10, r, 12)), 8)) {
        prop_assume!(h.m() > 0);
        if strong_condition(&h, &c).unwrap().is_ok() {
            prop_assert!(is_conflict_free(&h, &c).unwrap().is_ok());
        }
    }

    #[test]
    fn proper_iff_conflict_free_small_edges((h, c) in with_coloring(hypergraph(10, 2..=3, 15), 3)) {
        prop_assert_eq!(is_proper(&h, &c).unwrap(), is_conflict_free(&h, &c).unwrap());
    }

    #[test]
    fn color_permutation_invariance(
        (h, c) in with_coloring(hypergraph(10, 1..=5, 12), 4),
        perm in Just(vec![1usize, 2, 3, 4]).prop_shuffle(),
    ) {
        let permuted = Coloring::new(c.colors().iter().map(|&x| perm[x - 1]).collect()).unwrap();
        prop_assert_eq!(is_conflict_free(&h, &c).unwrap(), is_conflict_free(&h, &permuted).unwrap());
    }

    #[test]
    fn greedy_conflict_free_within_delta_plus_one(h in hypergraph(30, 1..=6, 40)) {
        let c = greedy_cf_coloring(&h);
        prop_assert!(is_conflict_free(&h, &c).unwrap().is_ok());
        prop_assert!(c.palette() <= h.max_degree() + 1);
    }

    #[test]
    fn exact_at_most_greedy(h in hypergraph(9, 1..=4, 10)) {
        let greedy = greedy_cf_coloring(&h).palette();
        let exact = chi_cf_exact(&h, None).chi_cf().unwrap();
        prop_assert!(exact <= greedy);
    }
}
