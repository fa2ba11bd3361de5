mod common;

use common::*;
use eil_core::cameron_walker::{build_cw, recognize_cw, Recognition};
use eil_core::hilbert::{hilbert_data, HilbertEngine};
use eil_core::invariants::{induced_matching_number, matching_number};
use eil_core::resolution::{betti_table, betti_table_with, report_from_table, BettiOptions};
use eil_core::{Field, SimpleGraph};
use proptest::prelude::*;

fn with_perm(lo: usize, hi: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.vertex_count()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

fn is_star(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|c| g.degree(c) == n - 1)
}

fn is_star_triangle(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 3
        && n % 2 == 1
        && g.edge_count() == 3 * (n - 1) / 2
        && (0..n).any(|c| g.degree(c) == n - 1 && (0..n).filter(|&v| v != c).all(|v| g.degree(v) == 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_key_ignores_vertex_order((g, perm) in with_perm(1, 12)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_key(), h.canonical_key());
    }

    #[test]
    fn canonical_key_separates_different_f_vectors(a in arb_graph(1, 9), b in arb_graph(1, 9)) {
        if a.canonical_key() == b.canonical_key() {
            prop_assert_eq!(f_vector(&a), f_vector(&b));
            prop_assert_eq!(a.edge_count(), b.edge_count());
        }
    }

    #[test]
    fn hilbert_series_does_not_depend_on_pivot(g in arb_graph(1, 14)) {
        let low = HilbertEngine::with_pivot(Box::new(|_, mask| mask.trailing_zeros() as usize)).without_cache();
        let high = HilbertEngine::with_pivot(Box::new(|_, mask| 63 - mask.leading_zeros() as usize));
        let a = low.hilbert_data(&g).unwrap();
        let b = high.hilbert_data(&g).unwrap();
        prop_assert!(a.series.same_series(&b.series));
        prop_assert_eq!(&a.h_polynomial, &hilbert_data(&g).unwrap().h_polynomial);
    }

    #[test]
    fn disjoint_union_multiplies_series(a in arb_graph(1, 8), b in arb_graph(1, 8)) {
        let relabeled: Vec<String> = (1..=b.vertex_count()).map(|i| format!("y{i}")).collect();
        let b = SimpleGraph::from_index_edges(relabeled, &b.edges());
        let u = a.disjoint_union(&b).unwrap();
        let (ha, hb, hu) = (hilbert_data(&a).unwrap(), hilbert_data(&b).unwrap(), hilbert_data(&u).unwrap());
        prop_assert!(hu.series.same_series(&ha.series.product(&hb.series)));
        prop_assert_eq!(hu.dim, ha.dim + hb.dim);
    }

    #[test]
    fn a_invariant_is_not_positive(g in arb_graph(1, 14)) {
        prop_assert!(hilbert_data(&g).unwrap().a_invariant() <= 0);
    }

    #[test]
    fn regularity_between_matching_numbers(g in arb_graph(2, 10)) {
        let table = betti_table(&g, Field::Rationals).unwrap();
        let reg = table.regularity();
        prop_assert!(induced_matching_number(&g).value <= reg);
        prop_assert!(reg <= matching_number(&g).value);
        let rep = report_from_table(&g, &table);
        if let Ok(h) = rep {
            prop_assert!(h.depth <= h.dim);
            prop_assert_eq!(h.depth + h.projdim, g.vertex_count());
        }
    }

    #[test]
    fn fold_reduction_and_parallelism_do_not_change_betti(g in arb_graph(1, 11), field in prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(3))]) {
        let plain = BettiOptions { fold_reduction: false, parallel: false, ..BettiOptions::default() };
        let a = betti_table_with(&g, field, plain).unwrap();
        let b = betti_table_with(&g, field, BettiOptions::default()).unwrap();
        prop_assert_eq!(a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>());
    }

    #[test]
    fn prime_field_betti_numbers_dominate_rational_ones(g in arb_graph(1, 10)) {
        let q = betti_table(&g, Field::Rationals).unwrap();
        let f2 = betti_table(&g, Field::Prime(2)).unwrap();
        for (i, j, b) in q.entries() {
            prop_assert!(f2.get(i, j) >= b);
        }
    }

    #[test]
    fn recognition_matches_definition(g in arb_graph(2, 11)) {
        let cw = g.is_connected()
            && induced_matching_number(&g).value == matching_number(&g).value
            && !is_star(&g)
            && !is_star_triangle(&g);
        match recognize_cw(&g, false) {
            Recognition::CameronWalker { spec, vertex_map } => {
                prop_assert!(cw);
                let built = build_cw(&spec).unwrap();
                prop_assert_eq!(built.edge_count(), g.edge_count());
                for (a, b) in built.edges() {
                    prop_assert!(g.has_edge(vertex_map[a], vertex_map[b]));
                }
            }
            _ => prop_assert!(!cw, "missed a Cameron-Walker graph: {}", g.to_text()),
        }
    }
}
