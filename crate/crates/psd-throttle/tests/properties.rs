//! Randomized invariants over small graphs.

use proptest::prelude::*;

use psd_throttle::graph::{decode_graph6, encode_graph6, Graph};
use psd_throttle::psd::{propagate, prop_time};
use psd_throttle::throttle::{th_sum, th_times};
use psd_throttle::VertexSet;

/// Arbitrary graph on 1..=7 vertices, edges picked by mask.
fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u32..(1u32 << pairs)).prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in small_graph()) {
        let coded = encode_graph6(&g);
        let back = decode_graph6(&coded).unwrap();
        prop_assert_eq!(g.n(), back.n());
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn complement_involution(g in small_graph()) {
        let back = g.complement().complement();
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn full_set_forces_instantly(g in small_graph()) {
        prop_assert_eq!(prop_time(&g, g.full_set()), Some(0));
    }

    #[test]
    fn derived_set_contains_initial(g in small_graph(), mask in 0u64..128) {
        let s = VertexSet(mask & g.full_set().0);
        let trace = propagate(&g, s);
        prop_assert_eq!(trace.derived_set().0 & s.0, s.0);
    }

    #[test]
    fn superset_forces_no_slower(g in small_graph(), mask in 1u64..128, extra in 0usize..7) {
        let s = VertexSet(mask & g.full_set().0);
        prop_assume!(!s.is_empty());
        let mut t = s;
        if extra < g.n() {
            t.insert(extra);
        }
        match (prop_time(&g, s), prop_time(&g, t)) {
            (Some(a), Some(b)) => prop_assert!(b <= a),
            (None, _) => {}
            (Some(_), None) => prop_assert!(false, "superset stalled where subset forced"),
        }
    }

    #[test]
    fn product_throttling_dominates_sum(g in small_graph()) {
        let tx = th_times(&g, 1).unwrap().value;
        let ts = th_sum(&g, 1).unwrap().value;
        prop_assert!(tx >= ts);
        prop_assert!(tx <= g.n());
    }

    #[test]
    fn relabeling_preserves_throttling(g in small_graph(), rot in 0usize..7) {
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).collect();
        let h = g.relabel(&perm);
        prop_assert_eq!(th_times(&g, 1).unwrap().value, th_times(&h, 1).unwrap().value);
    }
}
