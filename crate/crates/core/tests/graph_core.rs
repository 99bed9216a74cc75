use proptest::prelude::*;
use trusslab::graph::io::{parse_edge_list, write_edge_list};
use trusslab::{blowup, degeneracy_order, forward_wedge_count, gen_random, Graph, GraphView};
use trusslab_testkit::{brute_degeneracy, brute_forward_wedges, layered_example};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, p, seed))
}

#[test]
fn layered_example_degeneracy() {
    let g = layered_example();
    assert_eq!(degeneracy_order(&g).degeneracy, 3);
    assert_eq!(brute_degeneracy(&g), 3);
}

#[test]
fn star_and_clique_wedges() {
    let star = Graph::from_edges([(0, 1), (0, 2), (0, 3), (0, 4)]);
    let info = degeneracy_order(&star);
    assert_eq!(forward_wedge_count(&info), 0);
    assert_eq!(brute_forward_wedges(&star, &info), 0);

    let k4 = Graph::complete(4);
    let info = degeneracy_order(&k4);
    assert_eq!(forward_wedge_count(&info), 4);
    assert_eq!(brute_forward_wedges(&k4, &info), 4);
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in small_graph()) {
        let total: usize = (0..g.node_count()).map(|u| g.degree(u)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn degeneracy_replays_as_min_degree_peeling(g in small_graph()) {
        let info = degeneracy_order(&g);
        let n = g.node_count();
        let mut removed = vec![false; n];
        let residual = |removed: &[bool], u: usize| g.neighbors(u).filter(|&w| !removed[w]).count();
        for &u in &info.order {
            let d = residual(&removed, u);
            let min = (0..n).filter(|&w| !removed[w]).map(|w| residual(&removed, w)).min().unwrap();
            prop_assert_eq!(d, min);
            prop_assert_eq!(d, info.forward_degrees[u]);
            prop_assert!(d <= info.degeneracy);
            removed[u] = true;
        }
        prop_assert_eq!(info.degeneracy, info.forward_degrees.iter().copied().max().unwrap_or(0));
        prop_assert_eq!(info.degeneracy, brute_degeneracy(&g));
    }

    #[test]
    fn forward_wedges_match_enumeration(g in small_graph()) {
        let info = degeneracy_order(&g);
        prop_assert_eq!(forward_wedge_count(&info), brute_forward_wedges(&g, &info));
    }

    #[test]
    fn view_operations_agree(g in small_graph(), probes in proptest::collection::vec((any::<usize>(), any::<usize>()), 20)) {
        let n = g.node_count();
        for (a, b) in probes {
            let (u, v) = (a % n, b % n);
            let listed: Vec<_> = g.neighbors(u).collect();
            prop_assert_eq!(listed.len(), g.degree(u));
            prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(g.is_adjacent(u, v), listed.contains(&v));
            if g.degree(u) > 0 {
                let i = b % g.degree(u);
                prop_assert!(listed.contains(&g.ith_neighbor(u, i)));
                let (w, e) = g.ith_incident(u, i);
                prop_assert_eq!(g.edge_id(u, w), Some(e));
            }
        }
    }

    #[test]
    fn blowup_view_matches_materialized(g in small_graph(), q in 1usize..=3, probes in proptest::collection::vec((any::<usize>(), any::<usize>()), 20)) {
        let view = blowup(&g, q).unwrap();
        let full = view.materialize().unwrap();
        prop_assert_eq!(view.node_count(), full.node_count());
        prop_assert_eq!(view.edge_count(), full.edge_count());
        let n = view.node_count();
        for (a, b) in probes {
            let (u, v) = (a % n, b % n);
            prop_assert_eq!(view.degree(u), full.degree(u));
            prop_assert_eq!(view.is_adjacent(u, v), full.is_adjacent(u, v));
            prop_assert_eq!(view.edge_id(u, v), full.edge_id(u, v));
            let from_view: Vec<_> = view.incident(u).collect();
            let from_full: Vec<_> = full.incident(u).collect();
            prop_assert_eq!(&from_view, &from_full);
            if view.degree(u) > 0 {
                let i = b % view.degree(u);
                prop_assert_eq!(view.ith_neighbor(u, i), full.ith_neighbor(u, i));
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in small_graph()) {
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &g, None).unwrap();
        let back = parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap();
        prop_assert_eq!(back.graph.edge_list(), g.edge_list());
        prop_assert_eq!(back.graph.node_count(), g.node_count());
    }
}
