use num_rational::Ratio;
use proptest::prelude::*;
use trusslab::{
    bipartite_apex, compute_supports, decomposition_from_order, degeneracy_order, gen_random,
    max_truss_subgraph, replay_order, truss_decomposition, trussness, Graph, GraphView,
};
use trusslab_testkit::{
    brute_edge_trussness, brute_forward_support, layered_example, max_triangle_density,
    naive_k_truss, random_graph,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, p, seed))
}

#[test]
fn named_graphs() {
    assert_eq!(trussness(&layered_example()), 2);
    assert_eq!(trussness(&bipartite_apex(4)), 1);
    for k in 3..=12 {
        assert_eq!(trussness(&Graph::complete(k)), k - 2);
    }
    let c5 = Graph::from_edges((0..5).map(|i| (i, (i + 1) % 5)));
    assert_eq!(trussness(&c5), 0);
    assert_eq!(trussness(&Graph::empty()), 0);
}

#[test]
fn layered_example_two_truss_is_the_clique() {
    let g = layered_example();
    let clique: Vec<_> = (0..6).collect();
    assert_eq!(max_truss_subgraph(&g, 2), clique);
    assert_eq!(naive_k_truss(&g, 2), clique);
}

#[test]
fn k5_minus_edge() {
    let mut edges = Graph::complete(5).edge_list().to_vec();
    edges.retain(|&e| e != (3, 4));
    let g = Graph::from_edges(edges);
    assert_eq!(trussness(&g), 2);
    assert_eq!(max_truss_subgraph(&g, 2), naive_k_truss(&g, 2));
    assert_eq!(max_truss_subgraph(&g, 2).len(), 9);
    assert!(max_truss_subgraph(&g, 3).is_empty());
}

#[test]
fn peeling_matches_subset_oracle() {
    for seed in 0..60 {
        let g = random_graph(seed, 4..=8, (0.3, 0.9));
        if g.edge_count() > 15 {
            continue;
        }
        let (dec, _) = truss_decomposition(&g);
        assert_eq!(dec.edge_trussness, brute_edge_trussness(&g), "seed {seed}");
    }
}

#[test]
fn density_sandwich_on_small_graphs() {
    for seed in 0..40 {
        let g = random_graph(seed, 3..=7, (0.3, 1.0));
        if g.edge_count() == 0 || g.edge_count() > 21 {
            continue;
        }
        let t = trussness(&g) as u64;
        let tri = compute_supports(&g).triangle_count;
        assert!(Ratio::new(tri, g.edge_count() as u64) <= Ratio::from_integer(t));
        assert!(
            Ratio::from_integer(t) <= max_triangle_density(&g) * 3,
            "seed {seed}"
        );
    }
}

#[test]
fn decomposition_from_exact_oracle() {
    for g in [layered_example(), bipartite_apex(3), Graph::complete(6)] {
        let via = decomposition_from_order(&g, |h| truss_decomposition(h).1.order).unwrap();
        assert_eq!(via, truss_decomposition(&g).0);
    }
}

#[test]
fn decomposition_rejects_inexact_oracle() {
    let g = Graph::complete(4);
    let err = decomposition_from_order(&g, |h| (0..h.edge_count()).rev().collect());
    assert!(err.is_err());
    let err = decomposition_from_order(&g, |_| vec![0, 0]);
    assert!(err.is_err());
}

proptest! {
    #[test]
    fn order_is_exact_and_monotone(g in small_graph()) {
        let (dec, order) = truss_decomposition(&g);
        let replay = replay_order(&g, &order.order).unwrap();
        prop_assert!(replay.is_exact());
        prop_assert_eq!(&replay.forward_support, &order.forward_support);
        prop_assert_eq!(&order.forward_support, &brute_forward_support(&g, &order.order));
        let along: Vec<_> = order.order.iter().map(|&e| dec.edge_trussness[e]).collect();
        prop_assert!(along.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(dec.trussness, along.last().copied().unwrap_or(0));
    }

    #[test]
    fn trussness_bounded_by_degeneracy(g in small_graph()) {
        let t = trussness(&g);
        let d = degeneracy_order(&g).degeneracy;
        prop_assert!(t <= d);
        if g.edge_count() > 0 {
            let tri = compute_supports(&g).triangle_count;
            prop_assert!(tri <= (t * g.edge_count()) as u64);
        }
    }

    #[test]
    fn k_truss_matches_naive(g in small_graph(), k in 0usize..5) {
        prop_assert_eq!(max_truss_subgraph(&g, k), naive_k_truss(&g, k));
        let (dec, _) = truss_decomposition(&g);
        let from_dec: Vec<_> = (0..g.edge_count()).filter(|&e| dec.edge_trussness[e] >= k).collect();
        prop_assert_eq!(max_truss_subgraph(&g, k), from_dec);
    }

    #[test]
    fn reduction_recovers_decomposition(g in (1usize..=8, 0.2f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| gen_random(n, p, s))) {
        let via = decomposition_from_order(&g, |h| truss_decomposition(h).1.order).unwrap();
        prop_assert_eq!(via, truss_decomposition(&g).0);
    }
}
