use proptest::prelude::*;
use trusslab::{
    bipartite_apex, blowup, compute_supports, gen_random, list_triangles, Graph, GraphView,
};
use trusslab_testkit::{brute_supports, brute_triangles};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, p, seed))
}

#[test]
fn bipartite_apex_has_sixteen() {
    let g = bipartite_apex(4);
    assert_eq!(brute_triangles(&g).len(), 16);
    assert_eq!(compute_supports(&g).triangle_count, 16);
}

#[test]
fn blown_up_triangle_lists_eight() {
    let k3 = Graph::complete(3);
    let view = blowup(&k3, 2).unwrap();
    assert_eq!(list_triangles(&view, |_| {}), 8);
}

#[test]
fn seeded_gnp_matches_brute_force() {
    let g = gen_random(10, 0.5, 2024);
    let mut listed = Vec::new();
    let count = list_triangles(&g, |t| listed.push(t.nodes));
    listed.sort();
    let expected = brute_triangles(&g);
    assert_eq!(count as usize, expected.len());
    assert_eq!(listed, expected);
}

proptest! {
    #[test]
    fn support_sum_is_three_triangles(g in small_graph()) {
        let s = compute_supports(&g);
        prop_assert_eq!(s.support.iter().sum::<usize>() as u64, 3 * s.triangle_count);
        prop_assert_eq!(&s.support, &brute_supports(&g));
        for (e, &(u, v)) in g.edge_list().iter().enumerate() {
            if s.support[e] > 0 {
                prop_assert!(s.support[e] < g.degree(u).min(g.degree(v)));
            }
        }
    }

    #[test]
    fn listing_matches_brute_force(g in small_graph()) {
        let supports = compute_supports(&g).support;
        let mut listed = Vec::new();
        let count = list_triangles(&g, |t| {
            listed.push(t);
        });
        prop_assert_eq!(count as usize, listed.len());
        for t in &listed {
            prop_assert!(t.nodes[0] < t.nodes[1] && t.nodes[1] < t.nodes[2]);
            prop_assert!(t.edges[0] < t.edges[1] && t.edges[1] < t.edges[2]);
            for e in t.edges {
                prop_assert!(supports[e] >= 1);
                let (u, v) = g.endpoints(e);
                prop_assert!(t.nodes.contains(&u) && t.nodes.contains(&v));
            }
        }
        let mut nodes: Vec<_> = listed.iter().map(|t| t.nodes).collect();
        nodes.sort();
        prop_assert_eq!(nodes, brute_triangles(&g));
    }
}
