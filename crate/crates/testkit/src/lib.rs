//! Exhaustive reference implementations used to check trusslab.
//!
//! Everything here is deliberately naive: definitions evaluated directly,
//! usually by enumerating subsets. Nothing calls into the peeling or
//! sampling code paths under test.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trusslab::{gen_random, DegeneracyInfo, Graph, GraphView};

/// A K4 on nodes 0..4 wrapped in a layer of triangles and an outer cycle
/// with a pendant: contains a 2-core, a 1-truss and a 4-clique, so its
/// trussness is 2 and its degeneracy 3.
pub fn layered_example() -> Graph {
    Graph::from_edges([
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (1, 4),
        (1, 5),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (7, 8),
    ])
}

/// Seeded `G(n, p)` with `n` and `p` drawn from the given ranges.
pub fn random_graph(seed: u64, nodes: std::ops::RangeInclusive<usize>, p: (f64, f64)) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_cafe);
    let n = rng.gen_range(nodes);
    let prob = rng.gen_range(p.0..=p.1);
    gen_random(n, prob, seed)
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edge_list() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// All triangles as ascending node triples, in lexicographic order.
pub fn brute_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let adj = adjacency(g);
    let n = g.node_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[a][c] && adj[b][c] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Support of every edge by scanning all third nodes.
pub fn brute_supports(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    g.edge_list()
        .iter()
        .map(|&(u, v)| {
            (0..g.node_count())
                .filter(|&w| adj[u][w] && adj[v][w])
                .count()
        })
        .collect()
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
pub fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.node_count();
    assert!(n <= 20, "exponential oracle");
    let adj = adjacency(g);
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let nodes: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
        let min = nodes
            .iter()
            .map(|&u| nodes.iter().filter(|&&w| adj[u][w]).count())
            .min()
            .unwrap();
        best = best.max(min);
    }
    best
}

/// Forward wedges `(center, {a, b})` with both ends after the center in the
/// given order, by direct enumeration of node triples.
pub fn brute_forward_wedges(g: &Graph, info: &DegeneracyInfo) -> u64 {
    let adj = adjacency(g);
    let n = g.node_count();
    let mut count = 0;
    for (c, row) in adj.iter().enumerate() {
        for a in 0..n {
            for b in a + 1..n {
                if row[a]
                    && row[b]
                    && info.position[a] > info.position[c]
                    && info.position[b] > info.position[c]
                {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Triangles of `g` as bitmasks over edge ids (`m <= 32`).
fn triangle_masks(g: &Graph) -> Vec<u32> {
    assert!(g.edge_count() <= 32);
    brute_triangles(g)
        .into_iter()
        .map(|[a, b, c]| {
            let e = |x, y| 1u32 << g.edge_id(x, y).unwrap();
            e(a, b) | e(a, c) | e(b, c)
        })
        .collect()
}

/// Per-edge trussness by maximising, over every edge subset containing the
/// edge, the minimum support inside the subset.
pub fn brute_edge_trussness(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    assert!(m <= 20, "exponential oracle");
    let tris = triangle_masks(g);
    let mut best = vec![0usize; m];
    let mut support = vec![0usize; m];
    for subset in 1u32..(1 << m) {
        support.iter_mut().for_each(|s| *s = 0);
        for &t in &tris {
            if t & subset == t {
                for (e, s) in support.iter_mut().enumerate() {
                    if t >> e & 1 == 1 {
                        *s += 1;
                    }
                }
            }
        }
        let min = (0..m)
            .filter(|&e| subset >> e & 1 == 1)
            .map(|e| support[e])
            .min()
            .unwrap();
        for (e, b) in best.iter_mut().enumerate() {
            if subset >> e & 1 == 1 && min > *b {
                *b = min;
            }
        }
    }
    best
}

/// `max over non-empty edge subsets S of T_S / m_S`.
pub fn max_triangle_density(g: &Graph) -> Ratio<u64> {
    let m = g.edge_count();
    assert!(m <= 24, "exponential oracle");
    let tris = triangle_masks(g);
    let mut best = Ratio::from_integer(0);
    for subset in 1u32..(1 << m) {
        let t = tris.iter().filter(|&&t| t & subset == t).count() as u64;
        let r = Ratio::new(t, subset.count_ones() as u64);
        if r > best {
            best = r;
        }
    }
    best
}

/// Maximal k-truss by repeatedly scanning for an edge with fewer than `k`
/// triangles among the surviving edges and deleting it.
pub fn naive_k_truss(g: &Graph, k: usize) -> Vec<usize> {
    let adj = adjacency(g);
    let edges = g.edge_list();
    let mut alive = vec![true; edges.len()];
    let alive_edge =
        |alive: &[bool], x: usize, y: usize| adj[x][y] && alive[g.edge_id(x, y).unwrap()];
    loop {
        let victim = (0..edges.len()).find(|&e| {
            if !alive[e] {
                return false;
            }
            let (u, v) = edges[e];
            let sup = (0..g.node_count())
                .filter(|&w| alive_edge(&alive, u, w) && alive_edge(&alive, v, w))
                .count();
            sup < k
        });
        match victim {
            Some(e) => alive[e] = false,
            None => break,
        }
    }
    (0..edges.len()).filter(|&e| alive[e]).collect()
}

/// Forward support of every position of `order`, counting triangles whose
/// other two edges come later, by direct triple enumeration.
pub fn brute_forward_support(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut position = vec![0; order.len()];
    for (i, &e) in order.iter().enumerate() {
        position[e] = i;
    }
    let mut fwd = vec![0; order.len()];
    for [a, b, c] in brute_triangles(g) {
        let ids = [
            g.edge_id(a, b).unwrap(),
            g.edge_id(a, c).unwrap(),
            g.edge_id(b, c).unwrap(),
        ];
        let first = ids.iter().copied().min_by_key(|&e| position[e]).unwrap();
        fwd[position[first]] += 1;
    }
    fwd
}
