//! Seeded Erdős–Rényi graphs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::sampler::geometric_skip;

/// `G(n, prob)`: every one of the `C(n, 2)` pairs is an edge independently
/// with probability `prob`. Pairs are enumerated row by row (`u < v`) and
/// kept ones are reached by geometric skips. `prob` is clamped to [0, 1].
pub fn gen_random(n: usize, prob: f64, seed: u64) -> Graph {
    let prob = if prob.is_nan() {
        0.0
    } else {
        prob.clamp(0.0, 1.0)
    };
    let total = (n as u64) * (n as u64).saturating_sub(1) / 2;
    let mut edges = Vec::new();
    if prob > 0.0 && total > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = geometric_skip(prob, &mut rng) - 1;
        // pairs of row u start at u * n - u (u + 1) / 2
        let mut u = 0u64;
        let n64 = n as u64;
        let row_start = |u: u64| u * n64 - u * (u + 1) / 2;
        while idx < total {
            while row_start(u + 1) <= idx {
                u += 1;
            }
            let v = u + 1 + (idx - row_start(u));
            edges.push((u as usize, v as usize));
            idx = match idx.checked_add(geometric_skip(prob, &mut rng)) {
                Some(next) => next,
                None => break,
            };
        }
    }
    Graph::with_node_count(n, edges)
}
