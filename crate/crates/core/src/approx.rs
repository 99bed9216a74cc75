//! Approximate truss orders and trussness estimators.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bucket::BucketQueue;
use crate::error::{Result, TrussError};
use crate::gadgets::{add_spurious_cliques, blowup, disjoint_union, spurious_cap};
use crate::graph::{degeneracy_order, EdgeId, Graph, GraphView};
use crate::sampler::{
    sample_hypergraph, sample_hypergraph_with_rng, HypergraphSample, SamplerConfig,
};
use crate::triangles::compute_supports_masked;

/// Edge order read off a min-degree peeling of a sampled triangle
/// hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxTrussOrder {
    /// Every edge id exactly once.
    pub order: Vec<EdgeId>,
    /// Degree of `order[i]` in the sample when it was peeled.
    pub sampled_forward_degree: Vec<usize>,
    /// The accuracy the sample was drawn for, when known.
    pub certified_epsilon: Option<f64>,
    pub sample: HypergraphSample,
}

impl ApproxTrussOrder {
    /// Degeneracy of the sampled hypergraph.
    pub fn max_sampled_forward_degree(&self) -> usize {
        self.sampled_forward_degree
            .iter()
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Peels the sampled hypergraph one minimum-degree vertex at a time (lowest
/// edge id on ties). Removing a vertex deletes its hyperedges.
pub fn hypergraph_degeneracy_order(sample: HypergraphSample) -> ApproxTrussOrder {
    let n = sample.vertex_count;
    let mut offsets = vec![0usize; n + 1];
    for h in &sample.hyperedges {
        for &v in h {
            offsets[v + 1] += 1;
        }
    }
    let degree: Vec<usize> = offsets[1..].to_vec();
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    // u32 hyperedge ids halve the footprint of the largest array
    let mut incidence = vec![0u32; offsets[n]];
    let mut cursor = offsets[..n].to_vec();
    for (i, h) in sample.hyperedges.iter().enumerate() {
        let i = u32::try_from(i).expect("fewer than 2^32 hyperedges");
        for &v in h {
            incidence[cursor[v]] = i;
            cursor[v] += 1;
        }
    }

    let mut alive = vec![true; sample.hyperedges.len()];
    let mut queue = BucketQueue::new(&degree);
    let mut order = Vec::with_capacity(n);
    let mut sampled_forward_degree = Vec::with_capacity(n);
    while let Some((v, d)) = queue.pop_min() {
        order.push(v);
        sampled_forward_degree.push(d);
        for &h in &incidence[offsets[v]..offsets[v + 1]] {
            if !std::mem::replace(&mut alive[h as usize], false) {
                continue;
            }
            for &w in &sample.hyperedges[h as usize] {
                if w != v {
                    queue.decrement(w);
                }
            }
        }
    }
    ApproxTrussOrder {
        order,
        sampled_forward_degree,
        certified_epsilon: None,
        sample,
    }
}

/// Degeneracy order, hypergraph sample, hypergraph peeling. When the sampler
/// falls back to the full hypergraph the result is an exact truss order.
pub fn approx_truss_order<G: GraphView>(g: &G, cfg: &SamplerConfig) -> ApproxTrussOrder {
    let info = degeneracy_order(g);
    let sample = sample_hypergraph(g, &info, cfg);
    let mut order = hypergraph_degeneracy_order(sample);
    order.certified_epsilon = Some(cfg.epsilon);
    order
}

fn approx_truss_order_with_rng<G: GraphView>(
    g: &G,
    cfg: &SamplerConfig,
    rng: &mut ChaCha8Rng,
) -> ApproxTrussOrder {
    let info = degeneracy_order(g);
    let sample = sample_hypergraph_with_rng(g, &info, cfg, rng);
    let mut order = hypergraph_degeneracy_order(sample);
    order.certified_epsilon = Some(cfg.epsilon);
    order
}

/// True iff the first spurious edge comes before the last original edge.
pub fn marker_test(order: &[EdgeId], spurious: &[bool]) -> Result<bool> {
    if spurious.len() != order.len() {
        return Err(TrussError::LabelMismatch {
            labels: spurious.len(),
            order: order.len(),
        });
    }
    let first_spurious = order.iter().position(|&e| spurious[e]);
    let last_original = order.iter().rposition(|&e| !spurious[e]);
    Ok(matches!((first_spurious, last_original), (Some(s), Some(g)) if s < g))
}

/// How the clique parameter grows after a positive marker test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrowthRule {
    /// `x <- ceil((1 + eps') x)`, the rule the error analysis relies on.
    #[default]
    Proof,
    /// `x <- ceil((1 + eps) x)`.
    Pseudocode,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateConfig {
    pub zeta: f64,
    pub seed: u64,
    pub growth: GrowthRule,
}

impl Default for EstimateConfig {
    fn default() -> Self {
        Self {
            zeta: crate::sampler::DEFAULT_ZETA,
            seed: 0,
            growth: GrowthRule::Proof,
        }
    }
}

/// One iteration of the marker loop.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrace {
    pub x: usize,
    pub marker: bool,
    pub fell_back: bool,
    pub realized_p: f64,
    pub hyperedges: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateResult {
    /// Trussness estimate for the input graph.
    pub estimate: Ratio<u64>,
    /// Set when the returned value is certified exact.
    pub exact_flag: bool,
    /// Largest clique parameter with a positive marker test, on the
    /// 6-fold blow-up scale.
    pub amplified_estimate: usize,
    pub iterations: usize,
    pub trace: Vec<RoundTrace>,
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn big(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn to_usize(x: &BigRational) -> usize {
    x.to_integer().to_usize().expect("fits in usize")
}

/// Estimates the trussness of `g_in` within a factor `1 +- epsilon` with
/// high probability.
///
/// The input is amplified to `G = g_in^{x6} + K3`; for growing `x` an
/// approximate truss order of `G` plus spurious `(x + 2)`-cliques is tested
/// for whether a spurious edge precedes the last edge of `G`. The largest
/// positive `x` estimates `t_G`, and the result is rounded to the unique
/// multiple of 6 in the admissible window when there is one.
pub fn estimate_trussness(
    g_in: &Graph,
    epsilon: f64,
    cfg: &EstimateConfig,
) -> Result<EstimateResult> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(TrussError::InvalidEpsilon(epsilon));
    }
    let g = disjoint_union(&blowup(g_in, 6)?.materialize()?, &Graph::complete(3));
    let eps_prime = epsilon / 6.0;
    let sampler = SamplerConfig::new(eps_prime, cfg.zeta, cfg.seed)?;

    let eps_r = rational(epsilon);
    let eps_prime_r = &eps_r / big(6);
    let growth = match cfg.growth {
        GrowthRule::Proof => BigRational::one() + &eps_prime_r,
        GrowthRule::Pseudocode => BigRational::one() + &eps_r,
    };
    let cap = (2 * degeneracy_order(&g).degeneracy + 2).min(spurious_cap(g.edge_count()));

    let mut x = 1usize;
    let mut amplified = 1usize;
    let mut trace = Vec::new();
    for round in 0u64.. {
        let aug = add_spurious_cliques(&g, x)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(round + 1);
        let order = approx_truss_order_with_rng(&aug.graph, &sampler, &mut rng);
        let marker = marker_test(&order.order, &aug.spurious)?;
        trace.push(RoundTrace {
            x,
            marker,
            fell_back: order.sample.fell_back_to_exact,
            realized_p: order.sample.realized_p,
            hyperedges: order.sample.hyperedges.len(),
        });
        if !marker {
            break;
        }
        amplified = x;
        let next = to_usize(&(&growth * big(x)).ceil());
        if next > cap {
            break;
        }
        x = next;
    }

    let iterations = trace.len();
    let finish = |estimate, exact_flag| EstimateResult {
        estimate,
        exact_flag,
        amplified_estimate: amplified,
        iterations,
        trace: trace.clone(),
    };
    if amplified < 2 {
        return Ok(finish(Ratio::zero(), true));
    }
    let low = big(amplified) / (BigRational::one() + &eps_prime_r);
    let high = big(amplified + 1) * (BigRational::one() + big(3) * &eps_prime_r);
    let first = to_usize(&(low / big(6)).ceil());
    let last = to_usize(&(high / big(6)).floor());
    if first == last {
        return Ok(finish(Ratio::from_integer(first as u64), true));
    }
    Ok(finish(Ratio::new(amplified as u64, 6), false))
}

/// Edges and triangles of one thresholding round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdRound {
    pub edges: usize,
    pub triangles: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdEstimate {
    /// `max_i T_i / m_i`; satisfies `estimate <= t_G <= (3 + eps) estimate`.
    pub estimate: Ratio<u64>,
    pub rounds: Vec<ThresholdRound>,
}

/// Iterative support thresholding: with `c = 3 + epsilon`, repeatedly delete
/// every edge whose support is at most `c T_i / m_i` until no edge is left,
/// and return the largest density `T_i / m_i` seen.
pub fn threshold_estimate<G: GraphView>(g: &G, epsilon: f64) -> Result<ThresholdEstimate> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(TrussError::InvalidEpsilon(epsilon));
    }
    let c = big(3) + rational(epsilon);
    let mut alive = vec![true; g.edge_count()];
    let mut remaining = g.edge_count();
    let mut estimate = Ratio::zero();
    let mut rounds = Vec::new();
    while remaining > 0 {
        let table = compute_supports_masked(g, &alive);
        let triangles = table.triangle_count;
        rounds.push(ThresholdRound {
            edges: remaining,
            triangles,
        });
        let density = Ratio::new(triangles, remaining as u64);
        if density > estimate {
            estimate = density;
        }
        let cutoff = to_usize(
            &(&c * BigRational::new(BigInt::from(triangles), BigInt::from(remaining))).floor(),
        );
        for (e, flag) in alive.iter_mut().enumerate() {
            if *flag && table.support[e] <= cutoff {
                *flag = false;
                remaining -= 1;
            }
        }
    }
    Ok(ThresholdEstimate { estimate, rounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::bipartite_apex;
    use crate::graph::Graph;
    use crate::truss::truss_decomposition;

    fn full_sample(g: &Graph) -> HypergraphSample {
        let info = degeneracy_order(g);
        let cfg = SamplerConfig::new(0.5, 1e12, 0).unwrap();
        sample_hypergraph(g, &info, &cfg)
    }

    #[test]
    fn k4_hypergraph_degeneracy_is_trussness() {
        let g = Graph::complete(4);
        let order = hypergraph_degeneracy_order(full_sample(&g));
        assert_eq!(order.max_sampled_forward_degree(), 2);
    }

    #[test]
    fn empty_sample_keeps_id_order() {
        let sample = HypergraphSample {
            vertex_count: 5,
            hyperedges: Vec::new(),
            realized_p: 0.5,
            fell_back_to_exact: false,
            rng_seed: 0,
            passes: 1,
        };
        let order = hypergraph_degeneracy_order(sample);
        assert_eq!(order.order, vec![0, 1, 2, 3, 4]);
        assert!(order.sampled_forward_degree.iter().all(|&d| d == 0));
    }

    #[test]
    fn fallback_order_is_the_peeling_order() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (3, 4), (4, 2)]);
        let cfg = SamplerConfig::new(0.5, 1e12, 4).unwrap();
        let order = approx_truss_order(&g, &cfg);
        assert!(order.sample.fell_back_to_exact);
        assert_eq!(order.order, truss_decomposition(&g).1.order);
    }

    #[test]
    fn marker_cases() {
        assert!(!marker_test(&[0, 1, 2, 3], &[false, false, true, true]).unwrap());
        assert!(marker_test(&[2, 0, 1, 3], &[false, false, true, true]).unwrap());
        assert!(!marker_test(&[0, 1], &[false, false]).unwrap());
        assert!(matches!(
            marker_test(&[0, 1], &[false]),
            Err(TrussError::LabelMismatch { .. })
        ));
    }

    #[test]
    fn marker_fires_below_trussness() {
        let g = Graph::complete(6);
        let aug = add_spurious_cliques(&g, 1).unwrap();
        let order = truss_decomposition(&aug.graph).1.order;
        assert!(marker_test(&order, &aug.spurious).unwrap());
    }

    #[test]
    fn estimate_rejects_bad_epsilon() {
        let g = Graph::complete(3);
        for eps in [0.0, 1.0, -0.1, f64::NAN] {
            assert!(estimate_trussness(&g, eps, &EstimateConfig::default()).is_err());
        }
    }

    #[test]
    fn triangle_free_estimate_is_exact_zero() {
        let c5 = Graph::from_edges((0..5).map(|i| (i, (i + 1) % 5)));
        let r = estimate_trussness(&c5, 0.5, &EstimateConfig::default()).unwrap();
        assert_eq!(r.estimate, Ratio::zero());
        assert!(r.exact_flag);
    }

    #[test]
    fn k3_estimate() {
        let r = estimate_trussness(&Graph::complete(3), 0.3, &EstimateConfig::default()).unwrap();
        assert_eq!(r.estimate, Ratio::from_integer(1));
        assert!(r.exact_flag);
        assert_eq!(r.amplified_estimate, 5);
        assert!(r.trace.iter().all(|t| t.fell_back));
    }

    #[test]
    fn threshold_triangle_free() {
        let c5 = Graph::from_edges((0..5).map(|i| (i, (i + 1) % 5)));
        let t = threshold_estimate(&c5, 0.1).unwrap();
        assert_eq!(t.estimate, Ratio::zero());
        assert_eq!(
            t.rounds,
            vec![ThresholdRound {
                edges: 5,
                triangles: 0
            }]
        );
        assert!(threshold_estimate(&c5, 0.0).is_err());
    }

    #[test]
    fn threshold_k5() {
        let t = threshold_estimate(&Graph::complete(5), 0.1).unwrap();
        assert_eq!(
            t.rounds[0],
            ThresholdRound {
                edges: 10,
                triangles: 10
            }
        );
        assert_eq!(t.estimate, Ratio::from_integer(1));
    }

    #[test]
    fn threshold_bipartite_apex() {
        let t = threshold_estimate(&bipartite_apex(4), 0.1).unwrap();
        assert_eq!(
            t.rounds[0],
            ThresholdRound {
                edges: 24,
                triangles: 16
            }
        );
        assert!(t.estimate >= Ratio::new(16, 24));
        assert!(t.estimate <= Ratio::from_integer(1));
    }
}
