//! Sampling the triangle hypergraph through forward wedges.
//!
//! Every triangle is the closure of exactly one forward wedge (a path whose
//! center precedes both ends in the degeneracy order). Keeping each forward
//! wedge with probability `p` and discarding open ones therefore keeps each
//! triangle independently with probability `p`. Kept wedges are located by
//! geometric skips over a fixed enumeration, so the cost is proportional to
//! the number of wedges kept rather than to `W`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, TrussError};
use crate::graph::{forward_wedge_count, DegeneracyInfo, EdgeId, GraphView, NodeId};
use crate::triangles::{list_triangles_with, Triangle};

pub const DEFAULT_ZETA: f64 = 110.0;

/// Parameters of the doubling sampler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub epsilon: f64,
    pub zeta: f64,
    pub seed: u64,
}

impl SamplerConfig {
    /// The sample must reach `STOP_FACTOR * zeta * m ln m / eps^2`
    /// hyperedges before the doubling loop stops.
    pub const STOP_FACTOR: f64 = 1.5;

    pub fn new(epsilon: f64, zeta: f64, seed: u64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(TrussError::InvalidEpsilon(epsilon));
        }
        if !(zeta > 0.0 && zeta.is_finite()) {
            return Err(TrussError::InvalidZeta(zeta));
        }
        Ok(Self {
            epsilon,
            zeta,
            seed,
        })
    }

    /// Epsilon below `1/n` carries no extra information since `t_G <= n`.
    pub fn effective_epsilon(&self, n: usize) -> f64 {
        if n == 0 {
            self.epsilon
        } else {
            self.epsilon.max(1.0 / n as f64)
        }
    }

    /// Hyperedge count at which the doubling loop stops.
    pub fn stop_threshold(&self, m: usize, n: usize) -> f64 {
        Self::STOP_FACTOR * self.zeta * m_log_m(m) / self.effective_epsilon(n).powi(2)
    }

    /// First probability tried: `zeta * m ln m / (W eps^2)`.
    pub fn initial_probability(&self, m: usize, n: usize, wedges: u64) -> f64 {
        self.zeta * m_log_m(m) / (wedges as f64 * self.effective_epsilon(n).powi(2))
    }
}

fn m_log_m(m: usize) -> f64 {
    let m = m as f64;
    if m <= 1.0 {
        0.0
    } else {
        m * m.ln()
    }
}

/// Sub-hypergraph of the triangle hypergraph: one vertex per graph edge and
/// one hyperedge (sorted edge-id triple) per kept triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergraphSample {
    pub vertex_count: usize,
    pub hyperedges: Vec<[EdgeId; 3]>,
    pub realized_p: f64,
    pub fell_back_to_exact: bool,
    pub rng_seed: u64,
    /// Sampling passes performed, including the one that was kept.
    pub passes: usize,
}

/// Number of Bernoulli(p) trials up to and including the first success,
/// drawn by inversion: `ceil(ln U / ln(1 - p))` with `U` uniform on (0, 1).
pub fn geometric_skip<R: Rng + ?Sized>(p: f64, rng: &mut R) -> u64 {
    debug_assert!(p > 0.0 && p <= 1.0);
    if p >= 1.0 {
        return 1;
    }
    let u: f64 = loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            break u;
        }
    };
    let k = (u.ln() / (-p).ln_1p()).ceil();
    if k < 1.0 {
        1
    } else {
        k as u64
    }
}

/// Forward wedges listed center by center in degeneracy order, and within a
/// center as pairs `(i, j)`, `i < j`, of positions in its forward-neighbor
/// list (itself sorted by order position).
struct WedgeIndex {
    centers: Vec<(NodeId, Vec<(NodeId, EdgeId)>)>,
    /// `start[c]` is the global index of the first wedge of `centers[c]`.
    start: Vec<u64>,
    total: u64,
}

impl WedgeIndex {
    fn new<G: GraphView>(g: &G, info: &DegeneracyInfo) -> Self {
        let mut centers = Vec::new();
        let mut start = Vec::new();
        let mut total = 0u64;
        for &c in &info.order {
            let fwd = info.forward_incident(g, c);
            let f = fwd.len() as u64;
            if f < 2 {
                continue;
            }
            start.push(total);
            total += f * (f - 1) / 2;
            centers.push((c, fwd));
        }
        Self {
            centers,
            start,
            total,
        }
    }

    /// Wedge with global index `idx`, starting the center search at `*hint`
    /// (indices are visited in increasing order within a pass).
    fn wedge(&self, idx: u64, hint: &mut usize) -> (NodeId, (NodeId, EdgeId), (NodeId, EdgeId)) {
        while *hint + 1 < self.centers.len() && self.start[*hint + 1] <= idx {
            *hint += 1;
        }
        let (center, fwd) = &self.centers[*hint];
        let local = idx - self.start[*hint];
        let f = fwd.len() as u64;
        // row i covers local indices [row_start(i), row_start(i + 1))
        let row_start = |i: u64| i * f - i * (i + 1) / 2;
        let (mut lo, mut hi) = (0u64, f - 1);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if row_start(mid) <= local {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let j = lo + 1 + (local - row_start(lo));
        (*center, fwd[lo as usize], fwd[j as usize])
    }
}

fn one_pass<G: GraphView, R: Rng + ?Sized>(
    g: &G,
    index: &WedgeIndex,
    p: f64,
    rng: &mut R,
) -> Vec<[EdgeId; 3]> {
    let mut out = Vec::new();
    let mut hint = 0;
    let mut idx = geometric_skip(p, rng) - 1;
    while idx < index.total {
        let (c, a, b) = index.wedge(idx, &mut hint);
        if let Some(ab) = g.edge_id(a.0, b.0) {
            out.push(Triangle::from_wedge(c, a, b, ab).edges);
        }
        idx = match idx.checked_add(geometric_skip(p, rng)) {
            Some(next) => next,
            None => break,
        };
    }
    out
}

/// One sampling pass at a fixed probability, without doubling.
pub fn sample_wedges_fixed_p<G: GraphView>(
    g: &G,
    info: &DegeneracyInfo,
    p: f64,
    seed: u64,
) -> Result<HypergraphSample> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(TrussError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let index = WedgeIndex::new(g, info);
    Ok(HypergraphSample {
        vertex_count: g.edge_count(),
        hyperedges: one_pass(g, &index, p, &mut rng),
        realized_p: p,
        fell_back_to_exact: false,
        rng_seed: seed,
        passes: 1,
    })
}

/// Samples triangles with a probability found by doubling until the sample
/// is large enough; falls back to the full triangle hypergraph once the
/// probability reaches 1.
pub fn sample_hypergraph<G: GraphView>(
    g: &G,
    info: &DegeneracyInfo,
    cfg: &SamplerConfig,
) -> HypergraphSample {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    sample_hypergraph_with_rng(g, info, cfg, &mut rng)
}

pub(crate) fn sample_hypergraph_with_rng<G: GraphView, R: Rng + ?Sized>(
    g: &G,
    info: &DegeneracyInfo,
    cfg: &SamplerConfig,
    rng: &mut R,
) -> HypergraphSample {
    let m = g.edge_count();
    let n = g.node_count();
    let wedges = forward_wedge_count(info);
    let exact = |passes| {
        let mut hyperedges = Vec::new();
        list_triangles_with(g, info, |t| hyperedges.push(t.edges));
        HypergraphSample {
            vertex_count: m,
            hyperedges,
            realized_p: 1.0,
            fell_back_to_exact: true,
            rng_seed: cfg.seed,
            passes,
        }
    };
    if wedges == 0 {
        return exact(0);
    }

    let threshold = cfg.stop_threshold(m, n);
    let mut p = cfg.initial_probability(m, n, wedges);
    let mut index = None;
    let mut passes = 0;
    loop {
        if p >= 1.0 || p.is_nan() {
            return exact(passes);
        }
        passes += 1;
        let index = index.get_or_insert_with(|| WedgeIndex::new(g, info));
        let hyperedges = one_pass(g, index, p, rng);
        if hyperedges.len() as f64 >= threshold {
            return HypergraphSample {
                vertex_count: m,
                hyperedges,
                realized_p: p,
                fell_back_to_exact: false,
                rng_seed: cfg.seed,
                passes,
            };
        }
        p *= 2.0;
    }
}
