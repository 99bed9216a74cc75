//! Graph constructions: blow-ups, spurious cliques, ladders, unions and the
//! bipartite-plus-apex graph.

use crate::error::{Result, TrussError};
use crate::graph::{EdgeId, Graph, GraphView, NodeId};
use crate::truss::truss_decomposition;

/// Largest edge count [`BlowupView::materialize`] will build.
pub const MATERIALIZE_LIMIT: usize = 50_000_000;

/// Implicit balanced blow-up of a base graph.
///
/// Node `u` of the base becomes copies `u * q .. u * q + q`; copies of
/// adjacent base nodes are all mutually adjacent. Every navigation query is
/// answered from the base graph in the same time as on the base.
///
/// The mirror edge joining copy `i` of `x` with copy `j` of `y`, where
/// `{x, y}` is base edge `b` with `x < y`, has id `b * q^2 + i * q + j`.
#[derive(Debug, Clone, Copy)]
pub struct BlowupView<'a> {
    base: &'a Graph,
    q: usize,
}

pub fn blowup(base: &Graph, q: usize) -> Result<BlowupView<'_>> {
    if q == 0 {
        return Err(TrussError::ZeroMultiplicity);
    }
    Ok(BlowupView { base, q })
}

impl<'a> BlowupView<'a> {
    pub fn base(&self) -> &'a Graph {
        self.base
    }

    pub fn multiplicity(&self) -> usize {
        self.q
    }

    /// Base edge a mirror edge was copied from.
    pub fn base_edge(&self, e: EdgeId) -> EdgeId {
        e / (self.q * self.q)
    }

    fn mirror_id(&self, b: EdgeId, u: NodeId, cu: usize, cv: usize) -> EdgeId {
        let (x, _) = self.base.endpoints(b);
        let (cx, cy) = if u == x { (cu, cv) } else { (cv, cu) };
        b * self.q * self.q + cx * self.q + cy
    }

    pub fn materialize(&self) -> Result<Graph> {
        self.materialize_with_limit(MATERIALIZE_LIMIT)
    }

    pub fn materialize_with_limit(&self, limit: usize) -> Result<Graph> {
        let edges = self.base.edge_count() as u128 * (self.q as u128).pow(2);
        if edges > limit as u128 {
            return Err(TrussError::TooLarge { edges, limit });
        }
        Ok(Graph::from_view(self))
    }
}

impl GraphView for BlowupView<'_> {
    fn node_count(&self) -> usize {
        self.base.node_count() * self.q
    }

    fn edge_count(&self) -> usize {
        self.base.edge_count() * self.q * self.q
    }

    fn degree(&self, a: NodeId) -> usize {
        self.base.degree(a / self.q) * self.q
    }

    fn ith_incident(&self, a: NodeId, k: usize) -> (NodeId, EdgeId) {
        let (u, cu) = (a / self.q, a % self.q);
        let (v, b) = self.base.ith_incident(u, k / self.q);
        let cv = k % self.q;
        (v * self.q + cv, self.mirror_id(b, u, cu, cv))
    }

    fn edge_id(&self, a: NodeId, c: NodeId) -> Option<EdgeId> {
        let (u, cu) = (a / self.q, a % self.q);
        let (v, cv) = (c / self.q, c % self.q);
        let b = self.base.edge_id(u, v)?;
        Some(self.mirror_id(b, u, cu, cv))
    }

    fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        let q2 = self.q * self.q;
        let (x, y) = self.base.endpoints(e / q2);
        let r = e % q2;
        (x * self.q + r / self.q, y * self.q + r % self.q)
    }
}

/// A graph extended with disjoint spurious `(x + 2)`-cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedGraph {
    pub graph: Graph,
    pub x: usize,
    pub spurious_clique_count: usize,
    /// `spurious[e]` marks clique edges; original edges keep ids `0..m`.
    pub spurious: Vec<bool>,
}

impl AugmentedGraph {
    pub fn original_edge_count(&self) -> usize {
        self.spurious.iter().filter(|&&s| !s).count()
    }
}

/// `ceil(2 * sqrt(m))`, the largest clique parameter accepted for `m` edges.
pub fn spurious_cap(m: usize) -> usize {
    let target = 4 * m as u128;
    let mut c = (2.0 * (m as f64).sqrt()) as u128;
    while c * c < target {
        c += 1;
    }
    while c > 0 && (c - 1) * (c - 1) >= target {
        c -= 1;
    }
    c as usize
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Appends `ceil(m / C(x + 2, 2))` vertex-disjoint `(x + 2)`-cliques, each
/// of which has trussness exactly `x`.
pub fn add_spurious_cliques(g: &Graph, x: usize) -> Result<AugmentedGraph> {
    let m = g.edge_count();
    let cap = spurious_cap(m);
    if x > cap {
        return Err(TrussError::CliqueTooLarge { x, cap, m });
    }
    let size = x + 2;
    let per_clique = choose2(size);
    let count = m.div_ceil(per_clique);
    let n = g.node_count();
    let mut edges = g.edge_list().to_vec();
    edges.reserve(count * per_clique);
    for c in 0..count {
        let first = n + c * size;
        for a in 0..size {
            for b in a + 1..size {
                edges.push((first + a, first + b));
            }
        }
    }
    let mut spurious = vec![false; m];
    spurious.resize(edges.len(), true);
    Ok(AugmentedGraph {
        graph: Graph::from_simple_edges(n + count * size, edges),
        x,
        spurious_clique_count: count,
        spurious,
    })
}

/// `a` followed by a copy of `b` with node ids shifted past `a`'s. Edge ids
/// of `b` are shifted by `a.edge_count()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.node_count();
    let edges = a
        .edge_list()
        .iter()
        .copied()
        .chain(b.edge_list().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_simple_edges(shift + b.node_count(), edges)
}

/// Clique `K_x` (nodes `0..x`) plus `x` pendants, the `i`-th of which
/// (node `x + i - 1`) is joined to clique nodes `0..i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderGadget {
    pub graph: Graph,
    pub x: usize,
    /// Trussness of each edge known from the construction: `i - 1` for the
    /// edges of pendant `i`, `x - 1` for clique edges.
    pub expected_trussness: Vec<usize>,
    /// Distinct trussness values found by peeling the gadget, ascending.
    pub achieved: Vec<usize>,
}

pub fn ladder_gadget(x: usize) -> LadderGadget {
    let mut edges = Graph::complete(x).edge_list().to_vec();
    let mut expected_trussness = vec![x.saturating_sub(1); edges.len()];
    for i in 1..=x {
        let pendant = x + i - 1;
        for c in 0..i {
            edges.push((c, pendant));
            expected_trussness.push(i - 1);
        }
    }
    let graph = Graph::from_simple_edges(2 * x, edges);
    let mut achieved = truss_decomposition(&graph).0.edge_trussness;
    achieved.sort_unstable();
    achieved.dedup();
    LadderGadget {
        graph,
        x,
        expected_trussness,
        achieved,
    }
}

/// Complete bipartite `K_{side,side}` plus an apex joined to every node.
/// Left side is `0..side`, right side `side..2 side`, apex `2 side`.
pub fn bipartite_apex(side: usize) -> Graph {
    let apex = 2 * side;
    let mut edges = Vec::with_capacity(side * side + 2 * side);
    for a in 0..side {
        for b in side..2 * side {
            edges.push((a, b));
        }
    }
    for u in 0..apex {
        edges.push((u, apex));
    }
    Graph::from_simple_edges(apex + 1, edges)
}
