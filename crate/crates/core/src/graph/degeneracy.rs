use super::{EdgeId, GraphView, NodeId};
use crate::bucket::BucketQueue;

/// Min-degree peeling order of the nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyInfo {
    /// Nodes in removal order.
    pub order: Vec<NodeId>,
    /// `position[u]` is the index of `u` in `order`.
    pub position: Vec<usize>,
    pub degeneracy: usize,
    /// Residual degree of each node at its removal, i.e. the number of its
    /// neighbors that come later in the order.
    pub forward_degrees: Vec<usize>,
}

impl DegeneracyInfo {
    /// Neighbors of `u` that come after it in the order, sorted by position.
    pub fn forward_neighbors<G: GraphView>(&self, g: &G, u: NodeId) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = g
            .neighbors(u)
            .filter(|&w| self.position[w] > self.position[u])
            .collect();
        out.sort_unstable_by_key(|&w| self.position[w]);
        out
    }

    /// [`Self::forward_neighbors`] paired with the connecting edge ids.
    pub fn forward_incident<G: GraphView>(&self, g: &G, u: NodeId) -> Vec<(NodeId, EdgeId)> {
        let mut out: Vec<(NodeId, EdgeId)> = g
            .incident(u)
            .filter(|&(w, _)| self.position[w] > self.position[u])
            .collect();
        out.sort_unstable_by_key(|&(w, _)| self.position[w]);
        out
    }
}

/// Repeatedly removes a node of minimum residual degree, smallest id first.
pub fn degeneracy_order<G: GraphView>(g: &G) -> DegeneracyInfo {
    let n = g.node_count();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut queue = BucketQueue::new(&degrees);
    let mut order = Vec::with_capacity(n);
    let mut position = vec![0; n];
    let mut forward_degrees = vec![0; n];
    let mut degeneracy = 0;
    while let Some((u, residual)) = queue.pop_min() {
        position[u] = order.len();
        order.push(u);
        forward_degrees[u] = residual;
        degeneracy = degeneracy.max(residual);
        for w in g.neighbors(u) {
            if queue.contains(w) {
                queue.decrement(w);
            }
        }
    }
    DegeneracyInfo {
        order,
        position,
        degeneracy,
        forward_degrees,
    }
}

/// Number of forward wedges `sum_u d(u) (d(u) - 1) / 2` over forward degrees.
pub fn forward_wedge_count(info: &DegeneracyInfo) -> u64 {
    info.forward_degrees
        .iter()
        .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
        .sum()
}
