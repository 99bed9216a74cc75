//! Immutable undirected simple graphs, the navigation trait shared with
//! implicit gadgets, degeneracy ordering and edge-list I/O.

mod degeneracy;
pub mod io;
pub(crate) mod view;

use std::collections::HashSet;

pub use degeneracy::{degeneracy_order, forward_wedge_count, DegeneracyInfo};
pub use view::{GraphView, Incident, Neighbors};

pub type NodeId = usize;
pub type EdgeId = usize;

/// Undirected simple graph in compressed adjacency form.
///
/// Edge ids are dense in `0..m` and follow the order in which edges were
/// first seen at construction. Every adjacency list is sorted by neighbor id
/// and carries the id of the connecting edge alongside each neighbor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
    incident: Vec<EdgeId>,
    endpoints: Vec<(NodeId, NodeId)>,
}

impl Graph {
    /// Builds a simple graph from an edge list. Self-loops and repeated
    /// pairs are dropped; the node count is one past the largest id seen.
    pub fn from_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::with_node_count(0, edges)
    }

    /// Like [`Graph::from_edges`] but guarantees at least `n` nodes, so that
    /// trailing isolated nodes survive.
    pub fn with_node_count<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut seen = HashSet::new();
        let mut endpoints = Vec::new();
        let mut n = n;
        for (a, b) in edges {
            if a == b {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            if seen.insert(pair) {
                n = n.max(pair.1 + 1);
                endpoints.push(pair);
            }
        }
        Self::from_simple_edges(n, endpoints)
    }

    /// Builds from pairs already known to be simple and normalised (`u < v`).
    pub(crate) fn from_simple_edges(n: usize, endpoints: Vec<(NodeId, NodeId)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &endpoints {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let total = *offsets.last().unwrap();
        let mut slots: Vec<(NodeId, EdgeId)> = vec![(0, 0); total];
        let mut cursor = offsets[..n].to_vec();
        for (e, &(u, v)) in endpoints.iter().enumerate() {
            slots[cursor[u]] = (v, e);
            cursor[u] += 1;
            slots[cursor[v]] = (u, e);
            cursor[v] += 1;
        }
        for u in 0..n {
            slots[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        let (neighbors, incident) = slots.into_iter().unzip();
        Self {
            offsets,
            neighbors,
            incident,
            endpoints,
        }
    }

    pub fn empty() -> Self {
        Self::from_simple_edges(0, Vec::new())
    }

    /// Complete graph on `k` nodes.
    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Self::from_simple_edges(k, edges)
    }

    /// Sorted neighbor slice of `u`.
    pub fn neighbor_slice(&self, u: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    /// Edge ids parallel to [`Graph::neighbor_slice`].
    pub fn incident_slice(&self, u: NodeId) -> &[EdgeId] {
        &self.incident[self.offsets[u]..self.offsets[u + 1]]
    }

    /// All edges as `(u, v)` with `u < v`, indexed by edge id.
    pub fn edge_list(&self) -> &[(NodeId, NodeId)] {
        &self.endpoints
    }

    /// Materializes any view into an owned graph, keeping its edge ids.
    pub fn from_view<G: GraphView>(view: &G) -> Self {
        let endpoints = (0..view.edge_count())
            .map(|e| {
                let (u, v) = view.endpoints(e);
                (u.min(v), u.max(v))
            })
            .collect();
        Self::from_simple_edges(view.node_count(), endpoints)
    }

    /// Subgraph formed by a set of edges of `self`, on the same node set.
    /// Edge ids of the result follow the order of `edges`.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Self {
        let endpoints = edges.iter().map(|&e| self.endpoints[e]).collect();
        Self::from_simple_edges(self.node_count(), endpoints)
    }
}

impl GraphView for Graph {
    fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    fn degree(&self, u: NodeId) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    fn ith_incident(&self, u: NodeId, i: usize) -> (NodeId, EdgeId) {
        let at = self.offsets[u] + i;
        (self.neighbors[at], self.incident[at])
    }

    fn edge_id(&self, u: NodeId, v: NodeId) -> Option<EdgeId> {
        if u >= self.node_count() || v >= self.node_count() {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbor_slice(a)
            .binary_search(&b)
            .ok()
            .map(|i| self.incident_slice(a)[i])
    }

    fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        self.endpoints[e]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_id(2, 0), Some(2));
        assert_eq!(g.endpoints(2), (0, 2));
    }

    #[test]
    fn duplicates_and_loops_dropped() {
        let g = Graph::from_edges([(0, 1), (0, 1), (1, 1), (1, 0)]);
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge_list(), &[(0, 1)]);
    }

    #[test]
    fn adjacency_sorted_with_edge_ids() {
        let g = Graph::from_edges([(3, 0), (0, 1), (2, 0)]);
        assert_eq!(g.neighbor_slice(0), &[1, 2, 3]);
        assert_eq!(g.incident_slice(0), &[1, 2, 0]);
        assert!(g.is_adjacent(0, 3));
        assert!(!g.is_adjacent(1, 3));
        assert_eq!(g.edge_id(7, 0), None);
    }

    #[test]
    fn isolated_nodes_kept() {
        let g = Graph::with_node_count(5, [(0, 1)]);
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.degree(4), 0);
        assert_eq!(g.neighbors(4).count(), 0);
    }

    #[test]
    fn complete_graph_counts() {
        let g = Graph::complete(5);
        assert_eq!(g.edge_count(), 10);
        assert!((0..5).all(|u| g.degree(u) == 4));
    }
}
