//! Triangle counting, listing and per-edge support.

use crate::graph::view::for_each_common;
use crate::graph::{degeneracy_order, DegeneracyInfo, EdgeId, GraphView, NodeId};

/// Per-edge support (number of triangles through the edge) and the total
/// triangle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportTable {
    pub support: Vec<usize>,
    pub triangle_count: u64,
}

/// A triangle in canonical form: node ids ascending, edge ids ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub nodes: [NodeId; 3],
    pub edges: [EdgeId; 3],
}

impl Triangle {
    /// Canonical triangle on three pairwise adjacent nodes, or `None` if one
    /// of the pairs is not an edge.
    pub fn from_nodes<G: GraphView>(g: &G, a: NodeId, b: NodeId, c: NodeId) -> Option<Self> {
        let mut nodes = [a, b, c];
        nodes.sort_unstable();
        let [x, y, z] = nodes;
        let mut edges = [g.edge_id(x, y)?, g.edge_id(x, z)?, g.edge_id(y, z)?];
        edges.sort_unstable();
        Some(Self { nodes, edges })
    }

    /// Canonical triangle closing the wedge `a - center - b` whose three
    /// edge ids are already known.
    pub(crate) fn from_wedge(
        center: NodeId,
        a: (NodeId, EdgeId),
        b: (NodeId, EdgeId),
        ab: EdgeId,
    ) -> Self {
        let mut nodes = [center, a.0, b.0];
        nodes.sort_unstable();
        let mut edges = [a.1, b.1, ab];
        edges.sort_unstable();
        Self { nodes, edges }
    }
}

/// Exact support of every edge by neighborhood intersection from the
/// lower-degree endpoint.
pub fn compute_supports<G: GraphView>(g: &G) -> SupportTable {
    let mut support = vec![0usize; g.edge_count()];
    for (e, slot) in support.iter_mut().enumerate() {
        let (u, v) = g.endpoints(e);
        for_each_common(g, u, v, |_, _, _| *slot += 1);
    }
    let triangle_count = support.iter().map(|&s| s as u64).sum::<u64>() / 3;
    SupportTable {
        support,
        triangle_count,
    }
}

/// Supports restricted to the edges flagged in `alive`; dead edges get 0.
pub(crate) fn compute_supports_masked<G: GraphView>(g: &G, alive: &[bool]) -> SupportTable {
    let mut support = vec![0usize; g.edge_count()];
    for (e, slot) in support.iter_mut().enumerate() {
        if !alive[e] {
            continue;
        }
        let (u, v) = g.endpoints(e);
        for_each_common(g, u, v, |_, e_uw, e_vw| {
            if alive[e_uw] && alive[e_vw] {
                *slot += 1;
            }
        });
    }
    let triangle_count = support.iter().map(|&s| s as u64).sum::<u64>() / 3;
    SupportTable {
        support,
        triangle_count,
    }
}

/// Emits every triangle exactly once and returns how many there were.
///
/// Triangles are found as closed forward wedges in degeneracy order, i.e.
/// at their earliest node.
pub fn list_triangles<G, F>(g: &G, sink: F) -> u64
where
    G: GraphView,
    F: FnMut(Triangle),
{
    let info = degeneracy_order(g);
    list_triangles_with(g, &info, sink)
}

/// [`list_triangles`] with a precomputed degeneracy order.
pub fn list_triangles_with<G, F>(g: &G, info: &DegeneracyInfo, mut sink: F) -> u64
where
    G: GraphView,
    F: FnMut(Triangle),
{
    let mut count = 0;
    for &c in &info.order {
        let fwd = info.forward_incident(g, c);
        for (i, &a) in fwd.iter().enumerate() {
            for &b in &fwd[i + 1..] {
                if let Some(ab) = g.edge_id(a.0, b.0) {
                    sink(Triangle::from_wedge(c, a, b, ab));
                    count += 1;
                }
            }
        }
    }
    count
}

/// The triangle closing the wedge `a - center - b`, if `{a, b}` is an edge.
pub fn triangle_of_wedge<G: GraphView>(
    g: &G,
    center: NodeId,
    a: NodeId,
    b: NodeId,
) -> Option<Triangle> {
    if a == b || !g.is_adjacent(a, b) {
        return None;
    }
    Triangle::from_nodes(g, center, a, b)
}
