use super::{EdgeId, NodeId};

/// Navigation over a graph-like object without requiring it to be stored.
///
/// Implementors must keep the operations mutually consistent: `degree(u)`
/// equals the length of the neighbor sequence, neighbors are listed in
/// ascending node order, and `edge_id(u, v)` is `Some` exactly when `v` is a
/// neighbor of `u`. Edge ids are dense in `0..edge_count()`.
pub trait GraphView {
    fn node_count(&self) -> usize;

    fn edge_count(&self) -> usize;

    fn degree(&self, u: NodeId) -> usize;

    /// The `i`-th neighbor of `u` (ascending order) and the connecting edge.
    fn ith_incident(&self, u: NodeId, i: usize) -> (NodeId, EdgeId);

    fn edge_id(&self, u: NodeId, v: NodeId) -> Option<EdgeId>;

    fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId);

    fn ith_neighbor(&self, u: NodeId, i: usize) -> NodeId {
        self.ith_incident(u, i).0
    }

    fn is_adjacent(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_id(u, v).is_some()
    }

    fn neighbors(&self, u: NodeId) -> Neighbors<'_, Self>
    where
        Self: Sized,
    {
        Neighbors {
            inner: self.incident(u),
        }
    }

    fn incident(&self, u: NodeId) -> Incident<'_, Self>
    where
        Self: Sized,
    {
        Incident {
            view: self,
            node: u,
            next: 0,
            end: self.degree(u),
        }
    }

    fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_
    where
        Self: Sized,
    {
        (0..self.edge_count()).map(move |e| self.endpoints(e))
    }
}

/// Iterator over `(neighbor, edge id)` pairs of one node.
#[derive(Debug)]
pub struct Incident<'a, G> {
    view: &'a G,
    node: NodeId,
    next: usize,
    end: usize,
}

impl<G: GraphView> Iterator for Incident<'_, G> {
    type Item = (NodeId, EdgeId);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next == self.end {
            return None;
        }
        let item = self.view.ith_incident(self.node, self.next);
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.end - self.next;
        (rest, Some(rest))
    }
}

impl<G: GraphView> ExactSizeIterator for Incident<'_, G> {}

#[derive(Debug)]
pub struct Neighbors<'a, G> {
    inner: Incident<'a, G>,
}

impl<G: GraphView> Iterator for Neighbors<'_, G> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        self.inner.next().map(|(v, _)| v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl<G: GraphView> ExactSizeIterator for Neighbors<'_, G> {}

/// Calls `f(w, e_uw, e_vw)` for every common neighbor `w` of `u` and `v`,
/// scanning the lower-degree endpoint and probing the other.
pub(crate) fn for_each_common<G, F>(g: &G, u: NodeId, v: NodeId, mut f: F)
where
    G: GraphView,
    F: FnMut(NodeId, EdgeId, EdgeId),
{
    let (a, b) = if g.degree(u) <= g.degree(v) {
        (u, v)
    } else {
        (v, u)
    };
    for (w, e_aw) in g.incident(a) {
        if w == b {
            continue;
        }
        if let Some(e_bw) = g.edge_id(b, w) {
            if a == u {
                f(w, e_aw, e_bw);
            } else {
                f(w, e_bw, e_aw);
            }
        }
    }
}
