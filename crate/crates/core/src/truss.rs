//! Exact truss decomposition by support peeling.

use crate::bucket::BucketQueue;
use crate::error::{Result, TrussError};
use crate::gadgets::{blowup, disjoint_union, ladder_gadget};
use crate::graph::view::for_each_common;
use crate::graph::{degeneracy_order, EdgeId, Graph, GraphView};
use crate::triangles::compute_supports;

/// Per-edge trussness `t(e)` and the graph trussness `max_e t(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrussDecomposition {
    pub edge_trussness: Vec<usize>,
    pub trussness: usize,
}

impl TrussDecomposition {
    fn from_edge_trussness(edge_trussness: Vec<usize>) -> Self {
        let trussness = edge_trussness.iter().copied().max().unwrap_or(0);
        Self {
            edge_trussness,
            trussness,
        }
    }
}

/// An edge permutation with the forward support of each position: the
/// number of triangles `order[i]` forms with edges at positions `>= i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    pub order: Vec<EdgeId>,
    pub forward_support: Vec<usize>,
}

/// Peels a minimum-support edge at a time (lowest edge id on ties).
///
/// Returns the decomposition together with the peeling order, which is an
/// exact truss order of `g`.
pub fn truss_decomposition<G: GraphView>(g: &G) -> (TrussDecomposition, EdgeOrder) {
    let m = g.edge_count();
    let supports = compute_supports(g);
    let mut queue = BucketQueue::new(&supports.support);
    let mut edge_trussness = vec![0; m];
    let mut order = Vec::with_capacity(m);
    let mut forward_support = Vec::with_capacity(m);
    let mut level = 0;
    while let Some((e, residual)) = queue.pop_min() {
        level = level.max(residual);
        edge_trussness[e] = level;
        order.push(e);
        forward_support.push(residual);
        let (u, v) = g.endpoints(e);
        for_each_common(g, u, v, |_, e_uw, e_vw| {
            if queue.contains(e_uw) && queue.contains(e_vw) {
                queue.decrement(e_uw);
                queue.decrement(e_vw);
            }
        });
    }
    (
        TrussDecomposition::from_edge_trussness(edge_trussness),
        EdgeOrder {
            order,
            forward_support,
        },
    )
}

/// Largest `k` such that a k-truss exists (0 for triangle-free graphs).
pub fn trussness<G: GraphView>(g: &G) -> usize {
    truss_decomposition(g).0.trussness
}

/// Edge ids of the maximal k-truss, ascending; empty when `k > t_G`.
pub fn max_truss_subgraph<G: GraphView>(g: &G, k: usize) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut support = compute_supports(g).support;
    let mut alive = vec![true; m];
    let mut pending: Vec<EdgeId> = (0..m).filter(|&e| support[e] < k).collect();
    let mut queued: Vec<bool> = support.iter().map(|&s| s < k).collect();
    while let Some(e) = pending.pop() {
        alive[e] = false;
        let (u, v) = g.endpoints(e);
        for_each_common(g, u, v, |_, e_uw, e_vw| {
            if alive[e_uw] && alive[e_vw] {
                for f in [e_uw, e_vw] {
                    support[f] -= 1;
                    if support[f] < k && !queued[f] {
                        queued[f] = true;
                        pending.push(f);
                    }
                }
            }
        });
    }
    (0..m).filter(|&e| alive[e]).collect()
}

/// Forward support and minimum residual support at every position of an
/// edge order, obtained by deleting the edges one by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReplay {
    /// Support of `order[i]` in the graph induced by `order[i..]`.
    pub forward_support: Vec<usize>,
    /// Minimum support of any edge in the graph induced by `order[i..]`.
    pub min_support: Vec<usize>,
}

impl OrderReplay {
    /// True when every position removes a minimum-support edge, i.e. the
    /// order is an exact truss order.
    pub fn is_exact(&self) -> bool {
        self.forward_support == self.min_support
    }

    /// Positions violating the approximate-order bound
    /// `forward <= max(T / m, (1 + eps) * min)` for a graph with `triangles`
    /// triangles and `edges` edges.
    pub fn approx_violations(&self, triangles: u64, edges: usize, epsilon: f64) -> Vec<usize> {
        self.forward_support
            .iter()
            .zip(&self.min_support)
            .enumerate()
            .filter(|(_, (&f, &s))| {
                let within_density = (f as u128) * (edges as u128) <= triangles as u128;
                let within_factor = f as f64 <= (1.0 + epsilon) * s as f64 + 1e-9;
                !(within_density || within_factor)
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// Replays `order` on `g`. Fails if `order` is not a permutation of the
/// edge ids.
pub fn replay_order<G: GraphView>(g: &G, order: &[EdgeId]) -> Result<OrderReplay> {
    let m = g.edge_count();
    if order.len() != m {
        return Err(TrussError::InvalidOrder(format!(
            "order has {} entries for {m} edges",
            order.len()
        )));
    }
    let mut seen = vec![false; m];
    for &e in order {
        if e >= m || std::mem::replace(&mut seen[e], true) {
            return Err(TrussError::InvalidOrder(format!(
                "edge {e} is out of range or repeated"
            )));
        }
    }

    let mut support = compute_supports(g).support;
    let max = support.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 1];
    for &s in &support {
        count[s] += 1;
    }
    let mut alive = vec![true; m];
    let mut min = 0;
    let mut forward_support = Vec::with_capacity(m);
    let mut min_support = Vec::with_capacity(m);
    for &e in order {
        while count[min] == 0 {
            min += 1;
        }
        min_support.push(min);
        forward_support.push(support[e]);
        count[support[e]] -= 1;
        alive[e] = false;
        let (u, v) = g.endpoints(e);
        for_each_common(g, u, v, |_, e_uw, e_vw| {
            if alive[e_uw] && alive[e_vw] {
                for f in [e_uw, e_vw] {
                    count[support[f]] -= 1;
                    support[f] -= 1;
                    count[support[f]] += 1;
                    min = min.min(support[f]);
                }
            }
        });
    }
    Ok(OrderReplay {
        forward_support,
        min_support,
    })
}

/// Recovers the truss decomposition of `g` from any procedure that produces
/// an exact truss order.
///
/// The oracle runs on the disjoint union of the 2-fold blow-up of `g` (all
/// trussness values even) with a ladder gadget covering every value from 0
/// to `2 d_G`. Each blow-up edge sits between two ladder edges whose known
/// trussness differ by at most one; the even candidate is twice the answer.
pub fn decomposition_from_order<F>(g: &Graph, mut oracle: F) -> Result<TrussDecomposition>
where
    F: FnMut(&Graph) -> Vec<EdgeId>,
{
    let m = g.edge_count();
    if m == 0 {
        return Ok(TrussDecomposition::from_edge_trussness(Vec::new()));
    }
    let degeneracy = degeneracy_order(g).degeneracy;
    let doubled = blowup(g, 2)?.materialize()?;
    let ladder = ladder_gadget(2 * degeneracy + 1);
    let top = 2 * degeneracy;
    let combined = disjoint_union(&doubled, &ladder.graph);
    let split = doubled.edge_count();

    let order = oracle(&combined);
    let replay = replay_order(&combined, &order)?;
    if !replay.is_exact() {
        return Err(TrussError::InvalidOrder(
            "oracle order does not peel a minimum-support edge at every step".into(),
        ));
    }

    let known = |e: EdgeId| ladder.expected_trussness[e - split];
    let mut next_ladder = vec![None; order.len()];
    let mut upcoming = None;
    for (i, &e) in order.iter().enumerate().rev() {
        next_ladder[i] = upcoming;
        if e >= split {
            upcoming = Some(known(e));
        }
    }

    let mut base = vec![None; m];
    let mut below = 0;
    for (i, &e) in order.iter().enumerate() {
        if e >= split {
            below = known(e);
            continue;
        }
        let above = next_ladder[i].unwrap_or(top).min(top);
        let mut evens = (below..=above).filter(|t| t % 2 == 0);
        let (Some(t), None) = (evens.next(), evens.next()) else {
            return Err(TrussError::InvalidOrder(format!(
                "blow-up edge {e} is not pinned between ladder edges ({below}..={above})"
            )));
        };
        let b = e / 4;
        match base[b] {
            None => base[b] = Some(t / 2),
            Some(prev) if prev == t / 2 => {}
            Some(_) => {
                return Err(TrussError::InvalidOrder(format!(
                    "mirror edges of edge {b} disagree"
                )))
            }
        }
    }
    let edge_trussness = base
        .into_iter()
        .map(|t| t.expect("every edge seen"))
        .collect();
    Ok(TrussDecomposition::from_edge_trussness(edge_trussness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_is_a_one_truss() {
        let (dec, order) = truss_decomposition(&Graph::complete(3));
        assert_eq!(dec.edge_trussness, vec![1, 1, 1]);
        assert_eq!(dec.trussness, 1);
        assert_eq!(order.order, vec![0, 1, 2]);
        assert_eq!(order.forward_support, vec![1, 0, 0]);
    }

    #[test]
    fn cliques() {
        assert_eq!(trussness(&Graph::complete(5)), 3);
        assert_eq!(trussness(&Graph::complete(2)), 0);
        assert_eq!(trussness(&Graph::empty()), 0);
    }

    #[test]
    fn triangle_free_is_zero() {
        let c5 = Graph::from_edges((0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(trussness(&c5), 0);
    }

    #[test]
    fn k_truss_of_everything_at_zero() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(max_truss_subgraph(&g, 0), vec![0, 1, 2, 3]);
        assert_eq!(max_truss_subgraph(&g, 1), vec![0, 1, 2]);
        assert!(max_truss_subgraph(&g, 2).is_empty());
    }

    #[test]
    fn peeling_order_replays_exactly() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (3, 4)]);
        let (_, order) = truss_decomposition(&g);
        let replay = replay_order(&g, &order.order).unwrap();
        assert!(replay.is_exact());
        assert_eq!(replay.forward_support, order.forward_support);
    }

    #[test]
    fn replay_rejects_non_permutations() {
        let g = Graph::complete(3);
        assert!(replay_order(&g, &[0, 1]).is_err());
        assert!(replay_order(&g, &[0, 1, 1]).is_err());
        assert!(replay_order(&g, &[0, 1, 7]).is_err());
    }

    #[test]
    fn reduction_on_k3() {
        let g = Graph::complete(3);
        let dec = decomposition_from_order(&g, |h| truss_decomposition(h).1.order).unwrap();
        assert_eq!(dec.edge_trussness, vec![1, 1, 1]);
    }

    #[test]
    fn reduction_rejects_bad_oracle() {
        let g = Graph::complete(4);
        let err = decomposition_from_order(&g, |h| {
            let mut order = truss_decomposition(h).1.order;
            order.reverse();
            order
        })
        .unwrap_err();
        assert!(matches!(err, TrussError::InvalidOrder(_)));
    }
}
