use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use zlab_core::iso::{find_isomorphism, Colored};
use zlab_core::UGraph;

use crate::linalg::{from_int, nullspace, primitive};
use crate::types::DynkinType::{self, *};
use crate::DynkinError;

/// Result of recognizing a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub ty: DynkinType,
    /// Additive function indexed by input vertex (affine types only).
    pub additive: Option<Vec<u64>>,
    /// `order[k]` is the input vertex playing canonical vertex `k` (ADE types only).
    pub order: Option<Vec<usize>>,
}

impl Recognition {
    /// Inverse of `order`: canonical index of each input vertex.
    pub fn position(&self) -> Option<Vec<usize>> {
        self.order.as_ref().map(|o| {
            let mut p = vec![0; o.len()];
            for (k, &v) in o.iter().enumerate() {
                p[v] = k;
            }
            p
        })
    }
}

fn colored(g: &UGraph) -> Colored {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v, m) in g.edges() {
        adj[u].push((v, [m, 0]));
        adj[v].push((u, [m, 0]));
    }
    Colored { init: vec![0; g.n()], adj }
}

/// Vertex map `f` with `f(g) = h`.
pub fn graph_isomorphism(g: &UGraph, h: &UGraph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    find_isomorphism(&colored(g), &colored(h))
}

/// Exact affine test: the kernel of `2I − A` is spanned by a strictly positive vector.
pub fn exact_additive_function(g: &UGraph) -> Option<Vec<u64>> {
    let n = g.n();
    let a = g.adjacency();
    let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 2 - a[i][j] } else { -a[i][j] }).collect()).collect();
    let ns = nullspace(&from_int(&m));
    if ns.len() != 1 {
        return None;
    }
    let v: Vec<BigInt> = primitive(&ns[0]);
    if v.iter().all(|x| x.is_positive()) {
        v.iter().map(|x| x.to_u64()).collect()
    } else {
        None
    }
}

fn affine_candidates(n: usize) -> Vec<DynkinType> {
    let mut c = Vec::new();
    if n >= 2 {
        c.push(AffA(n - 1));
    }
    if n >= 5 {
        c.push(AffD(n - 1));
    }
    match n {
        7 => c.push(AffE6),
        8 => c.push(AffE7),
        9 => c.push(AffE8),
        _ => {}
    }
    c
}

fn finite_candidates(n: usize) -> Vec<DynkinType> {
    let mut c = vec![A(n)];
    if n >= 4 {
        c.push(D(n));
    }
    match n {
        6 => c.push(E6),
        7 => c.push(E7),
        8 => c.push(E8),
        _ => {}
    }
    c
}

fn order_for(g: &UGraph, ty: DynkinType) -> Option<Vec<usize>> {
    let f = graph_isomorphism(g, &ty.diagram())?;
    let mut order = vec![0; f.len()];
    for (v, &k) in f.iter().enumerate() {
        order[k] = v;
    }
    Some(order)
}

/// Classifies a connected multigraph as finite ADE, affine ADE or neither.
pub fn recognize(g: &UGraph) -> Result<Recognition, DynkinError> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(DynkinError::Disconnected);
    }
    if let Some(lambda) = exact_additive_function(g) {
        for ty in affine_candidates(n) {
            if let Some(order) = order_for(g, ty) {
                return Ok(Recognition { ty, additive: Some(lambda), order: Some(order) });
            }
        }
        return Err(DynkinError::Internal(format!("additive function on an unrecognized {n}-vertex graph")));
    }
    for ty in finite_candidates(n) {
        if let Some(order) = order_for(g, ty) {
            return Ok(Recognition { ty, additive: None, order: Some(order) });
        }
    }
    Ok(Recognition { ty: NonADE, additive: None, order: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_is_affine_a5() {
        let r = recognize(&UGraph::cycle(6)).unwrap();
        assert_eq!(r.ty, AffA(5));
        assert_eq!(r.additive, Some(vec![1; 6]));
    }

    #[test]
    fn star_with_five_leaves_is_not_ade() {
        assert_eq!(recognize(&UGraph::star(5)).unwrap().ty, NonADE);
    }

    #[test]
    fn star_with_four_leaves_is_affine_d4() {
        let r = recognize(&UGraph::star(4)).unwrap();
        assert_eq!(r.ty, AffD(4));
        assert_eq!(r.additive, Some(vec![2, 1, 1, 1, 1]));
        assert_eq!(r.order.unwrap()[2], 0);
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(recognize(&UGraph::new(2)), Err(DynkinError::Disconnected));
    }
}
