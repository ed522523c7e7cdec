//! Double and self bindings as blue edge patterns between canonical diagrams.

use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_dynkin::DynkinType::{self, *};
use zlab_dynkin::recognize;

use crate::assemble::Assembly;
use crate::error::{CatalogError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BindingKind {
    /// `S_{4n+1}`: the `(4n+2)`-gon with its diameters.
    SelfBinding(usize),
    Parallel(DynkinType),
    /// `D̂_{m+2} ⇒ Â_{2m−1}`
    DA(usize),
    /// `Â_{4m−1} ⇒ Â_{2m−1}`
    AA(usize),
    /// `D̂_{2m+2} ⇒ D̂_{m+2}`
    DD(usize),
    E7E6,
    /// `D̂_{3n+2} ⇛ D̂_{n+2}`
    DD3(usize),
    /// `Â_{6n−1} ⇛ Â_{2n−1}`
    AA3(usize),
    D5A3,
    E7D6,
    E6D4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Blue edges `(x, y, mult)` in canonical vertex order; for a self binding both
/// ends live in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: BindingKind,
    pub x: DynkinType,
    pub y: DynkinType,
    pub edges: Vec<(usize, usize, u32)>,
}

/// Canonical index of `u_i` in `D̂_{m+2}`; `sign` picks `±` at the two ends.
pub(crate) fn d_index(m: usize, i: usize, sign: usize) -> usize {
    if i == 0 {
        sign
    } else if i < m {
        i + 1
    } else {
        m + 1 + sign
    }
}

const D5A3: &str = include_str!("../data/bind3_d5_a3.json");
const E7D6: &str = include_str!("../data/bind3_e7_d6.json");
const E6D4: &str = include_str!("../data/bind3_e6_d4.json");

fn from_fixture(kind: BindingKind, src: &str, x: DynkinType, y: DynkinType) -> Result<Pattern> {
    let g = Bigraph::from_json(src)?;
    let mut pos = vec![(0usize, 0usize); g.n()];
    let mut found = [false; 2];
    for comp in g.red_components() {
        let r = recognize(&g.red().induced(&comp))?;
        let side = if r.ty == x && !found[0] {
            0
        } else if r.ty == y {
            1
        } else {
            return Err(CatalogError::Binding(format!("fixture component {}", r.ty)));
        };
        found[side] = true;
        let p = r.position().expect("ADE order");
        for (k, &v) in comp.iter().enumerate() {
            pos[v] = (side, p[k]);
        }
    }
    let mut edges = Vec::new();
    for (u, v, m) in g.blue().edges() {
        let (a, b) = if pos[u].0 == 0 { (pos[u], pos[v]) } else { (pos[v], pos[u]) };
        edges.push((a.1, b.1, m));
    }
    edges.sort();
    Ok(Pattern { kind, x, y, edges })
}

impl BindingKind {
    pub fn pattern(self) -> Result<Pattern> {
        let bad = |s: &str| Err(CatalogError::Binding(format!("{self:?}: {s}")));
        let mut e = Vec::new();
        let (x, y) = match self {
            BindingKind::SelfBinding(n) => {
                if n == 0 {
                    return bad("n ≥ 1");
                }
                for v in 0..2 * n + 1 {
                    e.push((v, v + 2 * n + 1, 1));
                }
                (AffA(4 * n + 1), AffA(4 * n + 1))
            }
            BindingKind::Parallel(t) => {
                if !t.is_affine() {
                    return bad("affine type expected");
                }
                e.extend((0..t.vertex_count()).map(|v| (v, v, 1)));
                (t, t)
            }
            BindingKind::DA(m) => {
                if m < 2 {
                    return bad("m ≥ 2");
                }
                for s in 0..2 {
                    e.push((d_index(m, 0, s), 0, 1));
                    e.push((d_index(m, m, s), m, 1));
                }
                for i in 1..m {
                    e.push((d_index(m, i, 0), i, 1));
                    e.push((d_index(m, i, 0), 2 * m - i, 1));
                }
                (AffD(m + 2), AffA(2 * m - 1))
            }
            BindingKind::AA(m) => {
                if m < 1 {
                    return bad("m ≥ 1");
                }
                e.extend((0..4 * m).map(|v| (v, v % (2 * m), 1)));
                (AffA(4 * m - 1), AffA(2 * m - 1))
            }
            BindingKind::DD(m) => {
                if m < 2 {
                    return bad("m ≥ 2");
                }
                let (mx, my) = (2 * m, m);
                for s in 0..2 {
                    e.push((d_index(mx, 0, s), d_index(my, 0, s), 1));
                    e.push((d_index(mx, mx, s), d_index(my, 0, s), 1));
                    e.push((d_index(mx, m, 0), d_index(my, my, s), 1));
                }
                for j in 1..m {
                    e.push((d_index(mx, j, 0), d_index(my, j, 0), 1));
                    e.push((d_index(mx, mx - j, 0), d_index(my, j, 0), 1));
                }
                (AffD(2 * m + 2), AffD(m + 2))
            }
            BindingKind::E7E6 => {
                // Ê7 [l1,l2,l3,c,r3,r2,r1,s], Ê6 [a1o,a1i,c,a2i,a2o,a3i,a3o]
                e.extend([(0, 0, 1), (6, 0, 1), (1, 1, 1), (5, 1, 1), (2, 2, 1), (4, 2, 1)]);
                e.extend([(3, 3, 1), (3, 5, 1), (7, 4, 1), (7, 6, 1)]);
                (AffE7, AffE6)
            }
            BindingKind::DD3(n) => {
                if n < 2 {
                    return bad("n ≥ 2");
                }
                let (mx, my) = (3 * n, n);
                for j in 1..n {
                    for i in [j, 2 * n - j, 2 * n + j] {
                        e.push((d_index(mx, i, 0), d_index(my, j, 0), 1));
                    }
                }
                for s in 0..2 {
                    e.push((d_index(mx, 0, s), d_index(my, 0, s), 1));
                    e.push((d_index(mx, 2 * n, 0), d_index(my, 0, s), 1));
                    e.push((d_index(mx, mx, s), d_index(my, my, s), 1));
                    e.push((d_index(mx, n, 0), d_index(my, my, s), 1));
                }
                (AffD(3 * n + 2), AffD(n + 2))
            }
            BindingKind::AA3(n) => {
                if n < 1 {
                    return bad("n ≥ 1");
                }
                e.extend((0..6 * n).map(|v| (v, v % (2 * n), 1)));
                (AffA(6 * n - 1), AffA(2 * n - 1))
            }
            BindingKind::D5A3 => return from_fixture(self, D5A3, AffD(5), AffA(3)),
            BindingKind::E7D6 => return from_fixture(self, E7D6, AffE7, AffD(6)),
            BindingKind::E6D4 => return from_fixture(self, E6D4, AffE6, AffD(4)),
        };
        e.sort();
        Ok(Pattern { kind: self, x, y, edges: e })
    }

    pub fn is_self(self) -> bool {
        matches!(self, BindingKind::SelfBinding(_))
    }
}

impl Pattern {
    /// The involution of one side swapping the two ends of each blue `A_3`
    /// whose middle lies on the other side.
    pub fn involution(&self, side: Side) -> Vec<usize> {
        let (t, o) = match side {
            Side::X => (self.x, self.y),
            Side::Y => (self.y, self.x),
        };
        let mut mine: Vec<Vec<usize>> = vec![Vec::new(); t.vertex_count()];
        let mut other: Vec<Vec<usize>> = vec![Vec::new(); o.vertex_count()];
        for &(a, b, m) in &self.edges {
            let (p, q) = if side == Side::X { (a, b) } else { (b, a) };
            for _ in 0..m {
                mine[p].push(q);
                other[q].push(p);
            }
        }
        (0..t.vertex_count())
            .map(|v| match mine[v].as_slice() {
                [w] if other[*w].len() == 2 => other[*w].iter().copied().find(|&u| u != v).unwrap_or(v),
                _ => v,
            })
            .collect()
    }
}

/// The binding as a standalone bigraph (`X` first, then `Y`).
pub fn build_binding(kind: BindingKind) -> Result<Bigraph> {
    let p = kind.pattern()?;
    let mut asm = Assembly::new();
    let x = asm.add(p.x);
    let y = if kind.is_self() { x } else { asm.add(p.y) };
    asm.glue(&p, x, y, None, None);
    asm.finish()
}
