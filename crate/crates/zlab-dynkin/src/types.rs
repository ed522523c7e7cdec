use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use zlab_core::UGraph;

use crate::DynkinError;

/// Finite and affine simply-laced Dynkin types. `AffA(l)` has `l + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    AffA(usize),
    AffD(usize),
    AffE6,
    AffE7,
    AffE8,
    NonADE,
}

use DynkinType::*;

impl DynkinType {
    pub fn is_affine(self) -> bool {
        matches!(self, AffA(_) | AffD(_) | AffE6 | AffE7 | AffE8)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, A(_) | D(_) | E6 | E7 | E8)
    }

    /// Checks index ranges (`A_l, Â_l: l ≥ 1`, `D_l, D̂_l: l ≥ 4`).
    pub fn validate(self) -> Result<Self, DynkinError> {
        let ok = match self {
            A(l) | AffA(l) => l >= 1,
            D(l) | AffD(l) => l >= 4,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(DynkinError::BadIndex(self))
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            A(l) | D(l) => l,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            AffA(l) | AffD(l) => l + 1,
            AffE6 => 7,
            AffE7 => 8,
            AffE8 => 9,
            NonADE => 0,
        }
    }

    /// The finite type whose extension this affine type is, and vice versa.
    pub fn affine(self) -> Option<DynkinType> {
        match self {
            A(l) => Some(AffA(l)),
            D(l) => Some(AffD(l)),
            E6 => Some(AffE6),
            E7 => Some(AffE7),
            E8 => Some(AffE8),
            _ => None,
        }
    }

    pub fn finite(self) -> Option<DynkinType> {
        match self {
            AffA(l) => Some(A(l)),
            AffD(l) => Some(D(l)),
            AffE6 => Some(E6),
            AffE7 => Some(E7),
            AffE8 => Some(E8),
            _ => None,
        }
    }

    /// Diagram in canonical vertex order.
    ///
    /// `D̂_{m+2}`: `[u0+, u0-, u1, .., u_{m-1}, um+, um-]`.
    /// `Ê6`: `[a1o, a1i, c, a2i, a2o, a3i, a3o]` (arms `a_k`, inner/outer).
    /// `Ê7`: `[l1, l2, l3, c, r3, r2, r1, s]`.
    /// `Ê8`: `[a2o, a2i, c, l1, .., l5, s]`.
    /// `D_l`: path `0..l-1` with `l-1` attached to `l-3`; `E_k`: path `0..k-1`
    /// with `k-1` attached to `2`.
    pub fn diagram(self) -> UGraph {
        let edges: Vec<(usize, usize)> = match self {
            A(l) => (1..l).map(|v| (v - 1, v)).collect(),
            D(l) => {
                let mut e: Vec<_> = (1..l - 1).map(|v| (v - 1, v)).collect();
                e.push((l - 3, l - 1));
                e
            }
            E6 | E7 | E8 => {
                let k = self.vertex_count();
                let mut e: Vec<_> = (1..k - 1).map(|v| (v - 1, v)).collect();
                e.push((2, k - 1));
                e
            }
            AffA(l) => return UGraph::cycle(l + 1),
            AffD(l) => {
                let m = l - 2;
                if m == 2 {
                    vec![(0, 2), (1, 2), (2, 3), (2, 4)]
                } else {
                    let mut e = vec![(0, 2), (1, 2)];
                    e.extend((2..m).map(|v| (v, v + 1)));
                    e.push((m, m + 1));
                    e.push((m, m + 2));
                    e
                }
            }
            AffE6 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
            AffE7 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
            AffE8 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)],
            NonADE => Vec::new(),
        };
        UGraph::from_edges(self.vertex_count(), &edges).expect("canonical diagram")
    }

    /// Additive function in canonical order (affine types only).
    pub fn additive_function(self) -> Option<Vec<u64>> {
        Some(match self {
            AffA(l) => vec![1; l + 1],
            AffD(l) => {
                let mut v = vec![2; l + 1];
                for i in [0, 1, l - 1, l] {
                    v[i] = 1;
                }
                v
            }
            AffE6 => vec![1, 2, 3, 2, 1, 2, 1],
            AffE7 => vec![1, 2, 3, 4, 3, 2, 1, 2],
            AffE8 => vec![2, 4, 6, 5, 4, 3, 2, 1, 3],
            _ => return None,
        })
    }

    /// Proper 2-coloring of the canonical diagram with vertex 0 white.
    pub fn colors(self) -> Option<Vec<u8>> {
        self.diagram().two_coloring()
    }

    /// `h(Λ)`; `None` stands for the infinite Coxeter number of affine types.
    pub fn coxeter_number(self) -> Result<Option<u64>, DynkinError> {
        Ok(Some(match self {
            A(l) => l as u64 + 1,
            D(l) => 2 * l as u64 - 2,
            E6 => 12,
            E7 => 18,
            E8 => 30,
            NonADE => return Err(DynkinError::NonADE),
            _ => return Ok(None),
        }))
    }

    /// `h⁽²⁾(Λ̂)`, the sum of squares of the additive function.
    pub fn mckay_number(self) -> Result<u64, DynkinError> {
        match self {
            AffA(l) => Ok(l as u64 + 1),
            AffD(l) => Ok(4 * (l as u64 - 2)),
            AffE6 => Ok(24),
            AffE7 => Ok(48),
            AffE8 => Ok(120),
            _ => Err(DynkinError::NotAffine(self)),
        }
    }

    /// `h_a(Λ̂)`: least `m` with `Cᵐ` unipotent, for bipartite affine types.
    pub fn affine_coxeter_number(self) -> Result<u64, DynkinError> {
        match self {
            AffA(l) if l % 2 == 1 => Ok((l as u64 + 1) / 2),
            AffD(l) => {
                let n = l as u64;
                Ok(if n % 2 == 0 { n - 2 } else { 2 * (n - 2) })
            }
            AffE6 => Ok(6),
            AffE7 => Ok(12),
            AffE8 => Ok(30),
            _ => Err(DynkinError::NotAffine(self)),
        }
    }

    /// Coxeter–McKay ratio `g = 4 h_a / h⁽²⁾`.
    pub fn coxeter_mckay_ratio(self) -> Result<u64, DynkinError> {
        Ok(4 * self.affine_coxeter_number()? / self.mckay_number()?)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A(l) => write!(f, "A_{l}"),
            D(l) => write!(f, "D_{l}"),
            E6 => write!(f, "E_6"),
            E7 => write!(f, "E_7"),
            E8 => write!(f, "E_8"),
            AffA(l) => write!(f, "Â_{l}"),
            AffD(l) => write!(f, "D̂_{l}"),
            AffE6 => write!(f, "Ê_6"),
            AffE7 => write!(f, "Ê_7"),
            AffE8 => write!(f, "Ê_8"),
            NonADE => write!(f, "NonADE"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = DynkinError;

    /// Accepts `A5`, `A_5`, `D4`, `E6` (finite) and `AffA3`, `Â_3`, `^A3`, `D̂_4`, `Ê_6` (affine).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DynkinError::Parse(s.to_string());
        let mut t = s.trim().replace('_', "");
        let mut affine = false;
        for prefix in ["Aff", "aff", "^"] {
            if let Some(rest) = t.strip_prefix(prefix) {
                t = rest.to_string();
                affine = true;
            }
        }
        for (hat, plain) in [("Â", "A"), ("D̂", "D"), ("Ê", "E")] {
            if let Some(rest) = t.strip_prefix(hat) {
                t = format!("{plain}{rest}");
                affine = true;
            }
        }
        let (head, num) = t.split_at(1);
        let l: usize = num.parse().map_err(|_| bad())?;
        let fin = match (head, l) {
            ("A", l) => A(l),
            ("D", l) => D(l),
            ("E", 6) => E6,
            ("E", 7) => E7,
            ("E", 8) => E8,
            _ => return Err(bad()),
        };
        let ty = if affine { fin.affine().unwrap() } else { fin };
        ty.validate()
    }
}
