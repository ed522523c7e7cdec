//! The Kac quadruples of the classification list, as data.

use zlab_dynkin::DynkinType::{self, *};
use zlab_spectral::naming::{canonical_labels, expand_args, template_by_name};

use crate::error::{CatalogError, Result};
use crate::family::{affine_from_code, FamilyId};
use crate::kac::KacQuadruple;

/// A labeled diagram as drawn: name, node count, positional labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawn {
    pub name: String,
    pub k: usize,
    pub args: Vec<DynkinType>,
}

fn dr(name: String, k: usize, args: Vec<DynkinType>) -> Drawn {
    Drawn { name, k, args }
}

/// `A_{n−1}^(1)` with every node labeled `t`.
fn cyc(n: usize, t: DynkinType) -> Drawn {
    match n {
        1 => dr("A_0^(1)".into(), 1, vec![t]),
        2 => dr("A_1^(1)".into(), 2, vec![t, t]),
        _ => dr(format!("A_{}^(1)", n - 1), n, vec![t; 4]),
    }
}

fn c1(n: usize, a: Vec<DynkinType>) -> Drawn {
    dr(format!("C_{n}^(1)"), n + 1, a)
}

fn d2(n: usize, a: Vec<DynkinType>) -> Drawn {
    dr(format!("D_{}^(2)", n + 1), n + 1, a)
}

fn a2even(n: usize, a: Vec<DynkinType>) -> Drawn {
    dr(format!("A_{}^(2)", 2 * n), n + 1, a)
}

fn b1(n: usize, a: Vec<DynkinType>) -> Drawn {
    dr(format!("B_{}^(1)", n + 1), n + 2, a)
}

fn a2odd(n: usize, a: Vec<DynkinType>) -> Drawn {
    dr(format!("A_{}^(2)", 2 * n + 1), n + 2, a)
}

fn fixed(name: &str, a: Vec<DynkinType>) -> Drawn {
    let k = match name {
        "A_1^(1)" | "A_2^(2)" => 2,
        "G_2^(1)" | "D_4^(3)" => 3,
        _ => 5,
    };
    dr(name.into(), k, a)
}

impl Drawn {
    /// One label per template node, ordered as in the template.
    pub fn node_labels(&self) -> Result<Vec<String>> {
        let t = template_by_name(&self.name, self.k)
            .ok_or_else(|| CatalogError::BadParams(0, format!("no diagram {} on {} nodes", self.name, self.k)))?;
        let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
        if self.k <= 2 && args.len() == 4 && t.args.len() == 4 {
            return Ok(if self.k == 1 { vec![args[0].clone()] } else { vec![args[0].clone(), args[3].clone()] });
        }
        expand_args(&t, &args).map_err(|e| CatalogError::BadParams(0, e))
    }

    /// The string `describe` produces for this diagram.
    pub fn render(&self) -> Result<String> {
        let t = template_by_name(&self.name, self.k).expect("checked in node_labels");
        let labels = self.node_labels()?;
        Ok(format!("{}[{}]", self.name, canonical_labels(&t, &labels).join(", ")))
    }

    pub fn vertex_count(&self) -> Result<usize> {
        Ok(self.node_labels()?.iter().map(|s| s.parse::<DynkinType>().map(|t| t.vertex_count()).unwrap_or(0)).sum())
    }
}

fn untwisted(t: DynkinType) -> String {
    match t {
        AffA(1) => "A_1^(1)".into(),
        AffA(l) => format!("A_{l}^(1)"),
        AffD(l) => format!("D_{l}^(1)"),
        AffE6 => "E_6^(1)".into(),
        AffE7 => "E_7^(1)".into(),
        AffE8 => "E_8^(1)".into(),
        _ => unreachable!("validated affine"),
    }
}

/// `Λ̂ ⊗ Λ̂'`: `S(G)` is the untwisted diagram of `Λ̂'` with every node labeled `Λ̂`.
fn tensor_drawn(s: DynkinType, t: DynkinType) -> Drawn {
    let k = t.vertex_count();
    dr(untwisted(t), k, vec![s; template_by_name(&untwisted(t), k).map(|x| x.args.len()).unwrap_or(k)])
}

/// The listed `(S(G), S(G*))` with labels, for the base (non-dual) instance.
pub fn listed_drawn(f: &FamilyId) -> Result<(Drawn, Drawn)> {
    f.validate()?;
    let p = &f.params;
    let g = |i: usize| p.get(i).copied().unwrap_or(0);
    let a = AffA;
    let d = AffD;
    let (m, n) = (g(0), g(1));
    let pair = match f.id {
        1 => {
            let s = affine_from_code(p[0], p[1]).expect("validated");
            let t = affine_from_code(p[2], p[3]).expect("validated");
            (tensor_drawn(s, t), tensor_drawn(t, s))
        }
        2 => {
            let t = affine_from_code(p[0], p[1]).expect("validated");
            (fixed("A_1^(1)", vec![t, t]), fixed("A_1^(1)", vec![t, t]))
        }
        3 => {
            let (r, _, n, dd) = (p[0], p[1], p[2], p[3]);
            (cyc(n, a(r * dd - 1)), cyc(dd, a(r * n - 1)))
        }
        4 => (cyc(n, a(2 * m - 1)), d2(m, vec![a(n - 1), a(2 * n - 1), a(2 * n - 1), a(n - 1)])),
        5 => (cyc(n, a(2 * m - 1)), dr(format!("½A_{}^(1)", 2 * m - 1), m, vec![a(2 * n - 1); 4])),
        6 => (cyc(n, d(m + 2)), a2odd(m, vec![a(n - 1), a(n - 1), a(n - 1), a(n - 1), a(2 * n - 1)])),
        7 => (cyc(n, d(m + 2)), c1(m, vec![a(2 * n - 1), a(n - 1), a(n - 1), a(2 * n - 1)])),
        8 => (cyc(n, d(2 * m + 2)), b1(m, vec![a(2 * n - 1), a(2 * n - 1), a(2 * n - 1), a(2 * n - 1), a(n - 1)])),
        9 => (cyc(n, d(2 * m + 1)), dr(format!("½D_{}^(1)", 2 * m + 1), m + 1, vec![a(2 * n - 1); 5])),
        10 => (cyc(n, d(2 * m + 2)), a2even(m, vec![a(n - 1), a(2 * n - 1), a(2 * n - 1), a(4 * n - 1)])),
        11 => (
            cyc(n, d(2 * m + 3)),
            dr(format!("½C_{}^(1)", 2 * m + 1), m + 1, vec![a(4 * n - 1), a(2 * n - 1), a(2 * n - 1), a(2 * n - 1)]),
        ),
        12 => (cyc(m, d(4)), fixed("A_2^(2)", vec![a(m - 1), a(4 * m - 1)])),
        13 => (cyc(m, d(4)), fixed("D_4^(3)", vec![a(m - 1), a(m - 1), a(3 * m - 1)])),
        14 => (cyc(m, AffE6), fixed("E_6^(2)", vec![a(m - 1), a(m - 1), a(m - 1), a(2 * m - 1), a(2 * m - 1)])),
        15 => (cyc(m, AffE6), fixed("G_2^(1)", vec![a(3 * m - 1), a(3 * m - 1), a(m - 1)])),
        16 => (cyc(m, AffE7), fixed("F_4^(1)", vec![a(2 * m - 1), a(2 * m - 1), a(2 * m - 1), a(m - 1), a(m - 1)])),
        17 => {
            let (r, n, dd) = (p[0], p[2], p[3]);
            let side = |k: usize, x: usize| c1(k, vec![d(x + 2), a(2 * x - 1), a(2 * x - 1), d(x + 2)]);
            (side(n, r * dd), side(dd, r * n))
        }
        18 => {
            let (r, n) = (p[0], p[2]);
            (
                c1(n, vec![d(r + 2), a(2 * r - 1), a(2 * r - 1), d(r + 2)]),
                fixed("A_1^(1)", vec![d(r * n + 2), d(r * n + 2)]),
            )
        }
        19 => (fixed("A_1^(1)", vec![d(m + 2), d(m + 2)]), fixed("A_1^(1)", vec![d(m + 2), d(m + 2)])),
        20 => {
            let side = |k: usize, x: usize| a2even(k, vec![a(2 * x - 1), a(4 * x - 1), a(4 * x - 1), d(2 * x + 2)]);
            (side(n, m), side(m, n))
        }
        21 => (
            a2even(m, vec![a(1), a(3), a(3), d(4)]),
            fixed("A_2^(2)", vec![a(2 * m - 1), d(2 * m + 2)]),
        ),
        22 => (
            c1(n, vec![a(4 * m - 1), a(2 * m - 1), a(2 * m - 1), d(m + 2)]),
            d2(m, vec![d(n + 2), d(2 * n + 2), d(2 * n + 2), d(n + 2)]),
        ),
        23 => (
            c1(n, vec![d(2 * m + 2), d(m + 2), d(m + 2), d(2 * m + 2)]),
            b1(m, vec![d(n + 2), d(n + 2), d(n + 2), d(n + 2), a(2 * n - 1)]),
        ),
        24 => {
            let side = |k: usize, x: usize| c1(k, vec![d(2 * x + 2), d(x + 2), d(x + 2), d(2 * x + 2)]);
            (side(n, m), side(m, n))
        }
        25 => {
            let side = |k: usize, x: usize| a2even(k, vec![a(2 * x - 1), d(x + 2), d(x + 2), d(2 * x + 2)]);
            (side(n, m), side(m, n))
        }
        26 => {
            let side = |k: usize, x: usize| a2even(k, vec![d(x + 2), d(2 * x + 2), d(2 * x + 2), d(4 * x + 2)]);
            (side(n, m), side(m, n))
        }
        27 => {
            let side = |k: usize, x: usize| d2(k, vec![a(2 * x - 1), d(x + 2), d(x + 2), a(2 * x - 1)]);
            (side(n, m), side(m, n))
        }
        28 => {
            let side = |k: usize, x: usize| d2(k, vec![a(4 * x - 1), d(2 * x + 2), d(2 * x + 2), d(x + 2)]);
            (side(n, m), side(m, n))
        }
        29 => (
            d2(n, vec![d(m + 2), d(2 * m + 2), d(2 * m + 2), d(m + 2)]),
            a2odd(m, vec![a(2 * n - 1), a(2 * n - 1), a(2 * n - 1), a(2 * n - 1), d(n + 2)]),
        ),
        30 => (c1(m, vec![d(6), d(4), d(4), d(6)]), fixed("D_4^(3)", vec![d(m + 2), d(m + 2), d(3 * m + 2)])),
        31 => (a2even(m, vec![a(3), d(4), d(4), d(6)]), fixed("A_2^(2)", vec![d(m + 2), d(4 * m + 2)])),
        32 => (d2(m, vec![a(3), d(4), d(4), a(3)]), fixed("A_1^(1)", vec![a(4 * m - 1), d(m + 2)])),
        33 => (
            c1(m, vec![AffE7, AffE6, AffE6, AffE7]),
            fixed("F_4^(1)", vec![d(m + 2), d(m + 2), d(m + 2), a(2 * m - 1), a(2 * m - 1)]),
        ),
        34 => (c1(m, vec![AffE7, AffE6, AffE6, AffE7]), fixed("G_2^(1)", vec![d(3 * m + 2), d(3 * m + 2), d(m + 2)])),
        35 => (
            d2(m, vec![AffE6, AffE7, AffE7, AffE6]),
            fixed("E_6^(2)", vec![a(2 * m - 1), a(2 * m - 1), a(2 * m - 1), d(m + 2), d(m + 2)]),
        ),
        36 => self_dual(fixed("A_1^(1)", vec![AffE8, AffE8])),
        37 => self_dual(fixed("A_2^(2)", vec![a(5), AffE6])),
        38 => self_dual(fixed("A_2^(2)", vec![d(5), AffE7])),
        39 => self_dual(fixed("A_2^(2)", vec![a(3), d(6)])),
        40 => self_dual(fixed("A_2^(2)", vec![a(1), d(4)])),
        41 => (fixed("D_4^(3)", vec![a(3), a(3), d(5)]), fixed("A_1^(1)", vec![d(6), d(6)])),
        42 => (fixed("G_2^(1)", vec![d(5), d(5), a(3)]), fixed("A_1^(1)", vec![AffE7, AffE7])),
        43 => self_dual(fixed("D_4^(3)", vec![d(6), d(6), AffE7])),
        44 => self_dual(fixed("G_2^(1)", vec![AffE7, AffE7, d(6)])),
        45 => self_dual(fixed("D_4^(3)", vec![d(4), d(4), AffE6])),
        46 => self_dual(fixed("G_2^(1)", vec![AffE6, AffE6, d(4)])),
        47 => {
            let side = |k: usize, x: usize| b1(k, vec![d(2 * x + 2), d(2 * x + 2), d(2 * x + 2), d(2 * x + 2), d(x + 2)]);
            (side(n, m), side(m, n))
        }
        48 => {
            let side = |k: usize, x: usize| a2odd(k, vec![d(x + 2), d(x + 2), d(x + 2), d(x + 2), d(2 * x + 2)]);
            (side(n, m), side(m, n))
        }
        49 => (
            b1(m, vec![AffE7, AffE7, AffE7, AffE7, AffE6]),
            fixed("F_4^(1)", vec![d(2 * m + 2), d(2 * m + 2), d(2 * m + 2), d(m + 2), d(m + 2)]),
        ),
        50 => (
            a2odd(m, vec![AffE6, AffE6, AffE6, AffE6, AffE7]),
            fixed("E_6^(2)", vec![d(m + 2), d(m + 2), d(m + 2), d(2 * m + 2), d(2 * m + 2)]),
        ),
        51 => self_dual(fixed("F_4^(1)", vec![AffE7, AffE7, AffE7, AffE6, AffE6])),
        52 => self_dual(fixed("E_6^(2)", vec![AffE6, AffE6, AffE6, AffE7, AffE7])),
        53 => {
            let side = |k: usize, x: usize| {
                dr(format!("½C_{}^(1)", 2 * k + 1), k + 1, vec![d(2 * x + 3), a(4 * x + 1), a(4 * x + 1), a(4 * x + 1)])
            };
            (side(n, m), side(m, n))
        }
        id => return Err(CatalogError::UnknownFamily(id)),
    };
    Ok(pair)
}

fn self_dual(x: Drawn) -> (Drawn, Drawn) {
    (x.clone(), x)
}

/// The listed Kac quadruple of `f`, with the sides swapped for dual instances.
pub fn listed_quadruple(f: &FamilyId) -> Result<KacQuadruple> {
    let base = FamilyId { id: f.id, params: f.params.clone(), dual: false };
    let (s, t) = listed_drawn(&base)?;
    let q = KacQuadruple { s_g: s.name.clone(), descr_g: s.render()?, s_gstar: t.name.clone(), descr_gstar: t.render()? };
    Ok(if f.dual { q.swapped() } else { q })
}

/// Vertex count read off the listing, without building the bigraph.
pub fn vertex_count(f: &FamilyId) -> Result<usize> {
    let base = FamilyId { id: f.id, params: f.params.clone(), dual: false };
    listed_drawn(&base)?.0.vertex_count()
}
