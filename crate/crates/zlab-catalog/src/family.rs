//! Family identifiers, parameter rules, constructors and duality.

use std::fmt;

use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_dynkin::named;
use zlab_dynkin::DynkinType::{self, *};

use crate::construct::{build_path, build_pseudo_twist, build_tensor, build_toric, build_twist};
use crate::error::{CatalogError, Result};
use crate::exceptional::{build_exceptional, is_exceptional};
use crate::{assemble::Assembly, binding::BindingKind};

#[derive(Clone, Copy, Debug)]
pub struct FamilyInfo {
    pub id: u8,
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub self_dual: bool,
}

const fn fam(id: u8, name: &'static str, params: &'static [&'static str], self_dual: bool) -> FamilyInfo {
    FamilyInfo { id, name, params, self_dual }
}

const MN: &[&str] = &["m", "n"];
const N: &[&str] = &["n"];
const NONE: &[&str] = &[];

pub const FAMILIES: [FamilyInfo; 53] = [
    fam(1, "tensor", &["t1", "i1", "t2", "i2"], true),
    fam(2, "twist", &["t", "i"], true),
    fam(3, "toric-A-rotn", &["r", "p", "n", "d"], true),
    fam(4, "toric-A-refl-1", MN, false),
    fam(5, "toric-A-refl-2", MN, false),
    fam(6, "toric-D-sigma", MN, false),
    fam(7, "toric-D-stst", MN, false),
    fam(8, "toric-D-tau-even", MN, false),
    fam(9, "toric-D-tau-odd", MN, false),
    fam(10, "toric-D-sigma-tau-even", MN, false),
    fam(11, "toric-D-sigma-tau-odd", MN, false),
    fam(12, "toric-D4-4", N, false),
    fam(13, "toric-D4-31", N, false),
    fam(14, "toric-E6-21", N, false),
    fam(15, "toric-E6-3", N, false),
    fam(16, "toric-E7", N, false),
    fam(17, "path-A-refl-refl", &["r", "p", "n", "d"], true),
    fam(18, "path-A-refl-refl-coprime", &["r", "p", "n"], false),
    fam(19, "pstwist", &["m", "p"], true),
    fam(20, "path-A-refl-rotn", MN, true),
    fam(21, "path-A3-refl-rotn", N, false),
    fam(22, "path-A-refl-id", MN, false),
    fam(23, "path-D-sigma-sigma", MN, false),
    fam(24, "path-D-sigma-sigma-perp", MN, true),
    fam(25, "path-D-sigma-stst", MN, true),
    fam(26, "path-D-sigma-tau", MN, true),
    fam(27, "path-D-stst-stst", MN, true),
    fam(28, "path-D-stst-tau", MN, true),
    fam(29, "path-D-tau-tau", MN, false),
    fam(30, "path-D4-12-13", N, false),
    fam(31, "path-D4-12-1324", N, false),
    fam(32, "path-D4-1234-1324", N, false),
    fam(33, "path-E6-12-12", N, false),
    fam(34, "path-E6-12-13", N, false),
    fam(35, "path-E7-theta-theta", N, false),
    fam(36, "E8E8", NONE, true),
    fam(37, "A5E6", NONE, true),
    fam(38, "D5E7", NONE, true),
    fam(39, "A3D6", NONE, true),
    fam(40, "A1D4", NONE, true),
    fam(41, "A3A3D5", NONE, false),
    fam(42, "A3D5D5", NONE, false),
    fam(43, "D6D6E7", NONE, true),
    fam(44, "D6E7E7", NONE, true),
    fam(45, "D4D4E6", NONE, true),
    fam(46, "D4E6E6", NONE, true),
    fam(47, "D2nD1", MN, true),
    fam(48, "D1nD2", MN, true),
    fam(49, "E7nE6", N, false),
    fam(50, "E6nE7", N, false),
    fam(51, "E6E6E7E7E7", NONE, true),
    fam(52, "E6E6E6E7E7", NONE, true),
    fam(53, "D2A4n", MN, true),
];

pub fn family_info(id: u8) -> Result<&'static FamilyInfo> {
    FAMILIES.get((id as usize).wrapping_sub(1)).ok_or(CatalogError::UnknownFamily(id))
}

/// A catalog item: family number, integer parameters, and whether the item is
/// the red/blue dual of the listed bigraph (only for families that are not self-dual).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyId {
    pub id: u8,
    pub params: Vec<usize>,
    #[serde(default)]
    pub dual: bool,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        write!(f, "#{}{}({})", self.id, if self.dual { "*" } else { "" }, p.join(","))
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The `q` with `1 ≤ q ≤ r/2` and `pq ≡ ±1 (mod r)`.
pub fn inverse_class(p: usize, r: usize) -> Option<usize> {
    (1..=r / 2).find(|&q| {
        let x = (p * q) % r;
        x == 1 % r || x == r - 1
    })
}

/// `[t, i]` with `t = 1, 2, 3` for `Â_i`, `D̂_i`, `Ê_i`.
pub fn affine_from_code(t: usize, i: usize) -> Option<DynkinType> {
    let ty = match (t, i) {
        (1, i) if i % 2 == 1 => AffA(i),
        (2, i) if i >= 4 => AffD(i),
        (3, 6) => AffE6,
        (3, 7) => AffE7,
        (3, 8) => AffE8,
        _ => return None,
    };
    Some(ty)
}

pub fn affine_code(t: DynkinType) -> Option<[usize; 2]> {
    Some(match t {
        AffA(i) => [1, i],
        AffD(i) => [2, i],
        AffE6 => [3, 6],
        AffE7 => [3, 7],
        AffE8 => [3, 8],
        _ => return None,
    })
}

fn odd(x: usize) -> bool {
    x % 2 == 1
}

fn even(x: usize) -> bool {
    x % 2 == 0
}

impl FamilyId {
    pub fn new(id: u8, params: Vec<usize>) -> Result<FamilyId> {
        let f = FamilyId { id, params, dual: false };
        f.validate()?;
        Ok(f)
    }

    pub fn with_dual(id: u8, params: Vec<usize>, dual: bool) -> Result<FamilyId> {
        let f = FamilyId { id, params, dual };
        f.validate()?;
        Ok(f)
    }

    pub fn info(&self) -> Result<&'static FamilyInfo> {
        family_info(self.id)
    }

    fn bad<T>(&self, msg: &str) -> Result<T> {
        Err(CatalogError::BadParams(self.id, msg.to_string()))
    }

    /// Parameter floors and parity rules of each family.
    pub fn validate(&self) -> Result<()> {
        let info = self.info()?;
        if self.params.len() != info.params.len() {
            return self.bad(&format!("expected parameters ({})", info.params.join(",")));
        }
        if self.dual && info.self_dual {
            return self.bad("self-dual family: use the dual parameters instead of the dual flag");
        }
        let p = &self.params;
        let ok = match self.id {
            1 => affine_from_code(p[0], p[1]).is_some() && affine_from_code(p[2], p[3]).is_some(),
            2 => affine_from_code(p[0], p[1]).is_some(),
            3 => {
                let (r, pp, n, d) = (p[0], p[1], p[2], p[3]);
                let base = r >= 2 && pp >= 1 && 2 * pp <= r && gcd(pp, r) == 1 && n >= 1 && d >= 1;
                let parity = (even(n) && even(d)) || (odd(n) && odd(d) && odd(pp) && even(r));
                let forbidden = (n == 1 && d == 1 && pp == 1 && even(r)) || (n == 2 && d == 2 && pp == 1);
                base && parity && !forbidden
            }
            4 | 6 | 7 | 8 | 10 => p[0] >= 2 && p[1] >= 2 && even(p[1]),
            5 | 9 => p[0] >= 2 && p[1] >= 3 && odd(p[1]),
            11 => p[0] >= 1 && p[1] >= 3 && odd(p[1]),
            12..=16 => p[0] >= 2 && even(p[0]),
            17 => {
                let (r, pp, n, d) = (p[0], p[1], p[2], p[3]);
                let rp = if r == 1 { pp == 0 } else { r >= 2 && pp >= 1 && 2 * pp <= r && gcd(pp, r) == 1 };
                rp && n >= 2 && d >= 2
            }
            18 => {
                let (r, pp, n) = (p[0], p[1], p[2]);
                r >= 2 && pp >= 1 && 2 * pp <= r && gcd(pp, r) == 1 && n >= 2
            }
            19 => p[0] >= 2 && p[1] >= 2 && 2 * p[1] <= p[0] && gcd(p[1], p[0]) == 1,
            20 | 22..=29 | 47 | 48 => p[0] >= 2 && p[1] >= 2,
            21 | 30..=35 | 49 | 50 => p[0] >= 2,
            53 => p[0] >= 1 && p[1] >= 1,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            self.bad(&format!("parameters {:?} violate the family constraints", self.params))
        }
    }

    /// The family and parameters of the dual bigraph.
    pub fn dual_family(&self) -> Result<FamilyId> {
        self.validate()?;
        let info = self.info()?;
        let p = &self.params;
        if !info.self_dual {
            return Ok(FamilyId { id: self.id, params: p.clone(), dual: !self.dual });
        }
        let params = match self.id {
            1 => vec![p[2], p[3], p[0], p[1]],
            3 | 17 => {
                let q = if p[0] == 1 { 0 } else { inverse_class(p[1], p[0]).expect("coprime") };
                vec![p[0], q, p[3], p[2]]
            }
            19 => vec![p[0], inverse_class(p[1], p[0]).expect("coprime")],
            20 | 24..=28 | 47 | 48 | 53 => vec![p[1], p[0]],
            _ => p.clone(),
        };
        Ok(FamilyId { id: self.id, params, dual: false })
    }

    pub fn is_exceptional(&self) -> bool {
        is_exceptional(self.id)
    }

    pub fn build(&self) -> Result<Bigraph> {
        self.validate()?;
        if self.dual {
            if let Some(g) = self.dual_construction()? {
                return Ok(g);
            }
            let base = FamilyId { id: self.id, params: self.params.clone(), dual: false };
            return Ok(base.build()?.dual());
        }
        let p = &self.params;
        let auto = |t: DynkinType, name: &str| -> Result<Vec<usize>> { Ok(named(t, name)?.perm) };
        let toric = |t: DynkinType, name: &str, n: usize| -> Result<Bigraph> { build_toric(t, &auto(t, name)?, n) };
        let path = |t: DynkinType, a: &str, b: &str, n: usize| -> Result<Bigraph> {
            build_path(t, &auto(t, a)?, &auto(t, b)?, n)
        };
        let (m, n) = (p.first().copied().unwrap_or(0), p.get(1).copied().unwrap_or(0));
        match self.id {
            1 => {
                let s = affine_from_code(p[0], p[1]).expect("validated");
                let t = affine_from_code(p[2], p[3]).expect("validated");
                build_tensor(&s.diagram(), &t.diagram())
            }
            2 => build_twist(&affine_from_code(p[0], p[1]).expect("validated").diagram()),
            3 => {
                let (r, pp, n, d) = (p[0], p[1], p[2], p[3]);
                toric(AffA(r * d - 1), &format!("rot_{}", pp * d), n)
            }
            4 => toric(AffA(2 * m - 1), "eta(1)", n),
            5 => toric(AffA(2 * m - 1), "eta(2)", n),
            6 => toric(AffD(m + 2), "sigma", n),
            7 => toric(AffD(m + 2), "stst", n),
            8 => toric(AffD(2 * m + 2), "tau", n),
            9 => toric(AffD(2 * m + 1), "tau", n),
            10 => toric(AffD(2 * m + 2), "st", n),
            11 => toric(AffD(2 * m + 3), "st", n),
            12 => toric(AffD(4), "(1234)", m),
            13 => toric(AffD(4), "(123)", m),
            14 => toric(AffE6, "(12)", m),
            15 => toric(AffE6, "(123)", m),
            16 => toric(AffE7, "theta", m),
            17 => {
                let (r, pp, n, d) = (p[0], p[1], p[2], p[3]);
                path(AffA(2 * r * d - 1), "eta(1)", &format!("eta_{}", pp * d), n)
            }
            18 => path(AffA(2 * p[0] - 1), "eta(1)", &format!("eta_{}", p[1]), p[2]),
            19 => build_pseudo_twist(m, n),
            20 => path(AffA(4 * m - 1), "eta(1)", &format!("rot_{}", 2 * m), n),
            21 => path(AffA(3), "eta(1)", "rot_2", m),
            22 => path(AffA(2 * m - 1), "eta(1)", "id", n),
            23 => path(AffD(m + 2), "sigma", "sigma", n),
            24 => path(AffD(m + 2), "sigma", "sigma_perp", n),
            25 => path(AffD(m + 2), "sigma", "stst", n),
            26 => path(AffD(2 * m + 2), "sigma", "tau", n),
            27 => path(AffD(m + 2), "stst", "stst", n),
            28 => path(AffD(2 * m + 2), "stst", "tau", n),
            29 => path(AffD(2 * m + 2), "tau", "tau", n),
            30 => path(AffD(4), "(12)", "(13)", m),
            31 => path(AffD(4), "(12)", "(13)(24)", m),
            32 => path(AffD(4), "(12)(34)", "(13)(24)", m),
            33 => path(AffE6, "(12)", "(12)", m),
            34 => path(AffE6, "(12)", "(13)", m),
            35 => path(AffE7, "theta", "theta", m),
            47 => fork_chain(AffD(2 * m + 2), AffD(m + 2), BindingKind::DD(m), true, n),
            48 => fork_chain(AffD(m + 2), AffD(2 * m + 2), BindingKind::DD(m), false, n),
            49 => fork_chain(AffE7, AffE6, BindingKind::E7E6, true, m),
            50 => fork_chain(AffE6, AffE7, BindingKind::E7E6, false, m),
            53 => looped_chain(m, n),
            id if is_exceptional(id) => build_exceptional(id),
            id => Err(CatalogError::UnknownFamily(id)),
        }
    }

    /// Independent constructions of duals that are themselves path bigraphs or pseudo-twists.
    fn dual_construction(&self) -> Result<Option<Bigraph>> {
        let p = &self.params;
        let auto = |t: DynkinType, name: &str| -> Result<Vec<usize>> { Ok(named(t, name)?.perm) };
        let g = match self.id {
            4 => {
                let (m, n) = (p[0], p[1]);
                let t = AffA(2 * n - 1);
                let rot = auto(t, &format!("rot_{n}"))?;
                build_path(t, &rot, &rot, m)?
            }
            7 => {
                let (m, n) = (p[0], p[1]);
                let t = AffA(n - 1);
                build_path(t, &auto(t, "id")?, &auto(t, "id")?, m)?
            }
            10 => {
                let (m, n) = (p[0], p[1]);
                let t = AffA(2 * n - 1);
                build_path(t, &auto(t, &format!("rot_{n}"))?, &auto(t, "id")?, m)?
            }
            18 => {
                let (r, pp, n) = (p[0], p[1], p[2]);
                build_pseudo_twist(r * n, inverse_class(pp, r).expect("coprime") * n)?
            }
            22 => {
                let (m, n) = (p[0], p[1]);
                let t = AffD(2 * n + 2);
                build_path(t, &auto(t, "tau")?, &auto(t, "tau_perp")?, m)?
            }
            _ => return Ok(None),
        };
        Ok(Some(g))
    }
}

/// Spine `c_1, c_2, b, c_3, …, c_L` with `b` on `c_2` and `L = n + 1`; every
/// binding is parallel except `c_{L−1} -- c_L`, where `big_first` says whether
/// the pattern's `X` side sits on `c_{L−1}`.
fn fork_chain(body: DynkinType, last: DynkinType, kind: BindingKind, big_first: bool, n: usize) -> Result<Bigraph> {
    let l = n + 1;
    let mut asm = Assembly::new();
    let c: Vec<usize> = (0..l - 1).map(|_| asm.add(body)).collect();
    let b = asm.add(body);
    let end = asm.add(last);
    asm.parallel(c[0], c[1]);
    asm.parallel(b, c[1]);
    for j in 1..l - 2 {
        asm.parallel(c[j], c[j + 1]);
    }
    let p = kind.pattern()?;
    if big_first {
        asm.glue(&p, c[l - 2], end, None, None);
    } else {
        asm.glue(&p, end, c[l - 2], None, None);
    }
    asm.finish()
}

/// `D̂_{2m+3}` bound to a chain of `n` copies of `Â_{4m+1}` ending in a self binding.
fn looped_chain(m: usize, n: usize) -> Result<Bigraph> {
    let a = AffA(4 * m + 1);
    let mut asm = Assembly::new();
    let d = asm.add(AffD(2 * m + 3));
    let chain: Vec<usize> = (0..n).map(|_| asm.add(a)).collect();
    asm.glue(&BindingKind::DA(2 * m + 1).pattern()?, d, chain[0], None, None);
    for w in chain.windows(2) {
        asm.parallel(w[0], w[1]);
    }
    let s = BindingKind::SelfBinding(m).pattern()?;
    asm.glue(&s, chain[n - 1], chain[n - 1], None, None);
    asm.finish()
}
