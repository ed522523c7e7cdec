use serde::{Deserialize, Serialize};

use crate::types::DynkinType::{self, *};
use crate::DynkinError;

/// A named diagram automorphism in canonical vertex order: `v ↦ perm[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    pub name: String,
    pub perm: Vec<usize>,
    pub color_preserving: bool,
}

impl Automorphism {
    pub fn new(ty: DynkinType, name: impl Into<String>, perm: Vec<usize>) -> Automorphism {
        let colors = ty.colors().unwrap_or_else(|| vec![0; perm.len()]);
        let color_preserving = perm.iter().enumerate().all(|(v, &w)| colors[v] == colors[w]);
        Automorphism { name: name.into(), perm, color_preserving }
    }

    pub fn identity(ty: DynkinType) -> Automorphism {
        Automorphism::new(ty, "id", (0..ty.vertex_count()).collect())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Automorphism) -> Vec<usize> {
        other.perm.iter().map(|&v| self.perm[v]).collect()
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (v, &w) in self.perm.iter().enumerate() {
            inv[w] = v;
        }
        inv
    }

    pub fn order(&self) -> usize {
        let mut p = self.perm.clone();
        let mut k = 1;
        while p.iter().enumerate().any(|(v, &w)| v != w) {
            p = p.iter().map(|&v| self.perm[v]).collect();
            k += 1;
        }
        k
    }

    pub fn is_involution(&self) -> bool {
        self.order() <= 2
    }

    /// True if some vertex goes to one of its neighbors.
    pub fn moves_to_neighbor(&self, ty: DynkinType) -> bool {
        let g = ty.diagram();
        self.perm.iter().enumerate().any(|(v, &w)| v != w && g.mult(v, w) > 0)
    }
}

/// Rotation `v ↦ v + k` of `Â_{N-1}`.
pub fn rotation(n: usize, k: usize) -> Vec<usize> {
    (0..n).map(|v| (v + k) % n).collect()
}

/// Reflection `v ↦ j − v` of `Â_{N-1}`.
pub fn reflection(n: usize, j: usize) -> Vec<usize> {
    (0..n).map(|v| (j + n - v % n) % n).collect()
}

fn cycle_name(perm: &[usize], labels: &[usize]) -> String {
    // perm acts on positions 0..k; labels are 1-based names.
    let k = perm.len();
    let mut seen = vec![false; k];
    let mut out = String::new();
    for s in 0..k {
        if seen[s] || perm[s] == s {
            seen[s] = true;
            continue;
        }
        out.push('(');
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            out.push_str(&labels[v].to_string());
            v = perm[v];
        }
        out.push(')');
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Named generators and the elements the constructions refer to.
///
/// `Â_{2m-1}`: `rot_k` (`v ↦ v+k`, i.e. `exp(πik/m)`), `eta_p` (`v ↦ 2p−v`, with
/// `eta_0 = η⁽¹⁾`), `eta(2)` (`v ↦ 1−v`) and `eta_perp` (`v ↦ m−v`).
/// `D̂_{m+2}`: `sigma`, `tau`, `stst`, `st`, `sigma_perp`, `tau_perp`.
/// `D̂_4`: all of S₄ on the leaves `1 = u0+, 2 = u0−, 3 = u2+, 4 = u2−`.
/// `Ê6`: S₃ on the arms. `Ê7`: `theta`. `Ê8`: identity only.
pub fn standard_automorphisms(ty: DynkinType) -> Result<Vec<Automorphism>, DynkinError> {
    let n = ty.vertex_count();
    let id: Vec<usize> = (0..n).collect();
    let mut out = vec![Automorphism::new(ty, "id", id.clone())];
    match ty {
        AffA(l) => {
            let big_n = l + 1;
            for k in 1..big_n {
                out.push(Automorphism::new(ty, format!("rot_{k}"), rotation(big_n, k)));
            }
            if big_n % 2 == 0 && big_n >= 4 {
                let m = big_n / 2;
                for p in 0..m {
                    out.push(Automorphism::new(ty, format!("eta_{p}"), reflection(big_n, 2 * p)));
                }
                out.push(Automorphism::new(ty, "eta(2)", reflection(big_n, 1)));
                out.push(Automorphism::new(ty, "eta_perp", reflection(big_n, m)));
            } else if big_n >= 3 {
                for j in 0..big_n {
                    out.push(Automorphism::new(ty, format!("refl_{j}"), reflection(big_n, j)));
                }
            }
        }
        AffD(4) => {
            let leaves = [0usize, 1, 3, 4];
            for p in permutations(4).into_iter().skip(1) {
                let mut perm = id.clone();
                for (i, &leaf) in leaves.iter().enumerate() {
                    perm[leaf] = leaves[p[i]];
                }
                let name = cycle_name(&p, &[1, 2, 3, 4]);
                out.push(Automorphism::new(ty, name, perm));
            }
            let named = |name: &str, cyc: &str| -> Automorphism {
                let src = out.iter().find(|a| a.name == cyc).unwrap();
                Automorphism::new(ty, name, src.perm.clone())
            };
            let extra = vec![
                named("sigma", "(12)"),
                named("sigma_perp", "(34)"),
                named("tau", "(13)(24)"),
                named("tau_perp", "(14)(23)"),
                named("stst", "(12)(34)"),
            ];
            let st = d_sigma_tau(4);
            out.extend(extra);
            out.push(Automorphism::new(ty, "st", st));
        }
        AffD(l) => {
            let sigma = d_sigma(l);
            let tau = d_tau(l);
            let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&v| a[v]).collect() };
            let st = compose(&sigma, &tau);
            let stst = compose(&st, &st);
            let sigma_perp = compose(&tau, &compose(&sigma, &tau));
            let tau_perp = compose(&sigma, &compose(&tau, &sigma));
            out.push(Automorphism::new(ty, "sigma", sigma));
            out.push(Automorphism::new(ty, "tau", tau));
            out.push(Automorphism::new(ty, "stst", stst));
            out.push(Automorphism::new(ty, "st", st));
            out.push(Automorphism::new(ty, "sigma_perp", sigma_perp));
            out.push(Automorphism::new(ty, "tau_perp", tau_perp));
        }
        AffE6 => {
            // arms as (inner, outer): a1 = (1, 0), a2 = (3, 4), a3 = (5, 6)
            let arms = [(1usize, 0usize), (3, 4), (5, 6)];
            for p in permutations(3).into_iter().skip(1) {
                let mut perm = id.clone();
                for (i, &(inner, outer)) in arms.iter().enumerate() {
                    perm[inner] = arms[p[i]].0;
                    perm[outer] = arms[p[i]].1;
                }
                out.push(Automorphism::new(ty, cycle_name(&p, &[1, 2, 3]), perm));
            }
        }
        AffE7 => {
            out.push(Automorphism::new(ty, "theta", vec![6, 5, 4, 3, 2, 1, 0, 7]));
        }
        AffE8 => {}
        _ => return Err(DynkinError::NotAffine(ty)),
    }
    Ok(out)
}

fn d_sigma(l: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=l).collect();
    p.swap(0, 1);
    p
}

/// Spine reversal: `u_i ↔ u_{m−i}`, `u0± ↔ um±`.
fn d_tau(l: usize) -> Vec<usize> {
    let m = l - 2;
    let mut p = vec![0; l + 1];
    p[0] = m + 1;
    p[1] = m + 2;
    p[m + 1] = 0;
    p[m + 2] = 1;
    for i in 1..m {
        p[i + 1] = m - i + 1;
    }
    p
}

fn d_sigma_tau(l: usize) -> Vec<usize> {
    let s = d_sigma(l);
    d_tau(l).iter().map(|&v| s[v]).collect()
}

/// Looks up a standard automorphism by name (`eta(1)` is an alias of `eta_0`).
pub fn named(ty: DynkinType, name: &str) -> Result<Automorphism, DynkinError> {
    let key = if name == "eta(1)" { "eta_0" } else { name };
    standard_automorphisms(ty)?
        .into_iter()
        .find(|a| a.name == key)
        .map(|mut a| {
            a.name = name.to_string();
            a
        })
        .ok_or_else(|| DynkinError::UnknownAutomorphism(ty, name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_standard_automorphisms_preserve_edges() {
        for ty in [AffA(1), AffA(5), AffA(11), AffD(4), AffD(5), AffD(8), AffE6, AffE7, AffE8] {
            let g = ty.diagram();
            for a in standard_automorphisms(ty).unwrap() {
                assert!(g.is_automorphism(&a.perm), "{ty} {}", a.name);
            }
        }
    }

    #[test]
    fn rotation_parity_decides_color() {
        let ty = AffA(11);
        assert!(!named(ty, "rot_3").unwrap().color_preserving);
        assert!(named(ty, "rot_2").unwrap().color_preserving);
        assert!(named(ty, "eta(1)").unwrap().color_preserving);
        assert!(!named(ty, "eta(2)").unwrap().color_preserving);
    }

    #[test]
    fn sigma_tau_moves_to_neighbor_for_odd_m() {
        let ty = AffD(5);
        assert!(named(ty, "st").unwrap().moves_to_neighbor(ty));
        assert!(named(ty, "tau").unwrap().moves_to_neighbor(ty));
        assert!(!named(AffD(6), "st").unwrap().moves_to_neighbor(AffD(6)));
    }

    #[test]
    fn e8_has_only_identity() {
        assert_eq!(standard_automorphisms(AffE8).unwrap().len(), 1);
    }

    #[test]
    fn d4_has_full_s4() {
        let names: Vec<String> = standard_automorphisms(AffD(4)).unwrap().into_iter().map(|a| a.name).collect();
        assert!(names.contains(&"(1234)".to_string()));
        assert!(names.contains(&"(123)".to_string()));
        assert_eq!(names.iter().filter(|n| n.starts_with('(')).count(), 23);
    }
}
