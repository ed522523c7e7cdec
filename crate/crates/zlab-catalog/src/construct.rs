//! Tensor products, twists, toric, path and pseudo-twist bigraphs.

use std::collections::BTreeSet;

use zlab_core::{Bigraph, UGraph};
use zlab_dynkin::DynkinType::{self, *};

use crate::assemble::Assembly;
use crate::binding::{d_index, BindingKind, Pattern, Side};
use crate::error::{CatalogError, Result};
use crate::group::conjugator;

pub fn build_tensor(s: &UGraph, t: &UGraph) -> Result<Bigraph> {
    Ok(Bigraph::tensor(s, t)?)
}

pub fn build_twist(h: &UGraph) -> Result<Bigraph> {
    Ok(Bigraph::twist(h)?)
}

fn bipartite_affine(t: DynkinType) -> Result<Vec<u8>> {
    match t {
        AffA(l) if l % 2 == 1 => {}
        AffD(_) | AffE6 | AffE7 | AffE8 => {}
        _ => return Err(CatalogError::NotBipartiteAffine(t)),
    }
    t.validate()?;
    Ok(t.colors().expect("bipartite"))
}

fn check_perm(t: DynkinType, p: &[usize]) -> Result<()> {
    if p.len() != t.vertex_count() || !t.diagram().is_automorphism(p) {
        return Err(CatalogError::Toric(format!("not an automorphism of {t}")));
    }
    Ok(())
}

/// `T(Λ̂, η, n)`: copy `i` of vertex `v` is `i·|Λ̂| + v`.
pub fn build_toric(t: DynkinType, eta: &[usize], n: usize) -> Result<Bigraph> {
    let colors = bipartite_affine(t)?;
    check_perm(t, eta)?;
    let preserving = (0..eta.len()).all(|v| colors[v] == colors[eta[v]]);
    let moves_to_neighbor = (0..eta.len()).any(|v| t.diagram().mult(v, eta[v]) > 0);
    let ok = match (preserving, n) {
        (_, 0) => false,
        (false, 1) => !moves_to_neighbor,
        (false, n) => n % 2 == 1,
        (true, n) => n % 2 == 0,
    };
    if !ok {
        return Err(CatalogError::Toric(format!(
            "{} automorphism with n = {n}",
            if preserving { "color-preserving" } else { "color-reversing" }
        )));
    }
    let mut asm = Assembly::new();
    let comps: Vec<usize> = (0..n).map(|_| asm.add(t)).collect();
    for i in 0..n - 1 {
        asm.parallel(comps[i], comps[i + 1]);
    }
    asm.matching(comps[n - 1], comps[0], eta);
    asm.finish()
}

fn end_candidates(t: DynkinType) -> Vec<(BindingKind, Side)> {
    let mut c = Vec::new();
    match t {
        AffA(l) if (l + 1) % 2 == 0 => {
            let m = (l + 1) / 2;
            if m >= 2 {
                c.push((BindingKind::DA(m), Side::Y));
            }
            c.push((BindingKind::AA(m), Side::Y));
            if (l + 1) % 4 == 0 {
                c.push((BindingKind::AA((l + 1) / 4), Side::X));
            }
        }
        AffD(l) => {
            let m = l - 2;
            c.push((BindingKind::DA(m), Side::X));
            c.push((BindingKind::DD(m), Side::Y));
            if m % 2 == 0 && m / 2 >= 2 {
                c.push((BindingKind::DD(m / 2), Side::X));
            }
        }
        AffE6 => c.push((BindingKind::E7E6, Side::Y)),
        AffE7 => c.push((BindingKind::E7E6, Side::X)),
        _ => {}
    }
    c
}

/// The `(2,1)` double binding attached to `(Λ̂, α)`: the pattern, the side
/// carrying `Λ̂`, and the relabeling `g` of that side realizing `α`.
pub fn end_binding(t: DynkinType, alpha: &[usize]) -> Result<(Pattern, Side, Vec<usize>)> {
    check_perm(t, alpha)?;
    let colors = bipartite_affine(t)?;
    let name = || format!("{alpha:?}");
    if (0..alpha.len()).any(|v| alpha[alpha[v]] != v || colors[v] != colors[alpha[v]]) {
        return Err(CatalogError::Inadmissible(t, name()));
    }
    for (kind, side) in end_candidates(t) {
        let p = kind.pattern()?;
        let a0 = p.involution(side);
        if let Some(g) = conjugator(t, &a0, alpha)? {
            return Ok((p, side, g));
        }
    }
    Err(CatalogError::Inadmissible(t, name()))
}

/// The type bound to `(Λ̂, α)` by its `(2,1)` double binding.
pub fn partner_type(t: DynkinType, alpha: &[usize]) -> Result<DynkinType> {
    let (p, side, _) = end_binding(t, alpha)?;
    Ok(if side == Side::X { p.y } else { p.x })
}

fn attach(asm: &mut Assembly, p: &Pattern, side: Side, g: &[usize], chain: usize) -> usize {
    match side {
        Side::X => {
            let partner = asm.add(p.y);
            asm.glue(p, chain, partner, Some(g), None);
            partner
        }
        Side::Y => {
            let partner = asm.add(p.x);
            asm.glue(p, partner, chain, None, Some(g));
            partner
        }
    }
}

/// `P(Λ̂, α, β, n)`: `Λ̂ ⊗ A_{n−1}` with the bindings for `(Λ̂, α)` and `(Λ̂, β)` at its ends.
pub fn build_path(t: DynkinType, alpha: &[usize], beta: &[usize], n: usize) -> Result<Bigraph> {
    if n < 2 {
        return Err(CatalogError::Binding("path bigraphs need n ≥ 2".into()));
    }
    let (pl, sl, gl) = end_binding(t, alpha)?;
    let (pr, sr, gr) = end_binding(t, beta)?;
    let mut asm = Assembly::new();
    let chain: Vec<usize> = (0..n - 1).map(|_| asm.add(t)).collect();
    for w in chain.windows(2) {
        asm.parallel(w[0], w[1]);
    }
    attach(&mut asm, &pl, sl, &gl, chain[0]);
    attach(&mut asm, &pr, sr, &gr, chain[n - 2]);
    asm.finish()
}

/// `D̂_{m+2} ⋈_p D̂_{m+2}`: `X_i` joined to `Y_{i+p}` and `Y_{i−p}`, levels
/// folded at both ends (`X_{−j} = X_j`, `X_{m+j} = X_{m−j}`).
pub fn build_pseudo_twist(m: usize, p: usize) -> Result<Bigraph> {
    if m < 2 || p < 1 || p >= m {
        return Err(CatalogError::Binding(format!("pseudo-twist needs m ≥ 2 and 1 ≤ p ≤ m−1, got m = {m}, p = {p}")));
    }
    let t = AffD(m + 2);
    let level = |k: isize| -> Vec<usize> {
        let i = k.rem_euclid(2 * m as isize) as usize;
        let i = if i > m { 2 * m - i } else { i };
        if i == 0 || i == m {
            vec![d_index(m, i, 0), d_index(m, i, 1)]
        } else {
            vec![d_index(m, i, 0)]
        }
    };
    let mut asm = Assembly::new();
    let x = asm.add(t);
    let y = asm.add(t);
    let mut edges = BTreeSet::new();
    for i in 0..=m as isize {
        for j in [i + p as isize, i - p as isize] {
            for &a in &level(i) {
                for &b in &level(j) {
                    edges.insert((asm.at(x, a), asm.at(y, b)));
                }
            }
        }
    }
    for (u, v) in edges {
        asm.edge(u, v, 1);
    }
    asm.finish()
}
