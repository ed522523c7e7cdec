use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_dynkin::linalg::{from_int, nullspace, primitive};
use zlab_dynkin::{recognize, DynkinType};

use crate::error::{Result, SpectralError};

/// Common dominant eigendata of `A_Γ` and `A_Δ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerronData {
    pub mu_red: f64,
    pub mu_blue: f64,
    /// Positive common eigenvector, smallest entry 1.
    pub eigenvector: Vec<f64>,
}

fn dense(a: &[Vec<i64>]) -> DMatrix<f64> {
    let n = a.len();
    DMatrix::from_fn(n, n, |i, j| a[i][j] as f64)
}

fn rayleigh(a: &DMatrix<f64>, v: &[f64]) -> (f64, f64) {
    let x = nalgebra::DVector::from_column_slice(v);
    let ax = a * &x;
    let mu = x.dot(&ax) / x.dot(&x);
    let res = (ax - &x * mu).amax() / x.amax();
    (mu, res)
}

/// Perron vector of `A_Γ + A_Δ`. For commuting symmetric matrices on a connected
/// vertex set it is an eigenvector of both summands.
pub fn perron(g: &Bigraph) -> Result<PerronData> {
    if g.n() == 0 || !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    if !g.is_recurrent() {
        return Err(SpectralError::NotRecurrent);
    }
    let ar = dense(&g.red().adjacency());
    let ab = dense(&g.blue().adjacency());
    let eig = (&ar + &ab).symmetric_eigen();
    let top = eig.eigenvalues.imax();
    let col = eig.eigenvectors.column(top);
    let sign = if col.sum() < 0.0 { -1.0 } else { 1.0 };
    let mut v: Vec<f64> = col.iter().map(|x| x * sign).collect();
    let min = v.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        return Err(SpectralError::Numerical(min.abs()));
    }
    v.iter_mut().for_each(|x| *x /= min);
    let (mu_red, r1) = rayleigh(&ar, &v);
    let (mu_blue, r2) = rayleigh(&ab, &v);
    let res = r1.max(r2);
    if res > 1e-8 {
        return Err(SpectralError::Numerical(res));
    }
    Ok(PerronData { mu_red, mu_blue, eigenvector: v })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    FiniteFinite,
    AffineFinite,
    AffineAffine,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeVerdict {
    pub regime: Regime,
    pub red_types: Vec<DynkinType>,
    pub blue_types: Vec<DynkinType>,
    /// Additive labeling, present for affine⊗affine bigraphs.
    pub labeling: Option<Vec<u64>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Finite,
    Affine,
    Other,
}

fn side(g: &zlab_core::UGraph) -> Result<(Side, Vec<DynkinType>)> {
    let mut types = Vec::new();
    for comp in g.components() {
        types.push(recognize(&g.induced(&comp))?.ty);
    }
    let fin = types.iter().all(|t| t.is_finite());
    let aff = types.iter().all(|t| t.is_affine());
    let s = if types.contains(&DynkinType::NonADE) {
        Side::Other
    } else if fin {
        Side::Finite
    } else if aff {
        Side::Affine
    } else {
        let names: Vec<String> = types.iter().map(|t| t.to_string()).collect();
        return Err(SpectralError::MixedComponents(names.join(", ")));
    };
    Ok((s, types))
}

/// Exact common kernel of `2I − A_Γ` and `2I − A_Δ`, if spanned by a positive vector.
pub fn exact_additive_labeling(g: &Bigraph) -> Option<Vec<u64>> {
    let n = g.n();
    let ar = g.red().adjacency();
    let ab = g.blue().adjacency();
    let mut rows = Vec::with_capacity(2 * n);
    for a in [&ar, &ab] {
        for i in 0..n {
            rows.push((0..n).map(|j| if i == j { 2 - a[i][j] } else { -a[i][j] }).collect::<Vec<i64>>());
        }
    }
    let ns = nullspace(&from_int(&rows));
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

/// Labeling regime, decided from the ADE types of the red and blue components.
pub fn labeling_regime(g: &Bigraph) -> Result<RegimeVerdict> {
    if g.n() == 0 || !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    if !g.is_recurrent() {
        return Err(SpectralError::NotRecurrent);
    }
    let (rs, red_types) = side(g.red())?;
    let (bs, blue_types) = side(g.blue())?;
    let regime = match (rs, bs) {
        (Side::Finite, Side::Finite) => Regime::FiniteFinite,
        (Side::Affine, Side::Finite) | (Side::Finite, Side::Affine) => Regime::AffineFinite,
        (Side::Affine, Side::Affine) => Regime::AffineAffine,
        _ => Regime::None,
    };
    let labeling = if regime == Regime::AffineAffine {
        Some(exact_additive_labeling(g).ok_or_else(|| SpectralError::MixedComponents("no common additive labeling".into()))?)
    } else {
        None
    };
    Ok(RegimeVerdict { regime, red_types, blue_types, labeling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use zlab_core::UGraph;

    #[test]
    fn square_of_a2() {
        let g = Bigraph::tensor(&UGraph::path(2), &UGraph::path(2)).unwrap();
        let p = perron(&g).unwrap();
        assert!((p.mu_red - 1.0).abs() < 1e-12);
        assert!((p.mu_blue - 1.0).abs() < 1e-12);
        assert_eq!(labeling_regime(&g).unwrap().regime, Regime::FiniteFinite);
    }

    #[test]
    fn non_recurrent_rejected() {
        let g = Bigraph::from_edges(4, &[(0, 1), (2, 3)], &[(1, 2)]).unwrap();
        assert_eq!(perron(&g), Err(SpectralError::NotRecurrent));
    }
}
