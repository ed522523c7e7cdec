use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_dynkin::{recognize, DynkinType};

use crate::error::{Result, SpectralError};
use crate::gcm::WeakGCM;
use crate::perron::perron;

type Q = Ratio<i64>;

/// Red components (ordered by smallest vertex) with their types and additive functions.
#[derive(Clone, Debug)]
pub struct RedComponents {
    pub comps: Vec<Vec<usize>>,
    pub types: Vec<DynkinType>,
    /// `comp_of[v]` and `label[v]`: component index and additive value of vertex `v`.
    pub comp_of: Vec<usize>,
    pub label: Vec<u64>,
}

pub fn red_components(g: &Bigraph) -> Result<RedComponents> {
    let mut comps = g.red_components();
    comps.sort_by_key(|c| c[0]);
    let mut comp_of = vec![0; g.n()];
    let mut label = vec![0; g.n()];
    let mut types = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let r = recognize(&g.red().induced(c))?;
        let add = r.additive.ok_or(SpectralError::NotAffineComponent(i, r.ty))?;
        for (k, &v) in c.iter().enumerate() {
            comp_of[v] = i;
            label[v] = add[k];
        }
        types.push(r.ty);
    }
    Ok(RedComponents { comps, types, comp_of, label })
}

/// `Σ m·λ(w) / λ(v)` over blue neighbors `w ∈ C_j` of `v`, required constant on `C_i`.
fn ratio(g: &Bigraph, rc: &RedComponents, i: usize, j: usize) -> Result<Q> {
    let nb = g.blue().neighbors();
    let mut val: Option<Q> = None;
    for &v in &rc.comps[i] {
        let s: i64 = nb[v].iter().filter(|(w, _)| rc.comp_of[*w] == j).map(|&(w, m)| m as i64 * rc.label[w] as i64).sum();
        let r = Q::new(s, rc.label[v] as i64);
        match val {
            None => val = Some(r),
            Some(x) if x != r => return Err(SpectralError::InconsistentScf(i, j)),
            _ => {}
        }
    }
    Ok(val.unwrap_or_else(|| Q::from_integer(0)))
}

fn integer(q: Q, i: usize, j: usize) -> Result<i64> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(SpectralError::InconsistentScf(i, j))
    }
}

/// `A(G)` indexed by red components in order of their smallest vertex.
pub fn cartan_of(g: &Bigraph) -> Result<WeakGCM> {
    let rc = red_components(g)?;
    cartan_with(g, &rc)
}

pub fn cartan_with(g: &Bigraph, rc: &RedComponents) -> Result<WeakGCM> {
    let k = rc.comps.len();
    let mut a = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let r = integer(ratio(g, rc, i, j)?, i, j)?;
            a[i][j] = if i == j { 2 - r } else { -r };
        }
    }
    WeakGCM::new(a)
}

/// Scaling factor of a bigraph with exactly two red components `X` (holding the
/// smallest vertex) and `Y`; blue edges inside a component are ignored.
pub fn scaling_factor(g: &Bigraph) -> Result<(u64, u64)> {
    let rc = red_components(g)?;
    if rc.comps.len() != 2 {
        return Err(SpectralError::NotDoubleBinding(rc.comps.len()));
    }
    let p = integer(ratio(g, &rc, 0, 1)?, 0, 1)?;
    let q = integer(ratio(g, &rc, 1, 0)?, 1, 0)?;
    if p <= 0 || q <= 0 {
        return Err(SpectralError::InconsistentScf(0, 1));
    }
    Ok((p as u64, q as u64))
}

/// One pair of red components joined by blue edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleBinding {
    pub x: usize,
    pub y: usize,
    pub x_type: DynkinType,
    pub y_type: DynkinType,
    pub scf: (u64, u64),
}

impl DoubleBinding {
    /// `a·h⁽²⁾(X) = b·h⁽²⁾(Y)`.
    pub fn double_count_holds(&self) -> Result<bool> {
        Ok(self.scf.0 * self.x_type.mckay_number()? == self.scf.1 * self.y_type.mckay_number()?)
    }
}

pub fn double_bindings(g: &Bigraph) -> Result<Vec<DoubleBinding>> {
    let rc = red_components(g)?;
    let a = cartan_with(g, &rc)?;
    let k = rc.comps.len();
    let mut out = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            if a.get(x, y) != 0 {
                out.push(DoubleBinding {
                    x,
                    y,
                    x_type: rc.types[x],
                    y_type: rc.types[y],
                    scf: ((-a.get(x, y)) as u64, (-a.get(y, x)) as u64),
                });
            }
        }
    }
    Ok(out)
}

/// `δ_i = v(v) / v_{C_i}(v)`, normalized so the smallest entry is 1.
pub fn delta_vector(g: &Bigraph) -> Result<Vec<f64>> {
    let rc = red_components(g)?;
    let p = perron(g)?;
    let mut delta = Vec::with_capacity(rc.comps.len());
    for (i, c) in rc.comps.iter().enumerate() {
        let rs: Vec<f64> = c.iter().map(|&v| p.eigenvector[v] / rc.label[v] as f64).collect();
        let (lo, hi) = rs.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
        if hi - lo > 1e-8 * hi {
            return Err(SpectralError::InconsistentScf(i, i));
        }
        delta.push(rs[0]);
    }
    let min = delta.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(delta.into_iter().map(|d| d / min).collect())
}
