use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use zlab_core::UGraph;

use crate::error::{Result, TwistError};

/// A function `I → Q` in the basis `α_i(j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReflectionVector {
    pub coords: Vec<BigRational>,
}

impl ReflectionVector {
    pub fn zero(n: usize) -> Self {
        ReflectionVector { coords: vec![BigRational::zero(); n] }
    }

    pub fn alpha(n: usize, i: usize) -> Self {
        let mut h = Self::zero(n);
        h.coords[i] = BigRational::from_integer(1.into());
        h
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        ReflectionVector { coords: xs.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|x| !x.is_negative())
    }

    /// Integer coordinates, or `None` if some coordinate is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coords.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn max_abs(&self) -> BigRational {
        self.coords.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

fn check(g: &UGraph, i: usize, h: &ReflectionVector) -> Result<()> {
    if h.n() != g.n() {
        return Err(TwistError::Length(h.n(), g.n()));
    }
    if i >= g.n() {
        return Err(TwistError::UnknownVertex(i, g.n()));
    }
    Ok(())
}

fn reflect_in_place(nbrs: &[(usize, u32)], i: usize, h: &mut ReflectionVector) {
    let mut s = -h.coords[i].clone();
    for &(k, m) in nbrs {
        s += &h.coords[k] * BigRational::from_integer(m.into());
    }
    h.coords[i] = s;
}

/// `s_i`: negates `h(i)` and adds the neighbor sum (with edge multiplicities).
pub fn reflect(g: &UGraph, i: usize, h: &ReflectionVector) -> Result<ReflectionVector> {
    check(g, i, h)?;
    let mut out = h.clone();
    reflect_in_place(&g.neighbors()[i], i, &mut out);
    Ok(out)
}

/// `s_i^(b)`: `s_i`, plus `α_b` when `i = b`.
pub fn reflect_marked(g: &UGraph, b: usize, i: usize, h: &ReflectionVector) -> Result<ReflectionVector> {
    if b >= g.n() {
        return Err(TwistError::UnknownVertex(b, g.n()));
    }
    let mut out = reflect(g, i, h)?;
    if i == b {
        out.coords[b] += BigRational::from_integer(1.into());
    }
    Ok(out)
}

/// `s^(b)_{i_p} ⋯ s^(b)_{i_1}(h)`.
pub fn reflect_sequence(g: &UGraph, b: usize, seq: &[usize], h: &ReflectionVector) -> Result<ReflectionVector> {
    if b >= g.n() {
        return Err(TwistError::UnknownVertex(b, g.n()));
    }
    let nbrs = g.neighbors();
    let mut out = h.clone();
    for &i in seq {
        check(g, i, &out)?;
        reflect_in_place(&nbrs[i], i, &mut out);
        if i == b {
            out.coords[b] += BigRational::from_integer(1.into());
        }
    }
    Ok(out)
}

/// `a_ij`: exponent of `X_j` in the value at `i` after a τ-sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentMatrix {
    pub entries: Vec<Vec<BigInt>>,
}

impl ExponentMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_zero())
    }
}

/// Column `j` is `s^(j)_{i_p} ⋯ s^(j)_{i_1}(0)`.
pub fn exponent_matrix(g: &UGraph, seq: &[usize]) -> Result<ExponentMatrix> {
    let n = g.n();
    let mut entries = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        let col = reflect_sequence(g, j, seq, &ReflectionVector::zero(n))?;
        for (i, x) in col.coords.into_iter().enumerate() {
            entries[i][j] = x.to_integer();
        }
    }
    Ok(ExponentMatrix { entries })
}
