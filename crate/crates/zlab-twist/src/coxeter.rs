use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use zlab_core::UGraph;
use zlab_dynkin::{recognize, DynkinType};

use crate::error::{Result, TwistError};
use crate::reflection::{reflect_sequence, ReflectionVector};

pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterClass {
    FinitePeriodic,
    AffineUnipotent,
    IndefiniteExpanding,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoxeterData {
    /// `C = ω₂ω₁` acting on coordinate vectors, in input vertex order.
    pub matrix: IntMatrix,
    pub class: CoxeterClass,
    pub dynkin: DynkinType,
    /// Least `h` with `Cʰ = I`, or least `m` with `(Cᵐ − I)² = 0`.
    pub period: Option<u64>,
    /// The round `(white vertices, black vertices)` with the first white vertex marked.
    pub round: Vec<usize>,
    /// Number of rounds between consecutive samples.
    pub stride: u64,
    /// Reflection-game values after `k · stride` rounds, `k = 0, 1, …`.
    pub samples: Vec<ReflectionVector>,
    /// Rational bracket `(a, b)`, `1 < a < b`, on which the characteristic polynomial changes sign.
    pub certificate: Option<(BigRational, BigRational)>,
}

impl CoxeterData {
    /// `‖h‖∞` of each sample (samples are integral).
    pub fn norms(&self) -> Vec<BigInt> {
        self.samples.iter().map(|h| h.max_abs().to_integer()).collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

pub fn matpow(a: &IntMatrix, mut k: u64) -> IntMatrix {
    let mut base = a.clone();
    let mut acc = identity(a.len());
    while k > 0 {
        if k & 1 == 1 {
            acc = matmul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = matmul(&base, &base);
        }
    }
    acc
}

fn minus_identity(a: &IntMatrix) -> IntMatrix {
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= 1;
    }
    out
}

/// Matrix of `s_i` on coordinate vectors.
pub fn reflection_matrix(g: &UGraph, i: usize) -> IntMatrix {
    let mut s = identity(g.n());
    s[i][i] = BigInt::from(-1);
    for &(k, m) in &g.neighbors()[i] {
        s[i][k] += m;
    }
    s
}

/// White vertices then black vertices, each in index order; vertex 0 is white.
pub fn round_order(g: &UGraph) -> Result<Vec<usize>> {
    let c = g.two_coloring().ok_or(TwistError::NotBipartite)?;
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| c[v] == 0).collect();
    order.extend((0..g.n()).filter(|&v| c[v] == 1));
    Ok(order)
}

/// `C = ω₂ω₁` with `ω₁` the product of the white reflections and `ω₂` of the black ones.
pub fn coxeter_matrix(g: &UGraph) -> Result<IntMatrix> {
    let mut c = identity(g.n());
    for i in round_order(g)? {
        c = matmul(&reflection_matrix(g, i), &c);
    }
    Ok(c)
}

/// Characteristic polynomial `det(xI − A)`, coefficients from degree 0 upwards.
pub fn characteristic_polynomial(a: &IntMatrix) -> Vec<BigInt> {
    // Faddeev–LeVerrier; every division is exact over Z
    let n = a.len();
    let mut coef = vec![BigInt::zero(); n + 1];
    coef[n] = BigInt::one();
    let mut m = identity(n);
    for k in 1..=n {
        let am = matmul(a, &m);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -tr / BigInt::from(k);
        coef[n - k] = c.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    coef
}

fn eval(coef: &[BigInt], x: &BigRational) -> BigRational {
    coef.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn spectral_radius(g: &UGraph) -> f64 {
    let n = g.n();
    let a = g.adjacency();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j] as f64);
    m.symmetric_eigenvalues().iter().cloned().fold(f64::MIN, f64::max)
}

/// Brackets the largest eigenvalue of `C`, which solves `λ + 1/λ = μ² − 2` for the
/// adjacency spectral radius `μ`, and checks the sign change exactly.
fn expanding_certificate(g: &UGraph, c: &IntMatrix) -> Option<(BigRational, BigRational)> {
    let mu = spectral_radius(g);
    let s = mu * mu - 2.0;
    if s <= 2.0 {
        return None;
    }
    let lam = (s + (s * s - 4.0).sqrt()) / 2.0;
    let coef = characteristic_polynomial(c);
    for eps in [1e-6, 1e-9, 1e-4] {
        let a = BigRational::from_float(lam * (1.0 - eps))?;
        let b = BigRational::from_float(lam * (1.0 + eps))?;
        if a > BigRational::one() && (eval(&coef, &a).signum() * eval(&coef, &b).signum()).is_negative() {
            return Some((a, b));
        }
    }
    None
}

/// Reflection-game values `h_{k·stride·|I|}` for the round starting at the first white vertex.
pub fn coxeter_samples(g: &UGraph, stride: u64, count: usize) -> Result<Vec<ReflectionVector>> {
    let order = round_order(g)?;
    let b = order[0];
    let block: Vec<usize> = (0..stride).flat_map(|_| order.iter().copied()).collect();
    let mut h = ReflectionVector::zero(g.n());
    let mut out = vec![h.clone()];
    for _ in 0..count {
        h = reflect_sequence(g, b, &block, &h)?;
        out.push(h.clone());
    }
    Ok(out)
}

/// Classifies `C` as periodic, unipotent up to a power, or expanding, with exact checks.
pub fn coxeter_analysis(g: &UGraph) -> Result<CoxeterData> {
    coxeter_analysis_with(g, 12)
}

pub fn coxeter_analysis_with(g: &UGraph, count: usize) -> Result<CoxeterData> {
    if g.n() == 0 || !g.is_connected() {
        return Err(TwistError::Disconnected);
    }
    let round = round_order(g)?;
    let c = coxeter_matrix(g)?;
    let n = g.n();
    let dynkin = recognize(g)?.ty;
    let limit = 4 * n as u64 + 32;
    let id = identity(n);
    let (class, period, certificate, stride) = if dynkin.is_finite() {
        let mut p = c.clone();
        let mut h = 1;
        while p != id {
            h += 1;
            if h > limit {
                return Err(TwistError::NoPeriod(limit));
            }
            p = matmul(&p, &c);
        }
        (CoxeterClass::FinitePeriodic, Some(h), None, 1)
    } else if dynkin.is_affine() {
        let mut p = c.clone();
        let mut m = 1;
        loop {
            let d = minus_identity(&p);
            if p != id && matmul(&d, &d).iter().flatten().all(|x| x.is_zero()) {
                break;
            }
            m += 1;
            if m > limit {
                return Err(TwistError::NoPeriod(limit));
            }
            p = matmul(&p, &c);
        }
        (CoxeterClass::AffineUnipotent, Some(m), None, m)
    } else {
        let cert = expanding_certificate(g, &c).ok_or(TwistError::NoCertificate)?;
        (CoxeterClass::IndefiniteExpanding, None, Some(cert), 1)
    };
    let count = if class == CoxeterClass::FinitePeriodic { count.max(2 * period.unwrap_or(1) as usize) } else { count };
    let samples = coxeter_samples(g, stride, count)?;
    Ok(CoxeterData { matrix: c, class, dynkin, period, round, stride, samples, certificate })
}

/// Second differences of an integer sequence.
pub fn second_differences(xs: &[BigInt]) -> Vec<BigInt> {
    xs.windows(3).map(|w| &w[2] - &w[1] * 2 + &w[0]).collect()
}

/// Quadratic growth: the last `tail` second differences agree and are positive.
pub fn is_eventually_quadratic(xs: &[BigInt], tail: usize) -> bool {
    let d = second_differences(xs);
    d.len() >= tail && d[d.len() - tail..].iter().all(|x| x == &d[d.len() - 1]) && d[d.len() - 1].is_positive()
}

/// Exponential growth: over the second half every ratio exceeds `1 + 1e-6`.
pub fn is_eventually_exponential(xs: &[BigInt]) -> bool {
    let half = xs.len() / 2;
    xs.len() >= 4
        && xs[half..].windows(2).all(|w| {
            w[0].is_positive() && BigRational::new(w[1].clone(), w[0].clone()) > BigRational::new(1_000_001.into(), 1_000_000.into())
        })
}
