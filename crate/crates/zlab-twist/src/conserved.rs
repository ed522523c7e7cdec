use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_dynamics::{numeric_evolve_log, TState};
use zlab_dynkin::DynkinType;

use crate::error::{Result, TwistError};

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConservedReport {
    pub dynkin: DynkinType,
    pub m: u64,
    pub g: u64,
    pub additive: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    pub periods: usize,
    /// `+1` or `−1`: the sign of the exponent `±g λ(i)` that fit, `0` if neither did.
    pub sign: i8,
    pub worst_residual: f64,
    pub tol: f64,
    pub passed: bool,
}

fn logaddexp(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// `log X_j` on the state at time `t`: the seed formula with `T` in place of `x`.
fn log_x(state: &TState<f64>, nbrs: &[(usize, u32)], j: usize, n: usize) -> f64 {
    let a: f64 = nbrs.iter().map(|&(k, m)| m as f64 * state.values[k]).sum();
    let b: f64 = nbrs.iter().map(|&(k, m)| m as f64 * state.values[k + n]).sum();
    logaddexp(a, b) - state.values[j] - state.values[j + n]
}

/// Checks `B(t + m) = B(t)` and `A_i(t + 2m) = A_i(t) B^{±g λ(i)}` on the twist `Λ̂ × Λ̂`,
/// from `trials` random seeds drawn log-uniformly from `[e⁻¹, e]`.
///
/// `A_i(t) = T_{i′}(t)² / ∏_{(i,j)} T_{j′}(t−1)` for `t ≡ ε_i`; `B(t) = ∏_j X_j(t)^{λ(j)}` with
/// `X_j(t)` built from the state at times `t−1, t`.
pub fn conserved_check(ty: DynkinType, trials: usize, seed: u64, tol: f64) -> Result<ConservedReport> {
    if !ty.is_affine() {
        return Err(TwistError::NotAffine(ty.to_string()));
    }
    let m = ty.affine_coxeter_number()?;
    let g = ty.coxeter_mckay_ratio()?;
    let lam = ty.additive_function().expect("affine");
    let h = ty.diagram();
    let n = h.n();
    let twist = Bigraph::twist(&h)?;
    let eps = twist.color()[..n].to_vec();
    let nbrs = h.neighbors();
    let periods = 3usize;
    let mi = m as i64;
    let t_end = 1 + periods as i64 * 2 * mi;
    let steps = (t_end + 2 * mi + 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut worst_by_sign = [0.0f64; 2];
    for _ in 0..trials {
        let init: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let tr = numeric_evolve_log(&twist, &init, steps)?;
        let states: Vec<TState<f64>> = (1..=steps as i64).map(|t| tr.state(t)).collect::<std::result::Result<_, _>>()?;
        let state = |t: i64| &states[t as usize - 1];
        let log_b = |t: i64| -> f64 { (0..n).map(|j| lam[j] as f64 * log_x(state(t), &nbrs[j], j, n)).sum() };
        let log_a = |i: usize, t: i64| -> f64 {
            let s = state(t);
            2.0 * s.values[i] - nbrs[i].iter().map(|&(k, mu)| mu as f64 * tr.get(k, t - 1).expect("parity")).sum::<f64>()
        };
        for t in 1..=t_end {
            let b = log_b(t);
            worst = worst.max((log_b(t + mi) - b).abs() / b.abs().max(1.0));
            for i in (0..n).filter(|&i| (t - eps[i] as i64) % 2 == 0) {
                let d = log_a(i, t + 2 * mi) - log_a(i, t);
                let want = (g * lam[i]) as f64 * b;
                for (k, sgn) in [1.0, -1.0].into_iter().enumerate() {
                    worst_by_sign[k] = worst_by_sign[k].max((d - sgn * want).abs() / d.abs().max(1.0));
                }
            }
        }
    }
    let (sign, a_res) = if worst_by_sign[0] <= worst_by_sign[1] { (1i8, worst_by_sign[0]) } else { (-1i8, worst_by_sign[1]) };
    let worst_residual = worst.max(a_res);
    let passed = worst_residual <= tol;
    let report = ConservedReport {
        dynkin: ty,
        m,
        g,
        additive: lam,
        trials,
        seed,
        periods,
        sign: if a_res <= tol { sign } else { 0 },
        worst_residual,
        tol,
        passed,
    };
    if passed {
        Ok(report)
    } else {
        Err(TwistError::Violated(Box::new(report)))
    }
}
