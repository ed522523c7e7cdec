use zlab_core::Bigraph;

use crate::error::{DynamicsError, Result};
use crate::trajectory::{run, Engine, Trajectory};

struct LogSpace;

fn logaddexp(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    if m == f64::INFINITY {
        return m;
    }
    m + ((a - m).exp() + (b - m).exp()).ln()
}

impl Engine for LogSpace {
    type V = f64;

    fn one(&self) -> f64 {
        0.0
    }

    fn mul_pow(&self, acc: f64, x: &f64, m: u32) -> f64 {
        acc + m as f64 * x
    }

    fn plus(&self, a: f64, b: f64) -> f64 {
        logaddexp(a, b)
    }

    fn divide(&mut self, a: f64, b: &f64, vertex: usize, time: i64) -> Result<f64> {
        let r = a - b;
        if r.is_finite() {
            Ok(r)
        } else {
            Err(DynamicsError::NonFinite { vertex, time })
        }
    }
}

/// `log T_v(t)` for positive real initial values `T_v(ε_v) = init[v]`.
pub fn numeric_evolve(g: &Bigraph, init: &[f64], steps: usize) -> Result<Trajectory<f64>> {
    if init.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
        return Err(DynamicsError::NonPositiveInit);
    }
    numeric_evolve_log(g, &init.iter().map(|x| x.ln()).collect::<Vec<_>>(), steps)
}

/// As [`numeric_evolve`], seeded directly with logarithms.
pub fn numeric_evolve_log(g: &Bigraph, log_init: &[f64], steps: usize) -> Result<Trajectory<f64>> {
    run(&mut LogSpace, g, log_init.to_vec(), steps)
}
