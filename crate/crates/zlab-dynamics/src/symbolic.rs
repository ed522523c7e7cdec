use num_rational::BigRational;
use zlab_core::Bigraph;

use crate::error::{DynamicsError, Result};
use crate::laurent::LaurentPolynomial;
use crate::trajectory::{run, Engine, Trajectory};
use crate::tropical::tropical_evolve;

pub const DEFAULT_BUDGET_TERMS: usize = 1_000_000;

/// Transient numerators may exceed the stored-term budget by this factor.
pub const TRANSIENT_FACTOR: usize = 16;

/// Budget on the total number of stored terms, overridable through `ZLAB_BUDGET_TERMS`.
pub fn budget_terms() -> usize {
    std::env::var("ZLAB_BUDGET_TERMS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET_TERMS)
}

struct Symbolic {
    nvars: usize,
    used: usize,
    limit: usize,
}

impl Engine for Symbolic {
    type V = LaurentPolynomial;

    fn one(&self) -> LaurentPolynomial {
        LaurentPolynomial::one(self.nvars)
    }

    fn mul_pow(&self, acc: LaurentPolynomial, x: &LaurentPolynomial, m: u32) -> LaurentPolynomial {
        &acc * &x.pow(m)
    }

    fn plus(&self, a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial {
        &a + &b
    }

    fn divide(&mut self, a: LaurentPolynomial, b: &LaurentPolynomial, vertex: usize, time: i64) -> Result<LaurentPolynomial> {
        if a.term_count() > self.limit.saturating_mul(TRANSIENT_FACTOR) {
            return Err(DynamicsError::Budget { limit: self.limit, used: self.used + a.term_count() });
        }
        let q = a.div_exact(b).ok_or(DynamicsError::NotLaurent { vertex, time })?;
        self.used += q.term_count();
        if self.used > self.limit {
            return Err(DynamicsError::Budget { limit: self.limit, used: self.used });
        }
        Ok(q)
    }
}

/// Exact `T_v(t)` for `t ≤ steps` with `T_v(ε_v) = x_v`.
pub fn symbolic_evolve(g: &Bigraph, steps: usize) -> Result<Trajectory<LaurentPolynomial>> {
    symbolic_evolve_with_budget(g, steps, budget_terms())
}

pub fn symbolic_evolve_with_budget(g: &Bigraph, steps: usize, limit: usize) -> Result<Trajectory<LaurentPolynomial>> {
    let n = g.n();
    let seeds = (0..n).map(|v| LaurentPolynomial::var(n, v)).collect();
    let mut engine = Symbolic { nvars: n, used: n, limit };
    run(&mut engine, g, seeds, steps)
}

/// Whether every tropical value equals `deg_max` of `T_v(t)` at `x = q^λ`.
pub fn deg_max_check(g: &Bigraph, lam: &[BigRational], steps: usize) -> Result<bool> {
    let sym = symbolic_evolve(g, steps)?;
    deg_max_agrees(&sym, g, lam)
}

/// Same as [`deg_max_check`] against an already computed symbolic run.
pub fn deg_max_agrees(sym: &Trajectory<LaurentPolynomial>, g: &Bigraph, lam: &[BigRational]) -> Result<bool> {
    let trop = tropical_evolve(g, lam, sym.last().max(0) as usize)?;
    for t in 0..sym.len() {
        for (v, p) in sym.layer(t) {
            if p.deg_max(lam).as_ref() != Some(trop.get(v, t as i64)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
