use num_traits::ToPrimitive;
use zlab_core::quiver::mutate_matrix;
use zlab_core::{Quiver, UGraph};
use zlab_dynamics::{budget_terms, DynamicsError, LaurentPolynomial};

use crate::error::{Result, TwistError};
use crate::reflection::exponent_matrix;

/// `Q × Q`: each arrow `i → j` gives `i′→j′`, `i″→j″`, `j″→i′`, `j′→i″`, with `i′ = i`, `i″ = i + n`.
pub fn twist_quiver(q: &Quiver) -> Quiver {
    let n = q.n();
    let mut arrows = Vec::new();
    for (i, j, m) in q.arrows() {
        arrows.extend([(i, j, m), (i + n, j + n, m), (j + n, i, m), (j, i + n, m)]);
    }
    let color = q.bipartition().map(|c| c.iter().chain(c).copied().collect());
    Quiver::new(2 * n, &arrows, color).expect("twist of a valid quiver is valid")
}

/// Underlying undirected multigraph.
pub fn underlying_graph(q: &Quiver) -> UGraph {
    let mut g = UGraph::new(q.n());
    for (u, v, m) in q.arrows() {
        g.add_edge(u, v, m).expect("quiver arrows are valid edges");
    }
    g
}

fn arrows_of(q: &Quiver) -> Vec<(Vec<(usize, u32)>, Vec<(usize, u32)>)> {
    let mut io = vec![(Vec::new(), Vec::new()); q.n()];
    for (u, v, m) in q.arrows() {
        io[v].0.push((u, m));
        io[u].1.push((v, m));
    }
    io
}

fn product(vals: &[LaurentPolynomial], list: &[(usize, u32)], nvars: usize) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one(nvars);
    for &(u, m) in list {
        acc = &acc * &vals[u].pow(m);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct TauRun {
    /// `Q × Q` after the sequence.
    pub quiver: Quiver,
    /// Values at `i′` (index `i`) and `i″` (index `i + n`) in the variables `x′, x″`.
    pub values: Vec<LaurentPolynomial>,
}

/// Applies `τ_{i_1}, …, τ_{i_p}` to the seed `T_0(i′) = x_i′`, `T_0(i″) = x_i″`.
pub fn tau_evolve_symbolic(q: &Quiver, seq: &[usize]) -> Result<TauRun> {
    let n = q.n();
    let twist = twist_quiver(q);
    let io = arrows_of(&twist);
    let nvars = 2 * n;
    let mut vals: Vec<LaurentPolynomial> = (0..nvars).map(|v| LaurentPolynomial::var(nvars, v)).collect();
    let mut b = twist.exchange_matrix();
    let limit = budget_terms();
    for (step, &i) in seq.iter().enumerate() {
        if i >= n {
            return Err(TwistError::UnknownVertex(i, n));
        }
        let (a, aa) = (i, i + n);
        let mutated = |at: usize, vals: &[LaurentPolynomial]| -> Result<LaurentPolynomial> {
            let num = &product(vals, &io[at].0, nvars) + &product(vals, &io[at].1, nvars);
            num.div_exact(&vals[at]).ok_or(TwistError::Dynamics(DynamicsError::NotLaurent { vertex: at, time: step as i64 + 1 }))
        };
        let new_a = mutated(aa, &vals)?;
        let new_aa = mutated(a, &vals)?;
        vals[a] = new_a;
        vals[aa] = new_aa;
        let used: usize = vals.iter().map(|p| p.term_count()).sum();
        if used > limit {
            return Err(TwistError::Dynamics(DynamicsError::Budget { limit, used }));
        }
        mutate_matrix(&mut b, aa);
        mutate_matrix(&mut b, a);
        b.swap(a, aa);
        for row in b.iter_mut() {
            row.swap(a, aa);
        }
        if b != twist.exchange_matrix() {
            return Err(TwistError::QuiverChanged(step));
        }
    }
    Ok(TauRun { quiver: twist, values: vals })
}

/// `X_i = (∏_{j→i} x_j′ ∏_{i→j} x_j″ + ∏_{j→i} x_j″ ∏_{i→j} x_j′) / (x_i′ x_i″)`.
pub fn x_variables(q: &Quiver) -> Vec<LaurentPolynomial> {
    let n = q.n();
    let nvars = 2 * n;
    let io = arrows_of(q);
    let x: Vec<LaurentPolynomial> = (0..nvars).map(|v| LaurentPolynomial::var(nvars, v)).collect();
    let shift = |list: &[(usize, u32)], by: usize| -> Vec<(usize, u32)> { list.iter().map(|&(u, m)| (u + by, m)).collect() };
    (0..n)
        .map(|i| {
            let (ins, outs) = &io[i];
            let t1 = &product(&x, ins, nvars) * &product(&x, &shift(outs, n), nvars);
            let t2 = &product(&x, &shift(ins, n), nvars) * &product(&x, outs, nvars);
            let mut e = vec![0; nvars];
            e[i] = -1;
            e[i + n] = -1;
            &(&t1 + &t2) * &LaurentPolynomial::monomial(nvars, e, 1)
        })
        .collect()
}

/// Whether the τ-values equal `x_i′ ∏ X_j^{a_ij}` and `x_i″ ∏ X_j^{a_ij}` exactly.
pub fn factorization_check(q: &Quiver, seq: &[usize]) -> Result<bool> {
    let n = q.n();
    let run = tau_evolve_symbolic(q, seq)?;
    let a = exponent_matrix(&underlying_graph(q), seq)?;
    let xs = x_variables(q);
    for i in 0..n {
        let mut f = LaurentPolynomial::one(2 * n);
        for (j, x) in xs.iter().enumerate() {
            let e = a.get(i, j).to_u32().ok_or(TwistError::Overflow)?;
            if e > 0 {
                f = &f * &x.pow(e);
            }
        }
        for (slot, var) in [(i, i), (i + n, i + n)] {
            if run.values[slot] != &LaurentPolynomial::var(2 * n, var) * &f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn coloring(q: &Quiver) -> Result<Vec<u8>> {
    match q.bipartition() {
        Some(c) => Ok(c.to_vec()),
        None => underlying_graph(q).two_coloring().ok_or(TwistError::NotBipartite),
    }
}

/// τ-sequence carrying the seed of `Q × Q` to `T_v(3)` at every color-1 vertex:
/// all color-0 vertices, then all color-1 vertices, each in index order.
pub fn devron_sequence(q: &Quiver) -> Result<Vec<usize>> {
    let c = coloring(q)?;
    let mut seq: Vec<usize> = (0..q.n()).filter(|&v| c[v] == 0).collect();
    seq.extend((0..q.n()).filter(|&v| c[v] == 1));
    Ok(seq)
}

/// `(v, a_vv)` for every color-1 vertex `v`, along [`devron_sequence`].
pub fn devron_exponents(q: &Quiver) -> Result<Vec<(usize, i64)>> {
    let c = coloring(q)?;
    let a = exponent_matrix(&underlying_graph(q), &devron_sequence(q)?)?;
    (0..q.n()).filter(|&v| c[v] == 1).map(|v| Ok((v, a.get(v, v).to_i64().ok_or(TwistError::Overflow)?))).collect()
}

/// Devron property with `t₀ = 2`: `X_v` occurs in `T_v(3)` with exponent exactly 1
/// for every color-1 vertex, so a backward singularity (`X_v = 0`) propagates forward.
pub fn devron_check(q: &Quiver) -> Result<bool> {
    Ok(devron_exponents(q)?.iter().all(|&(_, e)| e == 1))
}
