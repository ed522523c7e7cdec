use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;

use crate::error::{DynamicsError, Result};

/// All values of one run. `layers[t][v]` is set exactly when `t ≡ ε_v (mod 2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory<V> {
    pub parity: Vec<u8>,
    pub layers: Vec<Vec<Option<V>>>,
}

/// Values at times `t − 1` and `t`: each vertex holds the one whose parity matches.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TState<V> {
    pub time: i64,
    pub parity: Vec<u8>,
    pub values: Vec<V>,
}

impl<V> TState<V> {
    /// Time at which `values[v]` lives.
    pub fn time_of(&self, v: usize) -> i64 {
        if (self.time - self.parity[v] as i64).rem_euclid(2) == 0 {
            self.time
        } else {
            self.time - 1
        }
    }

    pub fn get(&self, v: usize, t: i64) -> Result<&V> {
        if self.time_of(v) == t {
            Ok(&self.values[v])
        } else {
            Err(DynamicsError::Parity { vertex: v, time: t, parity: self.parity[v] })
        }
    }
}

impl<V: Clone> Trajectory<V> {
    pub fn n(&self) -> usize {
        self.parity.len()
    }

    /// Last computed time.
    pub fn last(&self) -> i64 {
        self.layers.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn get(&self, v: usize, t: i64) -> Result<&V> {
        if t < 0 || t > self.last() {
            return Err(DynamicsError::OutOfRange { time: t, last: self.last() });
        }
        self.layers[t as usize][v].as_ref().ok_or(DynamicsError::Parity { vertex: v, time: t, parity: self.parity[v] })
    }

    /// `(v, value)` pairs present at time `t`.
    pub fn layer(&self, t: usize) -> impl Iterator<Item = (usize, &V)> {
        self.layers[t].iter().enumerate().filter_map(|(v, x)| x.as_ref().map(|x| (v, x)))
    }

    /// State at `t ≥ 1`.
    pub fn state(&self, t: i64) -> Result<TState<V>> {
        if t < 1 || t > self.last() {
            return Err(DynamicsError::OutOfRange { time: t, last: self.last() });
        }
        let values = (0..self.n())
            .map(|v| {
                let tv = if (t - self.parity[v] as i64) % 2 == 0 { t } else { t - 1 };
                self.get(v, tv).cloned()
            })
            .collect::<Result<Vec<V>>>()?;
        Ok(TState { time: t, parity: self.parity.clone(), values })
    }

    pub fn last_state(&self) -> Result<TState<V>> {
        self.state(self.last())
    }

    /// `(t, v, value)` rows in time order.
    pub fn records(&self) -> Vec<(i64, usize, V)> {
        let mut out = Vec::new();
        for t in 0..self.len() {
            for (v, x) in self.layer(t) {
                out.push((t as i64, v, x.clone()));
            }
        }
        out
    }

    /// Rebuilds a trajectory from rows; parity is read off the first time each vertex appears.
    pub fn from_records(n: usize, rows: impl IntoIterator<Item = (i64, usize, V)>) -> Result<Self> {
        let mut parity: Vec<Option<u8>> = vec![None; n];
        let mut layers: Vec<Vec<Option<V>>> = Vec::new();
        for (t, v, x) in rows {
            if t < 0 || v >= n {
                return Err(DynamicsError::OutOfRange { time: t, last: layers.len() as i64 - 1 });
            }
            let p = (t % 2) as u8;
            match parity[v] {
                Some(q) if q != p => return Err(DynamicsError::Parity { vertex: v, time: t, parity: q }),
                _ => parity[v] = Some(p),
            }
            while layers.len() <= t as usize {
                layers.push(vec![None; n]);
            }
            layers[t as usize][v] = Some(x);
        }
        let parity = parity.into_iter().map(|p| p.unwrap_or(0)).collect();
        Ok(Trajectory { parity, layers })
    }

    pub fn map<W>(&self, f: impl Fn(&V) -> W) -> Trajectory<W> {
        Trajectory {
            parity: self.parity.clone(),
            layers: self.layers.iter().map(|l| l.iter().map(|x| x.as_ref().map(&f)).collect()).collect(),
        }
    }
}

/// Arithmetic an engine supplies to the shared recurrence.
pub(crate) trait Engine {
    type V: Clone;
    fn one(&self) -> Self::V;
    /// `acc · x^m`.
    fn mul_pow(&self, acc: Self::V, x: &Self::V, m: u32) -> Self::V;
    fn plus(&self, a: Self::V, b: Self::V) -> Self::V;
    fn divide(&mut self, a: Self::V, b: &Self::V, vertex: usize, time: i64) -> Result<Self::V>;
}

/// `T_v(t+1) T_v(t−1) = ∏_red T_u(t)^m + ∏_blue T_w(t)^m`, seeded by `T_v(ε_v) = seeds[v]`.
pub(crate) fn run<E: Engine>(engine: &mut E, g: &Bigraph, seeds: Vec<E::V>, steps: usize) -> Result<Trajectory<E::V>> {
    let n = g.n();
    if seeds.len() != n {
        return Err(DynamicsError::InitLength { expected: n, got: seeds.len() });
    }
    let parity = g.color().to_vec();
    let mut layers: Vec<Vec<Option<E::V>>> = vec![vec![None; n]; steps.max(1) + 1];
    for (v, x) in seeds.into_iter().enumerate() {
        layers[parity[v] as usize][v] = Some(x);
    }
    layers.truncate(steps + 1);
    let red = g.red().adjacency();
    let blue = g.blue().adjacency();
    for t in 2..=steps {
        let (done, rest) = layers.split_at_mut(t);
        let cur = &mut rest[0];
        for v in (0..n).filter(|&v| parity[v] as usize == t % 2) {
            let product = |adj: &Vec<Vec<i64>>| {
                let mut acc = engine.one();
                for u in 0..n {
                    if adj[v][u] > 0 {
                        let x = done[t - 1][u].as_ref().expect("neighbor of opposite parity");
                        acc = engine.mul_pow(acc, x, adj[v][u] as u32);
                    }
                }
                acc
            };
            let num = engine.plus(product(&red), product(&blue));
            let prev = done[t - 2][v].as_ref().expect("same parity two steps back");
            cur[v] = Some(engine.divide(num, prev, v, t as i64)?);
        }
    }
    Ok(Trajectory { parity, layers })
}
