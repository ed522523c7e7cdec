use std::marker::PhantomData;

use num_traits::{FromPrimitive, Num};
use zlab_core::Bigraph;

use crate::error::Result;
use crate::trajectory::{run, Engine, Trajectory};

struct Tropical<V>(PhantomData<V>);

impl<V: Num + Clone + PartialOrd + FromPrimitive> Engine for Tropical<V> {
    type V = V;

    fn one(&self) -> V {
        V::zero()
    }

    fn mul_pow(&self, acc: V, x: &V, m: u32) -> V {
        acc + x.clone() * V::from_u32(m).expect("small multiplicity")
    }

    fn plus(&self, a: V, b: V) -> V {
        if a >= b {
            a
        } else {
            b
        }
    }

    fn divide(&mut self, a: V, b: &V, _: usize, _: i64) -> Result<V> {
        Ok(a - b.clone())
    }
}

/// `𝔱_v(t+1) = max(Σ_red m·𝔱_u(t), Σ_blue m·𝔱_w(t)) − 𝔱_v(t−1)` with `𝔱_v(ε_v) = λ(v)`.
/// Works over any ordered field, exact rationals and `f64` in particular.
pub fn tropical_evolve<V>(g: &Bigraph, lam: &[V], steps: usize) -> Result<Trajectory<V>>
where
    V: Num + Clone + PartialOrd + FromPrimitive,
{
    run(&mut Tropical(PhantomData), g, lam.to_vec(), steps)
}
