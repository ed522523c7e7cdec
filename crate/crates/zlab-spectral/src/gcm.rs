use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use zlab_dynkin::linalg::{from_int, inverse, mat_vec, nullspace, primitive};

use crate::error::{Result, SpectralError};
use crate::naming::{canonical_labels, identify, Template};

/// Square integer matrix with `a_ii ≤ 2`, `a_ij ≤ 0` off the diagonal and
/// `a_ij = 0 ⟺ a_ji = 0`. Serializes as the dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct WeakGCM(Vec<Vec<i64>>);

impl TryFrom<Vec<Vec<i64>>> for WeakGCM {
    type Error = SpectralError;
    fn try_from(a: Vec<Vec<i64>>) -> Result<Self> {
        WeakGCM::new(a)
    }
}

impl From<WeakGCM> for Vec<Vec<i64>> {
    fn from(a: WeakGCM) -> Self {
        a.0
    }
}

impl WeakGCM {
    pub fn new(a: Vec<Vec<i64>>) -> Result<WeakGCM> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(SpectralError::NotSquare);
        }
        for i in 0..n {
            if a[i][i] > 2 {
                return Err(SpectralError::Axiom(i, i, "diagonal entry exceeds 2"));
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return Err(SpectralError::Axiom(i, j, "positive off-diagonal entry"));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(SpectralError::Axiom(i, j, "asymmetric zero pattern"));
                }
            }
        }
        Ok(WeakGCM(a))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    /// True if the graph `i ~ j ⟺ a_ij ≠ 0` is connected.
    pub fn is_indecomposable(&self) -> bool {
        let n = self.size();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.0[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Trichotomy {
    Fin,
    Aff,
    Ind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacClass {
    #[serde(rename = "type")]
    pub class: Trichotomy,
    pub name: Option<String>,
    pub delta: Option<Vec<u64>>,
}

/// Kac class with the structural template and the node map (template node `i` is index `map[i]`).
#[derive(Clone, Debug)]
pub struct Classified {
    pub class: KacClass,
    pub template: Option<Template>,
    pub map: Option<Vec<usize>>,
}

fn positive_kernel(a: &WeakGCM) -> Option<Vec<u64>> {
    let ns = nullspace(&from_int(a.entries()));
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

fn finite_test(a: &WeakGCM) -> bool {
    let m = from_int(a.entries());
    match inverse(&m) {
        Some(inv) => {
            let one = vec![BigRational::from_integer(1.into()); a.size()];
            mat_vec(&inv, &one).iter().all(|x| x > &BigRational::zero())
        }
        None => false,
    }
}

/// Fin / Aff / Ind with the diagram name and, for Aff, the coprime positive kernel vector.
///
/// A kernel of dimension two or more cannot carry the affine verdict and is reported as Ind.
pub fn classify(a: &WeakGCM) -> Result<Classified> {
    if !a.is_indecomposable() {
        return Err(SpectralError::Decomposable);
    }
    if let Some(delta) = positive_kernel(a) {
        let (t, map) = identify(a.entries(), true).ok_or(SpectralError::Unnamed("affine"))?;
        return Ok(Classified {
            class: KacClass { class: Trichotomy::Aff, name: Some(t.name.clone()), delta: Some(delta) },
            template: Some(t),
            map: Some(map),
        });
    }
    if finite_test(a) {
        let (t, map) = identify(a.entries(), false).ok_or(SpectralError::Unnamed("finite"))?;
        return Ok(Classified {
            class: KacClass { class: Trichotomy::Fin, name: Some(t.name.clone()), delta: None },
            template: Some(t),
            map: Some(map),
        });
    }
    Ok(Classified { class: KacClass { class: Trichotomy::Ind, name: None, delta: None }, template: None, map: None })
}

pub fn kac_type(a: &WeakGCM) -> Result<KacClass> {
    classify(a).map(|c| c.class)
}

/// `NAME[l_1, ..., l_k]` with node labels in template order, minimized over diagram symmetries.
pub fn describe(a: &WeakGCM, labels: &[String]) -> Result<String> {
    let c = classify(a)?;
    match (c.template, c.map) {
        (Some(t), Some(map)) => {
            let ordered: Vec<String> = map.iter().map(|&i| labels[i].clone()).collect();
            let canon = canonical_labels(&t, &ordered);
            Ok(format!("{}[{}]", t.name, canon.join(", ")))
        }
        _ => Err(SpectralError::Unnamed("indefinite")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let k = kac_type(&WeakGCM::new(vec![vec![2]]).unwrap()).unwrap();
        assert_eq!(k.class, Trichotomy::Fin);
        assert_eq!(k.name.as_deref(), Some("A_1"));
        let k = kac_type(&WeakGCM::new(vec![vec![0]]).unwrap()).unwrap();
        assert_eq!(k.class, Trichotomy::Aff);
        assert_eq!(k.name.as_deref(), Some("A_0^(1)"));
        assert_eq!(k.delta, Some(vec![1]));
    }

    #[test]
    fn axioms() {
        assert!(WeakGCM::new(vec![vec![3]]).is_err());
        assert!(WeakGCM::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(WeakGCM::new(vec![vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn json_shape() {
        let k = kac_type(&WeakGCM::new(vec![vec![2, -2], vec![-2, 2]]).unwrap()).unwrap();
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"type":"Aff","name":"A_1^(1)","delta":[1,1]}"#);
    }
}
