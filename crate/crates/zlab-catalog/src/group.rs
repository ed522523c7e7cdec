use std::collections::BTreeSet;

use zlab_dynkin::{standard_automorphisms, DynkinType};

use crate::error::Result;

/// The group generated by the named automorphisms of `t`.
pub fn automorphism_group(t: DynkinType) -> Result<Vec<Vec<usize>>> {
    let gens: Vec<Vec<usize>> = standard_automorphisms(t)?.into_iter().map(|a| a.perm).collect();
    let mut seen: BTreeSet<Vec<usize>> = gens.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = seen.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q: Vec<usize> = g.iter().map(|&v| p[v]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Some `g` with `g ∘ a0 = a ∘ g`, i.e. `g a0 g⁻¹ = a`.
pub fn conjugator(t: DynkinType, a0: &[usize], a: &[usize]) -> Result<Option<Vec<usize>>> {
    Ok(automorphism_group(t)?.into_iter().find(|g| (0..g.len()).all(|v| g[a0[v]] == a[g[v]])))
}

pub fn is_conjugate(t: DynkinType, a: &[usize], b: &[usize]) -> Result<bool> {
    Ok(conjugator(t, a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use zlab_dynkin::DynkinType::*;

    #[test]
    fn group_orders() {
        assert_eq!(automorphism_group(AffA(7)).unwrap().len(), 16);
        assert_eq!(automorphism_group(AffD(4)).unwrap().len(), 24);
        assert_eq!(automorphism_group(AffD(7)).unwrap().len(), 8);
        assert_eq!(automorphism_group(AffE6).unwrap().len(), 6);
        assert_eq!(automorphism_group(AffE7).unwrap().len(), 2);
        assert_eq!(automorphism_group(AffE8).unwrap().len(), 1);
    }
}
