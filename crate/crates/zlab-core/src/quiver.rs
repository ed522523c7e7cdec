use std::collections::BTreeMap;

use crate::error::{CoreError, Result};

/// Loop-free, 2-cycle-free directed multigraph with an optional bipartition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: BTreeMap<(usize, usize), u32>,
    bipartition: Option<Vec<u8>>,
}

impl Quiver {
    /// Arrows may be listed repeatedly; multiplicities add up.
    pub fn new(n: usize, arrows: &[(usize, usize, u32)], bipartition: Option<Vec<u8>>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(u, v, m) in arrows {
            if u >= n {
                return Err(CoreError::UnknownVertex(u, n));
            }
            if v >= n {
                return Err(CoreError::UnknownVertex(v, n));
            }
            if u == v {
                return Err(CoreError::Loop(u));
            }
            if m == 0 {
                return Err(CoreError::ZeroMultiplicity(u, v));
            }
            *map.entry((u, v)).or_insert(0) += m;
        }
        for &(u, v) in map.keys() {
            if map.contains_key(&(v, u)) {
                return Err(CoreError::TwoCycle(u.min(v), u.max(v)));
            }
        }
        if let Some(c) = &bipartition {
            if c.len() != n {
                return Err(CoreError::ColorLength(c.len(), n));
            }
            for &(u, v) in map.keys() {
                if c[u] == c[v] {
                    return Err(CoreError::SameColor(u, v));
                }
            }
        }
        Ok(Quiver { n, arrows: map, bipartition })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn arrow_count(&self) -> u32 {
        self.arrows.values().sum()
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.arrows.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn bipartition(&self) -> Option<&[u8]> {
        self.bipartition.as_deref()
    }

    /// Same arrows, bipartition replaced (validated).
    pub fn with_bipartition(&self, color: Option<Vec<u8>>) -> Result<Self> {
        let arrows: Vec<_> = self.arrows().collect();
        Quiver::new(self.n, &arrows, color)
    }

    /// Skew-symmetric exchange matrix: `b[u][v] = #(u→v) − #(v→u)`.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let mut b = vec![vec![0i64; self.n]; self.n];
        for (&(u, v), &m) in &self.arrows {
            b[u][v] += m as i64;
            b[v][u] -= m as i64;
        }
        b
    }

    fn from_exchange(b: &[Vec<i64>], bipartition: Option<&[u8]>) -> Quiver {
        let n = b.len();
        let mut arrows = BTreeMap::new();
        for (u, row) in b.iter().enumerate() {
            for (v, &x) in row.iter().enumerate() {
                if x > 0 {
                    arrows.insert((u, v), x as u32);
                }
            }
        }
        let bipartition = bipartition
            .filter(|c| arrows.keys().all(|&(u, v)| c[u] != c[v]))
            .map(|c| c.to_vec());
        Quiver { n, arrows, bipartition }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self.arrows.iter().map(|(&(u, v), &m)| ((v, u), m)).collect(),
            bipartition: self.bipartition.clone(),
        }
    }

    /// Quiver mutation at `v`. The bipartition survives only if still proper.
    pub fn mutate(&self, v: usize) -> Result<Quiver> {
        if v >= self.n {
            return Err(CoreError::UnknownVertex(v, self.n));
        }
        let mut b = self.exchange_matrix();
        mutate_matrix(&mut b, v);
        Ok(Quiver::from_exchange(&b, self.bipartition.as_deref()))
    }

    /// Mutation at every vertex of color `c`.
    pub fn mutate_color(&self, c: u8) -> Result<Quiver> {
        let color = self.bipartition.as_ref().ok_or(CoreError::NotBipartite)?;
        let mut b = self.exchange_matrix();
        for v in 0..self.n {
            if color[v] == c {
                mutate_matrix(&mut b, v);
            }
        }
        Ok(Quiver::from_exchange(&b, Some(color)))
    }
}

/// In-place matrix mutation `b ↦ μ_v(b)`.
pub fn mutate_matrix(b: &mut [Vec<i64>], v: usize) {
    let n = b.len();
    let col: Vec<i64> = (0..n).map(|i| b[i][v]).collect();
    let row: Vec<i64> = b[v].clone();
    for i in 0..n {
        for j in 0..n {
            if i == v || j == v {
                b[i][j] = -b[i][j];
            } else {
                b[i][j] += (col[i].abs() * row[j] + col[i] * row[j].abs()) / 2;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arrow_color_mutation_reverses() {
        let q = Quiver::new(2, &[(0, 1, 1)], Some(vec![0, 1])).unwrap();
        let m = q.mutate_color(0).unwrap();
        assert_eq!(m.arrows().collect::<Vec<_>>(), vec![(1, 0, 1)]);
    }

    #[test]
    fn rejects_two_cycle() {
        assert!(matches!(
            Quiver::new(2, &[(0, 1, 1), (1, 0, 1)], None),
            Err(CoreError::TwoCycle(0, 1))
        ));
    }

    #[test]
    fn isolated_vertex_mutation_is_identity() {
        let q = Quiver::new(3, &[(0, 1, 2)], None).unwrap();
        assert_eq!(q.mutate(2).unwrap(), q);
    }

    #[test]
    fn mutation_cancels_two_cycles() {
        // 0→1→2 plus 2→0: mutating at 1 creates 0→2, which cancels 2→0.
        let q = Quiver::new(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)], None).unwrap();
        let m = q.mutate(1).unwrap();
        assert_eq!(m.arrows().collect::<Vec<_>>(), vec![(1, 0, 1), (2, 1, 1)]);
    }
}
