use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::graph::UGraph;
use crate::iso::{find_isomorphism, Colored};
use crate::quiver::Quiver;

/// A pair of edge-disjoint graphs Γ (red) and Δ (blue) on a 2-colored vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bigraph {
    color: Vec<u8>,
    red: UGraph,
    blue: UGraph,
}

#[derive(Serialize, Deserialize)]
struct BigraphJson {
    n: usize,
    color: Vec<u8>,
    red: Vec<[usize; 3]>,
    blue: Vec<[usize; 3]>,
}

impl Bigraph {
    pub fn new(color: Vec<u8>, red: UGraph, blue: UGraph) -> Result<Self> {
        let n = color.len();
        if red.n() != n {
            return Err(CoreError::ColorLength(n, red.n()));
        }
        if blue.n() != n {
            return Err(CoreError::ColorLength(n, blue.n()));
        }
        for (u, v, _) in red.edges().chain(blue.edges()) {
            if color[u] == color[v] {
                return Err(CoreError::SameColor(u, v));
            }
        }
        for (u, v, _) in red.edges() {
            if blue.mult(u, v) > 0 {
                return Err(CoreError::SharedEdge(u, v));
            }
        }
        if let Some(&c) = color.iter().find(|&&c| c > 1) {
            return Err(CoreError::Json(format!("color value {c} is not 0 or 1")));
        }
        Ok(Bigraph { color, red, blue })
    }

    /// Colors are derived by 2-coloring Γ ∪ Δ (first vertex of each component white).
    pub fn from_graphs(red: UGraph, blue: UGraph) -> Result<Self> {
        let n = red.n();
        let mut union = red.clone();
        for (u, v, m) in blue.edges() {
            union.add_edge(u, v, m)?;
        }
        let color = union.two_coloring().ok_or(CoreError::NotBipartite)?;
        if blue.n() != n {
            return Err(CoreError::ColorLength(blue.n(), n));
        }
        Bigraph::new(color, red, blue)
    }

    pub fn from_edges(n: usize, red: &[(usize, usize)], blue: &[(usize, usize)]) -> Result<Self> {
        Bigraph::from_graphs(UGraph::from_edges(n, red)?, UGraph::from_edges(n, blue)?)
    }

    pub fn n(&self) -> usize {
        self.color.len()
    }

    pub fn color(&self) -> &[u8] {
        &self.color
    }

    pub fn red(&self) -> &UGraph {
        &self.red
    }

    pub fn blue(&self) -> &UGraph {
        &self.blue
    }

    /// Red/blue swap with colors kept.
    pub fn dual(&self) -> Bigraph {
        Bigraph { color: self.color.clone(), red: self.blue.clone(), blue: self.red.clone() }
    }

    pub fn swap_colors(&self) -> Bigraph {
        Bigraph { color: self.color.iter().map(|c| 1 - c).collect(), red: self.red.clone(), blue: self.blue.clone() }
    }

    /// Components of Γ ∪ Δ.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut union = self.red.clone();
        for (u, v, m) in self.blue.edges() {
            union.add_edge(u, v, m).expect("same vertex set");
        }
        union.components()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn red_components(&self) -> Vec<Vec<usize>> {
        self.red.components()
    }

    pub fn blue_components(&self) -> Vec<Vec<usize>> {
        self.blue.components()
    }

    /// True iff A_Γ A_Δ = A_Δ A_Γ.
    pub fn is_recurrent(&self) -> bool {
        let n = self.n();
        let r = self.red.neighbors();
        let b = self.blue.neighbors();
        let mut rb = vec![0i64; n];
        let mut br = vec![0i64; n];
        for u in 0..n {
            rb.iter_mut().for_each(|x| *x = 0);
            br.iter_mut().for_each(|x| *x = 0);
            for &(w, m) in &r[u] {
                for &(x, k) in &b[w] {
                    rb[x] += (m * k) as i64;
                }
            }
            for &(w, m) in &b[u] {
                for &(x, k) in &r[w] {
                    br[x] += (m * k) as i64;
                }
            }
            if rb != br {
                return false;
            }
        }
        true
    }

    /// Arrows white→black from Γ and black→white from Δ.
    pub fn to_quiver(&self) -> Quiver {
        let mut arrows = Vec::new();
        for (u, v, m) in self.red.edges() {
            let (w, k) = if self.color[u] == 0 { (u, v) } else { (v, u) };
            arrows.push((w, k, m));
        }
        for (u, v, m) in self.blue.edges() {
            let (k, w) = if self.color[u] == 0 { (u, v) } else { (v, u) };
            arrows.push((w, k, m));
        }
        Quiver::new(self.n(), &arrows, Some(self.color.clone())).expect("bigraph invariants give a valid quiver")
    }

    pub fn from_quiver(q: &Quiver) -> Result<Bigraph> {
        let color = q.bipartition().ok_or(CoreError::NotBipartite)?.to_vec();
        let mut red = UGraph::new(q.n());
        let mut blue = UGraph::new(q.n());
        for (u, v, m) in q.arrows() {
            if color[u] == 0 {
                red.add_edge(u, v, m)?;
            } else {
                blue.add_edge(u, v, m)?;
            }
        }
        Bigraph::new(color, red, blue)
    }

    /// Subbigraph induced on `verts`, relabeled in the given order.
    pub fn induced(&self, verts: &[usize]) -> Bigraph {
        Bigraph {
            color: verts.iter().map(|&v| self.color[v]).collect(),
            red: self.red.induced(verts),
            blue: self.blue.induced(verts),
        }
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Bigraph {
        let mut color = vec![0u8; self.n()];
        for (v, &p) in perm.iter().enumerate() {
            color[p] = self.color[v];
        }
        Bigraph { color, red: self.red.relabel(perm), blue: self.blue.relabel(perm) }
    }

    fn colored(&self) -> Colored {
        let n = self.n();
        let mut adj: Vec<Vec<(usize, [u32; 2])>> = vec![Vec::new(); n];
        for (u, v, m) in self.red.edges() {
            adj[u].push((v, [m, 0]));
            adj[v].push((u, [m, 0]));
        }
        for (u, v, m) in self.blue.edges() {
            adj[u].push((v, [0, m]));
            adj[v].push((u, [0, m]));
        }
        Colored { init: self.color.iter().map(|&c| c as u64).collect(), adj }
    }

    /// A vertex bijection onto `other` preserving red and blue multiplicities.
    /// Colors are matched as given or globally exchanged.
    pub fn isomorphism(&self, other: &Bigraph) -> Option<Vec<usize>> {
        if self.n() != other.n()
            || self.red.edge_count() != other.red.edge_count()
            || self.blue.edge_count() != other.blue.edge_count()
        {
            return None;
        }
        let a = self.colored();
        find_isomorphism(&a, &other.colored()).or_else(|| find_isomorphism(&a, &other.swap_colors().colored()))
    }

    pub fn is_isomorphic(&self, other: &Bigraph) -> bool {
        self.isomorphism(other).is_some()
    }

    fn json_struct(&self) -> BigraphJson {
        let edges = |g: &UGraph| g.edges().map(|(u, v, m)| [u, v, m as usize]).collect::<Vec<_>>();
        BigraphJson { n: self.n(), color: self.color.clone(), red: edges(&self.red), blue: edges(&self.blue) }
    }

    /// Compact JSON with keys in the order `n, color, red, blue`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_struct()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json_struct()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Bigraph> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| CoreError::Json(e.to_string()))?;
        Bigraph::from_json_value(&v)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Bigraph> {
        let j: BigraphJson = serde_json::from_value(v.clone()).map_err(|e| CoreError::Json(e.to_string()))?;
        if j.color.len() != j.n {
            return Err(CoreError::ColorLength(j.color.len(), j.n));
        }
        let build = |list: &[[usize; 3]]| -> Result<UGraph> {
            let mut g = UGraph::new(j.n);
            for &[u, v, m] in list {
                if m == 0 {
                    return Err(CoreError::ZeroMultiplicity(u, v));
                }
                g.add_edge(u, v, m as u32)?;
            }
            Ok(g)
        };
        Bigraph::new(j.color.clone(), build(&j.red)?, build(&j.blue)?)
    }

    /// Tensor product `s ⊗ t`: vertex `(a, b)` is `a * t.n() + b`.
    pub fn tensor(s: &UGraph, t: &UGraph) -> Result<Bigraph> {
        let cs = s.two_coloring().ok_or(CoreError::NotBipartite)?;
        let ct = t.two_coloring().ok_or(CoreError::NotBipartite)?;
        let (ns, nt) = (s.n(), t.n());
        let idx = |a: usize, b: usize| a * nt + b;
        let mut red = UGraph::new(ns * nt);
        let mut blue = UGraph::new(ns * nt);
        for b in 0..nt {
            for (u, v, m) in s.edges() {
                red.add_edge(idx(u, b), idx(v, b), m)?;
            }
        }
        for a in 0..ns {
            for (u, v, m) in t.edges() {
                blue.add_edge(idx(a, u), idx(a, v), m)?;
            }
        }
        let color = (0..ns * nt).map(|i| cs[i / nt] ^ ct[i % nt]).collect();
        Bigraph::new(color, red, blue)
    }

    /// Twist `h × h`: `v′ = v`, `v″ = v + n`.
    pub fn twist(h: &UGraph) -> Result<Bigraph> {
        let c = h.two_coloring().ok_or(CoreError::NotBipartite)?;
        let n = h.n();
        let mut red = UGraph::new(2 * n);
        let mut blue = UGraph::new(2 * n);
        for (u, v, m) in h.edges() {
            red.add_edge(u, v, m)?;
            red.add_edge(u + n, v + n, m)?;
            blue.add_edge(u, v + n, m)?;
            blue.add_edge(u + n, v, m)?;
        }
        let color = c.iter().chain(c.iter()).copied().collect();
        Bigraph::new(color, red, blue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_with_one_blue_edge_not_recurrent() {
        let g = Bigraph::from_edges(4, &[(0, 1), (2, 3)], &[(1, 2)]).unwrap();
        assert!(!g.is_recurrent());
    }

    #[test]
    fn shared_edge_rejected() {
        assert_eq!(Bigraph::from_edges(2, &[(0, 1)], &[(0, 1)]), Err(CoreError::SharedEdge(0, 1)));
    }

    #[test]
    fn twist_coloring_is_proper() {
        let g = Bigraph::twist(&UGraph::path(3)).unwrap();
        assert_eq!(g.color(), &[0, 1, 0, 0, 1, 0]);
        assert!(g.is_recurrent());
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let g = Bigraph::tensor(&UGraph::cycle(4), &UGraph::cycle(2)).unwrap();
        let s = g.to_json();
        assert!(s.starts_with("{\"n\":8,"));
        assert_eq!(Bigraph::from_json(&s).unwrap(), g);
    }
}
