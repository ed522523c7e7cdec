use std::collections::{BTreeMap, VecDeque};

use crate::error::{CoreError, Result};

/// Undirected loop-free multigraph on `0..n`. Edges are keyed by `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl UGraph {
    pub fn new(n: usize) -> Self {
        UGraph { n, edges: BTreeMap::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = UGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = UGraph::new(n);
        if n == 2 {
            g.edges.insert((0, 1), 2);
        } else if n > 2 {
            for v in 0..n {
                g.edges.insert(key(v, (v + 1) % n), 1);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = UGraph::new(n);
        for v in 1..n {
            g.edges.insert((v - 1, v), 1);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = UGraph::new(leaves + 1);
        for v in 1..=leaves {
            g.edges.insert((0, v), 1);
        }
        g
    }

    /// Adds `mult` copies of the edge `{u, v}`.
    pub fn add_edge(&mut self, u: usize, v: usize, mult: u32) -> Result<()> {
        if u >= self.n {
            return Err(CoreError::UnknownVertex(u, self.n));
        }
        if v >= self.n {
            return Err(CoreError::UnknownVertex(v, self.n));
        }
        if u == v {
            return Err(CoreError::Loop(u));
        }
        if mult == 0 {
            return Ok(());
        }
        *self.edges.entry(key(u, v)).or_insert(0) += mult;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.edges.get(&key(u, v)).copied().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.values().sum()
    }

    /// Neighbor lists with multiplicity, sorted by neighbor.
    pub fn neighbors(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (&(u, v), &m) in &self.edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.edges
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for (&(u, v), &m) in &self.edges {
            a[u][v] += m as i64;
            a[v][u] += m as i64;
        }
        a
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// A proper 2-coloring (first vertex of each component gets 0), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.neighbors();
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &(w, _) in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Subgraph induced on `verts`, relabeled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> UGraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = UGraph::new(verts.len());
        for (&(u, v), &m) in &self.edges {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.edges.insert(key(pos[u], pos[v]), m);
            }
        }
        g
    }

    /// Image under the vertex map `perm` (new index of old vertex `v` is `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> UGraph {
        let mut g = UGraph::new(self.n);
        for (&(u, v), &m) in &self.edges {
            g.edges.insert(key(perm[u], perm[v]), m);
        }
        g
    }

    /// True iff `perm` maps the edge multiset onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n && self.relabel(perm) == *self
    }
}
