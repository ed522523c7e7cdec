use zlab_core::{Bigraph, UGraph};
use zlab_dynkin::DynkinType;

use crate::binding::Pattern;
use crate::error::Result;

/// Disjoint canonical red components plus accumulated blue edges.
#[derive(Clone, Debug, Default)]
pub struct Assembly {
    types: Vec<DynkinType>,
    offsets: Vec<usize>,
    n: usize,
    blue: Vec<(usize, usize, u32)>,
}

impl Assembly {
    pub fn new() -> Assembly {
        Assembly::default()
    }

    pub fn add(&mut self, t: DynkinType) -> usize {
        self.types.push(t);
        self.offsets.push(self.n);
        self.n += t.vertex_count();
        self.types.len() - 1
    }

    pub fn at(&self, c: usize, k: usize) -> usize {
        self.offsets[c] + k
    }

    pub fn edge(&mut self, u: usize, v: usize, m: u32) {
        self.blue.push((u, v, m));
    }

    /// `(i, k) -- (j, perm[k])` for every canonical vertex `k`.
    pub fn matching(&mut self, i: usize, j: usize, perm: &[usize]) {
        for (k, &l) in perm.iter().enumerate() {
            self.edge(self.at(i, k), self.at(j, l), 1);
        }
    }

    pub fn parallel(&mut self, i: usize, j: usize) {
        let id: Vec<usize> = (0..self.types[i].vertex_count()).collect();
        self.matching(i, j, &id);
    }

    /// Places pattern side `x` on component `cx` (vertex `k` at `gx[k]`) and `y` on `cy`.
    pub fn glue(&mut self, p: &Pattern, cx: usize, cy: usize, gx: Option<&[usize]>, gy: Option<&[usize]>) {
        for &(a, b, m) in &p.edges {
            let a = gx.map_or(a, |g| g[a]);
            let b = gy.map_or(b, |g| g[b]);
            self.edge(self.at(cx, a), self.at(cy, b), m);
        }
    }

    pub fn finish(self) -> Result<Bigraph> {
        let mut red = UGraph::new(self.n);
        for (c, t) in self.types.iter().enumerate() {
            for (u, v, m) in t.diagram().edges() {
                red.add_edge(self.at(c, u), self.at(c, v), m)?;
            }
        }
        let mut blue = UGraph::new(self.n);
        for (u, v, m) in self.blue {
            blue.add_edge(u, v, m)?;
        }
        Ok(Bigraph::from_graphs(red, blue)?)
    }
}
