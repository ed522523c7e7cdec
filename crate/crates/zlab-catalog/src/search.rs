//! Exhaustive search for blue edge sets over a fixed red graph.
//!
//! Blue multiplicities range over `0..=2` on allowed pairs; every vertex must
//! meet `Σ_u B_vu·weight(u) = target(v)`, and `B` must commute with the red
//! adjacency matrix. Commutation is checked incrementally as rows complete.

use zlab_core::{Bigraph, UGraph};
use zlab_dynkin::DynkinType::{self, *};

use crate::enumerate::enumerate_catalog;
use crate::error::Result;
use crate::family::FamilyId;

pub struct BlueSearch {
    pub red: UGraph,
    pub weight: Vec<u64>,
    pub target: Vec<u64>,
    /// `allowed[v]`: partners `u > v` that may carry blue edges.
    pub allowed: Vec<Vec<usize>>,
    pub max_mult: u32,
}

struct State<'a> {
    s: &'a BlueSearch,
    r: Vec<Vec<i64>>,
    b: Vec<Vec<u32>>,
    cur: Vec<u64>,
    /// `room[v][i]`: largest weight still addable to `v` from `allowed[v][i..]`.
    room: Vec<Vec<u64>>,
    out: Vec<UGraph>,
}

impl State<'_> {
    fn commutes_through(&self, v: usize) -> bool {
        let n = self.r.len();
        (0..=v).all(|i| {
            let rb: i64 = (0..n).map(|k| self.r[i][k] * self.b[k][v] as i64).sum();
            let br: i64 = (0..n).map(|k| self.b[i][k] as i64 * self.r[k][v]).sum();
            rb == br
        })
    }

    fn rec(&mut self, v: usize, ci: usize) {
        let n = self.r.len();
        if v == n {
            let mut g = UGraph::new(n);
            for i in 0..n {
                for j in i + 1..n {
                    if self.b[i][j] > 0 {
                        g.add_edge(i, j, self.b[i][j]).expect("valid edge");
                    }
                }
            }
            self.out.push(g);
            return;
        }
        let need = self.s.target[v] - self.cur[v];
        if ci == self.s.allowed[v].len() {
            if need == 0 && self.commutes_through(v) {
                self.rec(v + 1, 0);
            }
            return;
        }
        if self.room[v][ci] < need {
            return;
        }
        let u = self.s.allowed[v][ci];
        let (wu, wv) = (self.s.weight[u], self.s.weight[v]);
        for m in 0..=self.s.max_mult {
            let m64 = m as u64;
            if m64 * wu > need || self.cur[u] + m64 * wv > self.s.target[u] {
                break;
            }
            self.b[v][u] = m;
            self.b[u][v] = m;
            self.cur[v] += m64 * wu;
            self.cur[u] += m64 * wv;
            self.rec(v, ci + 1);
            self.cur[v] -= m64 * wu;
            self.cur[u] -= m64 * wv;
        }
        self.b[v][u] = 0;
        self.b[u][v] = 0;
    }
}

impl BlueSearch {
    /// All blue graphs meeting the constraints.
    pub fn run(&self) -> Vec<UGraph> {
        let n = self.red.n();
        let room = (0..n)
            .map(|v| {
                let mut r = vec![0u64; self.allowed[v].len() + 1];
                for i in (0..self.allowed[v].len()).rev() {
                    r[i] = r[i + 1] + self.max_mult as u64 * self.weight[self.allowed[v][i]];
                }
                r
            })
            .collect();
        let mut st = State {
            s: self,
            r: self.red.adjacency(),
            b: vec![vec![0; n]; n],
            cur: vec![0; n],
            room,
            out: Vec::new(),
        };
        st.rec(0, 0);
        st.out
    }
}

/// Isomorphism classes, keeping the first representative of each.
pub fn dedupe(gs: Vec<Bigraph>) -> Vec<Bigraph> {
    let mut kept: Vec<Bigraph> = Vec::new();
    for g in gs {
        if !kept.iter().any(|h| h.is_isomorphic(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Red graph `X ⊔ Y` (canonical diagrams) with coloring; `flip` swaps the colors on `Y`.
fn two_components(x: DynkinType, y: DynkinType, flip: bool) -> (UGraph, Vec<u8>, Vec<u64>, Vec<u64>) {
    let (nx, ny) = (x.vertex_count(), y.vertex_count());
    let mut red = UGraph::new(nx + ny);
    for (u, v, m) in x.diagram().edges() {
        red.add_edge(u, v, m).expect("edge");
    }
    for (u, v, m) in y.diagram().edges() {
        red.add_edge(nx + u, nx + v, m).expect("edge");
    }
    let mut color = x.colors().expect("bipartite");
    color.extend(y.colors().expect("bipartite").into_iter().map(|c| if flip { 1 - c } else { c }));
    (red, color, x.additive_function().expect("affine"), y.additive_function().expect("affine"))
}

/// All blue edge sets between `X` and `Y` alone with scaling factor `(a, b)`,
/// up to isomorphism.
pub fn binding_search(x: DynkinType, y: DynkinType, a: u64, b: u64) -> Vec<Bigraph> {
    let nx = x.vertex_count();
    let mut found = Vec::new();
    for flip in [false, true] {
        let (red, color, lx, ly) = two_components(x, y, flip);
        let n = red.n();
        let weight: Vec<u64> = lx.iter().chain(ly.iter()).copied().collect();
        let target: Vec<u64> = lx.iter().map(|l| a * l).chain(ly.iter().map(|l| b * l)).collect();
        let allowed = (0..n).map(|v| if v < nx { (nx..n).filter(|&u| color[u] != color[v]).collect() } else { Vec::new() }).collect();
        let s = BlueSearch { red: red.clone(), weight, target, allowed, max_mult: 2 };
        for blue in s.run() {
            if let Ok(g) = Bigraph::from_graphs(red.clone(), blue) {
                found.push(g);
            }
        }
    }
    dedupe(found)
}

/// Bipartite affine types with at most `max` vertices.
pub fn bipartite_affine_types(max: usize) -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (1..max).step_by(2).map(AffA).collect();
    v.extend((4..max).map(AffD));
    v.extend([AffE6, AffE7, AffE8]);
    v.retain(|t| t.vertex_count() <= max);
    v
}

/// Affine⊗affine bigraphs with exactly two red components on `X ⊔ Y`.
pub fn double_bindings_on(x: DynkinType, y: DynkinType) -> Vec<Bigraph> {
    let nx = x.vertex_count();
    let mut found = Vec::new();
    for flip in [false, true] {
        let (red, color, lx, ly) = two_components(x, y, flip);
        let n = red.n();
        let allowed: Vec<Vec<usize>> =
            (0..n).map(|v| (v + 1..n).filter(|&u| color[u] != color[v] && red.mult(u, v) == 0).collect()).collect();
        for p in 1..=4u64 {
            for q in 1..=4u64 {
                if crate::family::gcd(p as usize, q as usize) != 1 {
                    continue;
                }
                let weight: Vec<u64> = lx.iter().map(|l| q * l).chain(ly.iter().map(|l| p * l)).collect();
                let target: Vec<u64> = weight.iter().map(|w| 2 * w).collect();
                let s = BlueSearch { red: red.clone(), weight, target, allowed: allowed.clone(), max_mult: 2 };
                for blue in s.run() {
                    let crosses = blue.edges().any(|(u, v, _)| (u < nx) != (v < nx));
                    if !crosses {
                        continue;
                    }
                    if let Ok(g) = Bigraph::from_graphs(red.clone(), blue) {
                        if g.is_connected() {
                            found.push(g);
                        }
                    }
                }
            }
        }
    }
    dedupe(found)
}

#[derive(Debug)]
pub struct SearchReport {
    pub type_pairs: usize,
    pub found: Vec<Bigraph>,
    /// Catalog instance matching each found bigraph (directly or through its dual).
    pub matches: Vec<Option<FamilyId>>,
}

impl SearchReport {
    pub fn all_matched(&self) -> bool {
        self.matches.iter().all(|m| m.is_some())
    }
}

/// Every affine⊗affine double binding on at most `max_vertices` vertices,
/// each compared with the catalog.
pub fn double_binding_search(max_vertices: usize) -> Result<SearchReport> {
    let types = bipartite_affine_types(max_vertices);
    let catalog = enumerate_catalog(max_vertices)?;
    let mut found = Vec::new();
    let mut type_pairs = 0;
    for (i, &x) in types.iter().enumerate() {
        for &y in &types[i..] {
            if x.vertex_count() + y.vertex_count() > max_vertices {
                continue;
            }
            type_pairs += 1;
            found.extend(double_bindings_on(x, y));
        }
    }
    let found = dedupe(found);
    let matches = found
        .iter()
        .map(|g| {
            let gd = g.dual();
            catalog
                .iter()
                .find(|(_, c)| c.n() == g.n() && (c.is_isomorphic(g) || c.is_isomorphic(&gd)))
                .map(|(f, _)| f.clone())
        })
        .collect();
    Ok(SearchReport { type_pairs, found, matches })
}
