//! Isomorphism search by joint color refinement plus individualization.
//!
//! Both graphs are refined together as one disjoint union, so color ids mean
//! the same thing on both sides and any imbalance prunes the branch.

use std::collections::BTreeMap;

/// Edge label: multiplicities per edge kind (red, blue).
pub type EdgeLabel = [u32; 2];

/// Vertex-colored graph with labeled undirected edges.
#[derive(Clone, Debug)]
pub struct Colored {
    pub init: Vec<u64>,
    pub adj: Vec<Vec<(usize, EdgeLabel)>>,
}

impl Colored {
    pub fn n(&self) -> usize {
        self.init.len()
    }
}

struct Joint {
    n: usize,
    adj: Vec<Vec<(usize, EdgeLabel)>>,
}

type Signature = (u32, Vec<(u32, EdgeLabel)>);

fn refine(joint: &Joint, colors: &mut Vec<u32>) {
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<Signature> = (0..joint.adj.len())
            .map(|v| {
                let mut s: Vec<(u32, EdgeLabel)> = joint.adj[v].iter().map(|&(w, l)| (colors[w], l)).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut uniq: Vec<&Signature> = sigs.iter().collect();
        uniq.sort_unstable();
        uniq.dedup();
        let ids: BTreeMap<&Signature, u32> = uniq.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
        let k = uniq.len();
        *colors = next;
        if k == classes {
            return;
        }
        classes = k;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Per-color (count in a, count in b, first vertices); None if some class is unbalanced.
fn cells(joint: &Joint, colors: &[u32]) -> Option<BTreeMap<u32, (Vec<usize>, Vec<usize>)>> {
    let mut cells: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        let e = cells.entry(c).or_default();
        if v < joint.n {
            e.0.push(v);
        } else {
            e.1.push(v);
        }
    }
    if cells.values().all(|(a, b)| a.len() == b.len()) {
        Some(cells)
    } else {
        None
    }
}

fn search(joint: &Joint, mut colors: Vec<u32>) -> Option<Vec<usize>> {
    refine(joint, &mut colors);
    let cells = cells(joint, &colors)?;
    let target = cells
        .iter()
        .filter(|(_, (a, _))| a.len() > 1)
        .min_by_key(|(c, (a, _))| (a.len(), **c))
        .map(|(c, _)| *c);
    match target {
        None => {
            let mut map = vec![0usize; joint.n];
            for (a, b) in cells.values() {
                map[a[0]] = b[0] - joint.n;
            }
            if verify(joint, &map) {
                Some(map)
            } else {
                None
            }
        }
        Some(c) => {
            let (a, b) = &cells[&c];
            let x = a[0];
            let fresh = colors.iter().max().copied().unwrap_or(0) + 1;
            for &y in b {
                let mut next = colors.clone();
                next[x] = fresh;
                next[y] = fresh;
                if let Some(m) = search(joint, next) {
                    return Some(m);
                }
            }
            None
        }
    }
}

fn verify(joint: &Joint, map: &[usize]) -> bool {
    (0..joint.n).all(|v| {
        let mut lhs: Vec<(usize, EdgeLabel)> = joint.adj[v].iter().map(|&(w, l)| (map[w] + joint.n, l)).collect();
        let mut rhs = joint.adj[map[v] + joint.n].clone();
        lhs.sort_unstable();
        rhs.sort_unstable();
        lhs == rhs
    })
}

/// A bijection `f` with `b` = `f(a)` preserving vertex colors and edge labels.
pub fn find_isomorphism(a: &Colored, b: &Colored) -> Option<Vec<usize>> {
    let n = a.n();
    if b.n() != n {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let mut adj = a.adj.clone();
    adj.extend(b.adj.iter().map(|l| l.iter().map(|&(w, lab)| (w + n, lab)).collect()));
    let joint = Joint { n, adj };
    let mut keys: Vec<u64> = a.init.iter().chain(b.init.iter()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let colors: Vec<u32> = a
        .init
        .iter()
        .chain(b.init.iter())
        .map(|c| keys.binary_search(c).unwrap() as u32)
        .collect();
    search(&joint, colors)
}
