//! Structural names for weak generalized Cartan matrices.
//!
//! Each template lists its nodes in drawing order: the chain from left to
//! right, with a branch node placed right after the node it hangs from.
//! `args` maps the positional labels of a drawn diagram to nodes; nodes not
//! named by any argument take the label of argument `fill`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
    pub args: Vec<usize>,
    pub fill: usize,
    pub affine: bool,
}

struct Builder {
    m: Vec<Vec<i64>>,
}

impl Builder {
    fn new(k: usize) -> Builder {
        let mut m = vec![vec![0; k]; k];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        Builder { m }
    }
    fn edge(&mut self, i: usize, j: usize) -> &mut Self {
        self.m[i][j] = -1;
        self.m[j][i] = -1;
        self
    }
    fn chain(&mut self, nodes: &[usize]) -> &mut Self {
        for w in nodes.windows(2) {
            self.edge(w[0], w[1]);
        }
        self
    }
    /// `x ⇒ y` with `n` strokes: `a_yx = −n`, `a_xy = −1`.
    fn arrow(&mut self, x: usize, y: usize, n: i64) -> &mut Self {
        self.m[y][x] = -n;
        self.m[x][y] = -1;
        self
    }
    fn set(&mut self, i: usize, j: usize, v: i64) -> &mut Self {
        self.m[i][j] = v;
        self
    }
    fn loops(&mut self, i: usize, count: i64) -> &mut Self {
        self.m[i][i] = 2 - count;
        self
    }
    fn done(&mut self, name: String, args: Vec<usize>, fill: usize, affine: bool) -> Template {
        Template { name, matrix: self.m.clone(), args, fill, affine }
    }
}

fn ident(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Chain `0..k` with argument layout `first, second, ..., second to last, last`.
fn chain_args(k: usize) -> Vec<usize> {
    vec![0, 1.min(k - 1), k.saturating_sub(2), k - 1]
}

/// Index of chain node `c_j` (1-based) when one branch node follows `c_2`.
fn fork_index(j: usize) -> usize {
    if j <= 2 {
        j - 1
    } else {
        j
    }
}

/// Affine templates with `k` nodes.
pub fn affine_templates(k: usize) -> Vec<Template> {
    let mut out = Vec::new();
    let all: Vec<usize> = ident(k);
    if k == 1 {
        out.push(Builder::new(1).loops(0, 2).done("A_0^(1)".into(), vec![0], 0, true));
        return out;
    }
    if k == 2 {
        out.push(Builder::new(2).set(0, 1, -2).set(1, 0, -2).done("A_1^(1)".into(), vec![0, 1], 0, true));
        out.push(Builder::new(2).arrow(1, 0, 4).done("A_2^(2)".into(), vec![0, 1], 0, true));
    }
    if k >= 3 {
        let mut b = Builder::new(k);
        b.chain(&all).edge(k - 1, 0);
        out.push(b.done(format!("A_{}^(1)", k - 1), chain_args(k), 1, true));
    }
    if k >= 5 {
        // c_1..c_L with b1 on c_2 and b2 on c_{L-1}; order c1 c2 b1 c3 .. c_{L-1} b2 c_L
        let l = k - 2;
        let c = |j: usize| -> usize {
            if j <= 2 {
                j - 1
            } else if j < l {
                j
            } else {
                l + 1
            }
        };
        let (b1, b2) = (2, l);
        let mut b = Builder::new(k);
        let spine: Vec<usize> = (1..=l).map(c).collect();
        b.chain(&spine).edge(b1, c(2)).edge(b2, c(l - 1));
        let inner = if l > 3 { c(3) } else { c(2) };
        let args = vec![c(1), c(2), b1, inner, c(l - 1), b2, c(l)];
        out.push(b.done(format!("D_{}^(1)", k - 1), args, 3, true));
    }
    match k {
        7 => {
            let mut b = Builder::new(7);
            b.chain(&[0, 1, 2, 5, 6]).chain(&[2, 3, 4]);
            out.push(b.done("E_6^(1)".into(), ident(7), 0, true));
        }
        8 => {
            let mut b = Builder::new(8);
            b.chain(&[0, 1, 2, 3, 5, 6, 7]).edge(3, 4);
            out.push(b.done("E_7^(1)".into(), ident(8), 0, true));
        }
        9 => {
            let mut b = Builder::new(9);
            b.chain(&[0, 1, 2, 4, 5, 6, 7, 8]).edge(2, 3);
            out.push(b.done("E_8^(1)".into(), ident(9), 0, true));
        }
        _ => {}
    }
    if k >= 3 {
        let mut b = Builder::new(k);
        b.chain(&all).arrow(1, 0, 2).arrow(k - 2, k - 1, 2);
        out.push(b.done(format!("D_{}^(2)", k), chain_args(k), 1, true));
        let mut b = Builder::new(k);
        b.chain(&all).arrow(0, 1, 2).arrow(k - 1, k - 2, 2);
        out.push(b.done(format!("C_{}^(1)", k - 1), chain_args(k), 1, true));
        let mut b = Builder::new(k);
        b.chain(&all).arrow(1, 0, 2).arrow(k - 1, k - 2, 2);
        out.push(b.done(format!("A_{}^(2)", 2 * (k - 1)), chain_args(k), 1, true));
    }
    if k == 3 {
        out.push(Builder::new(3).edge(0, 1).arrow(1, 2, 3).done("G_2^(1)".into(), ident(3), 0, true));
        out.push(Builder::new(3).edge(0, 1).arrow(2, 1, 3).done("D_4^(3)".into(), ident(3), 0, true));
    }
    if k >= 4 {
        // c_1..c_L (L = k-1), b on c_2; order c1 c2 b c3 .. c_L
        let l = k - 1;
        let spine: Vec<usize> = (1..=l).map(fork_index).collect();
        let args = vec![0, 1, 2, fork_index(l - 1), fork_index(l)];
        let mut b = Builder::new(k);
        b.chain(&spine).edge(2, 1).arrow(fork_index(l - 1), fork_index(l), 2);
        out.push(b.done(format!("B_{}^(1)", k - 1), args.clone(), 1, true));
        let mut b = Builder::new(k);
        b.chain(&spine).edge(2, 1).arrow(fork_index(l), fork_index(l - 1), 2);
        out.push(b.done(format!("A_{}^(2)", 2 * (k - 1) - 1), args, 1, true));
    }
    if k == 5 {
        out.push(Builder::new(5).chain(&[0, 1, 2]).chain(&[3, 4]).arrow(2, 3, 2).done("F_4^(1)".into(), ident(5), 0, true));
        out.push(Builder::new(5).chain(&[0, 1, 2]).chain(&[3, 4]).arrow(3, 2, 2).done("E_6^(2)".into(), ident(5), 0, true));
    }
    // looped diagrams
    {
        let mut b = Builder::new(k);
        b.chain(&all).loops(0, 1).loops(k - 1, 1);
        out.push(b.done(format!("½A_{}^(1)", 2 * k - 1), chain_args(k), 1, true));
        let mut b = Builder::new(k);
        b.chain(&all).arrow(0, 1, 2).loops(k - 1, 1);
        out.push(b.done(format!("½C_{}^(1)", 2 * k - 1), chain_args(k), 1, true));
        let mut b = Builder::new(k);
        b.chain(&all).arrow(1, 0, 2).loops(k - 1, 1);
        out.push(b.done(format!("½D_{}^(2)", 2 * k + 1), chain_args(k), 1, true));
    }
    if k >= 3 {
        let l = k - 1;
        let spine: Vec<usize> = (1..=l).map(fork_index).collect();
        let mut b = Builder::new(k);
        b.chain(&spine).edge(2, 1).loops(fork_index(l), 1);
        let args = vec![0, 1, 2, fork_index(l - 1), fork_index(l)];
        out.push(b.done(format!("½D_{}^(1)", 2 * k - 1), args, 1, true));
    }
    out
}

/// Finite templates with `k` nodes.
pub fn finite_templates(k: usize) -> Vec<Template> {
    let all = ident(k);
    let mut out = Vec::new();
    let mut b = Builder::new(k);
    b.chain(&all);
    out.push(b.done(format!("A_{k}"), chain_args(k), 1, false));
    if k >= 2 {
        let mut b = Builder::new(k);
        b.chain(&all).arrow(k - 2, k - 1, 2);
        out.push(b.done(format!("B_{k}"), chain_args(k), 1, false));
    }
    if k >= 3 {
        let mut b = Builder::new(k);
        b.chain(&all).arrow(k - 1, k - 2, 2);
        out.push(b.done(format!("C_{k}"), chain_args(k), 1, false));
    }
    if k >= 4 {
        let spine: Vec<usize> = (1..k).map(fork_index).collect();
        let mut b = Builder::new(k);
        b.chain(&spine).edge(2, 1);
        out.push(b.done(format!("D_{k}"), vec![0, 1, 2, fork_index(k - 2), fork_index(k - 1)], 1, false));
    }
    match k {
        6 => out.push(Builder::new(6).chain(&[0, 1, 2, 4, 5]).edge(2, 3).done("E_6".into(), ident(6), 0, false)),
        7 => out.push(Builder::new(7).chain(&[0, 1, 2, 3, 5, 6]).edge(3, 4).done("E_7".into(), ident(7), 0, false)),
        8 => out.push(Builder::new(8).chain(&[0, 1, 2, 4, 5, 6, 7]).edge(2, 3).done("E_8".into(), ident(8), 0, false)),
        4 => out.push(Builder::new(4).edge(0, 1).arrow(1, 2, 2).edge(2, 3).done("F_4".into(), ident(4), 0, false)),
        2 => out.push(Builder::new(2).arrow(0, 1, 3).done("G_2".into(), ident(2), 0, false)),
        _ => {}
    }
    let mut b = Builder::new(k);
    b.chain(&all).loops(0, 1);
    out.push(b.done(format!("½A_{}", 2 * k), chain_args(k), 1, false));
    out
}

/// All maps `p` (template node `i` ↦ index `p[i]`) with `a[p[i]][p[j]] = t[i][j]`.
pub fn matches(a: &[Vec<i64>], t: &[Vec<i64>], first_only: bool) -> Vec<Vec<usize>> {
    let k = a.len();
    if t.len() != k {
        return Vec::new();
    }
    let sig = |m: &[Vec<i64>], i: usize| -> (i64, Vec<i64>, Vec<i64>) {
        let mut r = m[i].clone();
        let mut c: Vec<i64> = m.iter().map(|row| row[i]).collect();
        r.sort_unstable();
        c.sort_unstable();
        (m[i][i], r, c)
    };
    let sa: Vec<_> = (0..k).map(|i| sig(a, i)).collect();
    let st: Vec<_> = (0..k).map(|i| sig(t, i)).collect();
    let mut out = Vec::new();
    let mut p = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(
        a: &[Vec<i64>],
        t: &[Vec<i64>],
        sa: &[(i64, Vec<i64>, Vec<i64>)],
        st: &[(i64, Vec<i64>, Vec<i64>)],
        p: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        let i = p.len();
        if i == a.len() {
            out.push(p.clone());
            return;
        }
        for c in 0..a.len() {
            if used[c] || sa[c] != st[i] {
                continue;
            }
            if p.iter().enumerate().any(|(j, &pj)| a[c][pj] != t[i][j] || a[pj][c] != t[j][i]) {
                continue;
            }
            used[c] = true;
            p.push(c);
            rec(a, t, sa, st, p, used, out, first_only);
            p.pop();
            used[c] = false;
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
    rec(a, t, &sa, &st, &mut p, &mut used, &mut out, first_only);
    out
}

/// First template of the requested family that `a` is a relabeling of.
pub fn identify(a: &[Vec<i64>], affine: bool) -> Option<(Template, Vec<usize>)> {
    let k = a.len();
    let list = if affine { affine_templates(k) } else { finite_templates(k) };
    list.into_iter().find_map(|t| matches(a, &t.matrix, true).pop().map(|p| (t, p)))
}

pub fn template_by_name(name: &str, k: usize) -> Option<Template> {
    affine_templates(k).into_iter().chain(finite_templates(k)).find(|t| t.name == name)
}

/// Smallest relabeling of node labels (given in template order) under the template's symmetries.
pub fn canonical_labels(t: &Template, labels: &[String]) -> Vec<String> {
    matches(&t.matrix, &t.matrix, false)
        .into_iter()
        .map(|q| q.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Expands drawn-diagram arguments to one label per template node.
pub fn expand_args(t: &Template, args: &[String]) -> Result<Vec<String>, String> {
    if args.len() != t.args.len() {
        return Err(format!("{} takes {} labels, got {}", t.name, t.args.len(), args.len()));
    }
    let k = t.matrix.len();
    let mut out: Vec<Option<String>> = vec![None; k];
    for (a, &node) in args.iter().zip(&t.args) {
        match &out[node] {
            Some(prev) if prev != a => return Err(format!("{}: node {node} labeled both {prev} and {a}", t.name)),
            _ => out[node] = Some(a.clone()),
        }
    }
    Ok(out.into_iter().map(|x| x.unwrap_or_else(|| args[t.fill].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_names_are_unique_per_size() {
        for k in 1..12 {
            let all: Vec<Template> = affine_templates(k).into_iter().chain(finite_templates(k)).collect();
            for (i, t) in all.iter().enumerate() {
                for u in &all[i + 1..] {
                    assert!(matches(&t.matrix, &u.matrix, true).is_empty(), "{} ~ {}", t.name, u.name);
                }
            }
        }
    }

    #[test]
    fn a22_is_recognized() {
        let (t, _) = identify(&[vec![2, -4], vec![-1, 2]], true).unwrap();
        assert_eq!(t.name, "A_2^(2)");
    }

    #[test]
    fn expand_chain() {
        let t = template_by_name("C_4^(1)", 5).unwrap();
        let args: Vec<String> = ["X", "Y", "Y", "X"].iter().map(|s| s.to_string()).collect();
        assert_eq!(expand_args(&t, &args).unwrap(), vec!["X", "Y", "Y", "Y", "X"]);
    }
}
