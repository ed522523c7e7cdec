use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Integer Laurent polynomial in a fixed number of variables.
///
/// Exponent vectors are stored back to back in one array, in strictly increasing
/// lexicographic order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    exps: Vec<i32>,
    coefs: Vec<BigInt>,
}

/// Mixed-radix packing of the exponent vectors inside a box into `u64`, with the
/// first variable most significant, so that lex order is numeric order.
struct Frame {
    radix: Vec<u64>,
    place: Vec<u64>,
}

impl Frame {
    fn new(lo: &[i32], hi: &[i32]) -> Option<Frame> {
        let n = lo.len();
        let mut radix = vec![1u64; n];
        let mut place = vec![1u64; n];
        let mut size: u64 = 1;
        for i in (0..n).rev() {
            let r = u64::try_from(i64::from(hi[i]) - i64::from(lo[i]) + 1).ok()?;
            radix[i] = r;
            place[i] = size;
            size = size.checked_mul(r)?;
        }
        (size < 1 << 62).then_some(Frame { radix, place })
    }

    fn encode(&self, e: &[i32], off: &[i32]) -> u64 {
        e.iter().zip(off).zip(&self.place).map(|((&x, &o), &p)| (x - o) as u64 * p).sum()
    }

    fn decode(&self, mut code: u64, off: &[i32], out: &mut [i32]) {
        for i in (0..out.len()).rev() {
            out[i] = (code % self.radix[i]) as i32 + off[i];
            code /= self.radix[i];
        }
    }
}

fn small_coefs(c: &[BigInt]) -> Option<Vec<i128>> {
    c.iter().map(|x| x.to_i128()).collect()
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pending {
    code: u64,
    i: u32,
    j: u32,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, exps: Vec::new(), coefs: Vec::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPolynomial { nvars, exps, coefs: vec![c] }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut map: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            *map.entry(e).or_default() += c;
        }
        Self::from_sorted(nvars, map.into_iter())
    }

    fn from_sorted(nvars: usize, terms: impl Iterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if !c.is_zero() {
                p.exps.extend_from_slice(&e);
                p.coefs.push(c);
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.coefs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefs.is_empty()
    }

    fn exp(&self, k: usize) -> &[i32] {
        &self.exps[k * self.nvars..(k + 1) * self.nvars]
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &BigInt)> + ExactSizeIterator {
        (0..self.coefs.len()).map(move |k| (self.exp(k), &self.coefs[k]))
    }

    fn find(&self, exps: &[i32]) -> Result<usize, usize> {
        let (mut lo, mut hi) = (0, self.coefs.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.exp(mid).cmp(exps) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Ok(mid),
            }
        }
        Err(lo)
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.find(exps).map(|k| self.coefs[k].clone()).unwrap_or_default()
    }

    pub fn is_monomial(&self) -> bool {
        self.coefs.len() == 1
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.coefs.iter().all(|c| c.is_positive())
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` in
    /// the Laurent ring.
    ///
    /// Division on lexicographic leading terms. Newton polytopes add under
    /// multiplication, so every quotient exponent lies in the box
    /// `[min_i(self) − min_i(d), max_i(self) − max_i(d)]`; leaving it means a remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (slo, shi) = self.exponent_box();
        let (dlo, dhi) = d.exponent_box();
        let lo: Vec<i32> = slo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = shi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return None;
        }
        match self.div_packed(d, &slo, &shi, &dlo, &lo, &hi) {
            Some(r) => r,
            None => self.div_generic(d, &lo, &hi),
        }
    }

    /// Heap division on packed exponents with machine coefficients: every product
    /// `q_i · d_j`, `j ≥ 1`, is merged in decreasing order. `None` means the fast
    /// path does not apply (exponent range or coefficient overflow).
    fn div_packed(&self, d: &Self, slo: &[i32], shi: &[i32], dlo: &[i32], lo: &[i32], hi: &[i32]) -> Option<Option<Self>> {
        let n = self.nvars;
        let frame = Frame::new(slo, shi)?;
        let sc = small_coefs(&self.coefs)?;
        let dc = small_coefs(&d.coefs)?;
        let scode: Vec<u64> = (0..sc.len()).map(|k| frame.encode(self.exp(k), slo)).collect();
        // divisor terms in decreasing order
        let dcode: Vec<u64> = (0..dc.len()).rev().map(|k| frame.encode(d.exp(k), dlo)).collect();
        let dcoef: Vec<i128> = dc.iter().rev().copied().collect();
        let lead = d.exp(dc.len() - 1).to_vec();
        let (lead_c, lead_code) = (dcoef[0], dcode[0]);
        let mut qcode: Vec<u64> = Vec::new();
        let mut qcoef: Vec<i128> = Vec::new();
        let mut heap: BinaryHeap<Pending> = BinaryHeap::new();
        let mut k = sc.len();
        let mut m = vec![0i32; n];
        loop {
            let top = heap.peek().map(|p| p.code);
            let next = if k > 0 { Some(scode[k - 1]) } else { None };
            let code = match (next, top) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.max(b),
            };
            let mut c: i128 = 0;
            if next == Some(code) {
                c = sc[k - 1];
                k -= 1;
            }
            while heap.peek().is_some_and(|p| p.code == code) {
                let Pending { i, j, .. } = heap.pop().expect("peeked");
                let prod = qcoef[i as usize].checked_mul(dcoef[j as usize])?;
                c = c.checked_sub(prod)?;
                let j1 = j as usize + 1;
                if j1 < dcode.len() {
                    heap.push(Pending { code: qcode[i as usize] + dcode[j1], i, j: j1 as u32 });
                }
            }
            if c == 0 {
                continue;
            }
            frame.decode(code, slo, &mut m);
            let mut qcode_new: u64 = 0;
            for t in 0..n {
                let e = m[t] - lead[t];
                if e < lo[t] || e > hi[t] {
                    return Some(None);
                }
                qcode_new += (e - lo[t]) as u64 * frame.place[t];
            }
            if c % lead_c != 0 {
                return Some(None);
            }
            debug_assert_eq!(qcode_new + lead_code, code);
            let i = qcode.len() as u32;
            qcode.push(qcode_new);
            qcoef.push(c / lead_c);
            if dcode.len() > 1 {
                heap.push(Pending { code: qcode_new + dcode[1], i, j: 1 });
            }
        }
        let mut q = Self::zero(n);
        q.exps.reserve(qcode.len() * n);
        for idx in (0..qcode.len()).rev() {
            frame.decode(qcode[idx], lo, &mut m);
            q.exps.extend_from_slice(&m);
            q.coefs.push(BigInt::from(qcoef[idx]));
        }
        Some(Some(q))
    }

    fn div_generic(&self, d: &Self, lo: &[i32], hi: &[i32]) -> Option<Self> {
        let mut rem: BTreeMap<Vec<i32>, BigInt> = self.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
        let (dl, dc) = d.terms().next_back().expect("nonzero divisor");
        let mut q = BTreeMap::new();
        while let Some((rl, rc)) = rem.iter().next_back() {
            let e: Vec<i32> = rl.iter().zip(dl).map(|(a, b)| a - b).collect();
            if e.iter().zip(lo.iter().zip(hi)).any(|(x, (a, b))| x < a || x > b) {
                return None;
            }
            if !(rc % dc).is_zero() {
                return None;
            }
            let c = rc / dc;
            for (de, dcoef) in d.terms() {
                let k: Vec<i32> = e.iter().zip(de).map(|(a, b)| a + b).collect();
                let delta = -(&c * dcoef);
                match rem.entry(k) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                }
            }
            q.insert(e, c);
        }
        Some(Self::from_sorted(self.nvars, q.into_iter()))
    }

    fn mul_packed(&self, rhs: &Self) -> Option<Self> {
        let n = self.nvars;
        let (alo, ahi) = self.exponent_box();
        let (blo, bhi) = rhs.exponent_box();
        let lo: Vec<i32> = alo.iter().zip(&blo).map(|(a, b)| a + b).collect();
        let hi: Vec<i32> = ahi.iter().zip(&bhi).map(|(a, b)| a + b).collect();
        let frame = Frame::new(&lo, &hi)?;
        let ac = small_coefs(&self.coefs)?;
        let bc = small_coefs(&rhs.coefs)?;
        let acode: Vec<u64> = (0..ac.len()).map(|k| frame.encode(self.exp(k), &alo)).collect();
        let bcode: Vec<u64> = (0..bc.len()).map(|k| frame.encode(rhs.exp(k), &blo)).collect();
        let mut acc: FxHashMap<u64, i128> = FxHashMap::default();
        acc.reserve(ac.len().max(bc.len()));
        for (x, &ca) in acode.iter().zip(&ac) {
            for (y, &cb) in bcode.iter().zip(&bc) {
                let p = ca.checked_mul(cb)?;
                let slot = acc.entry(x + y).or_insert(0);
                *slot = slot.checked_add(p)?;
            }
        }
        let mut out: Vec<(u64, i128)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable_by_key(|t| t.0);
        let mut p = Self::zero(n);
        p.exps.resize(out.len() * n, 0);
        p.coefs.reserve(out.len());
        for (k, (code, c)) in out.into_iter().enumerate() {
            frame.decode(code, &lo, &mut p.exps[k * n..(k + 1) * n]);
            p.coefs.push(BigInt::from(c));
        }
        Some(p)
    }

    fn mul_generic(&self, rhs: &Self) -> Self {
        let mut acc: HashMap<Vec<i32>, BigInt> = HashMap::with_capacity(self.term_count() * rhs.term_count());
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let e: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        let mut terms: Vec<(Vec<i32>, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted(self.nvars, terms.into_iter())
    }

    /// Coordinatewise minimum and maximum exponents.
    pub fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for k in 0..self.coefs.len() {
            for (i, &x) in self.exp(k).iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        (lo, hi)
    }

    /// Largest `q`-degree after `x_i ↦ q^{λ_i}`, ignoring degrees whose coefficients cancel.
    pub fn deg_max(&self, lam: &[BigRational]) -> Option<BigRational> {
        let mut by_degree: BTreeMap<BigRational, BigInt> = BTreeMap::new();
        for (e, c) in self.terms() {
            let d: BigRational = e.iter().zip(lam).map(|(&k, l)| l * BigRational::from_integer(k.into())).sum();
            *by_degree.entry(d).or_default() += c;
        }
        by_degree.into_iter().rev().find(|(_, c)| !c.is_zero()).map(|(d, _)| d)
    }

    /// Largest exponent of `x_i` over all terms.
    pub fn deg_max_var(&self, i: usize) -> Option<i32> {
        self.terms().map(|(e, _)| e[i]).max()
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * e.iter().zip(x).map(|(&k, &v)| v.powi(k)).product::<f64>())
            .sum()
    }

    /// `log` of the value at positive `x`, summed in log space.
    pub fn log_eval(&self, logx: &[f64]) -> f64 {
        let logs: Vec<(f64, bool)> = self
            .terms()
            .map(|(e, c)| {
                let lc = c.abs().to_f64().map(f64::ln).unwrap_or(f64::INFINITY);
                (lc + e.iter().zip(logx).map(|(&k, &l)| k as f64 * l).sum::<f64>(), c.is_positive())
            })
            .collect();
        let m = logs.iter().map(|x| x.0).fold(f64::NEG_INFINITY, f64::max);
        let s: f64 = logs.iter().map(|&(l, pos)| if pos { (l - m).exp() } else { -(l - m).exp() }).sum();
        m + s.ln()
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero(self.nvars);
        }
        self.mul_packed(rhs).unwrap_or_else(|| self.mul_generic(rhs))
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    /// Merge of the two sorted term lists.
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let n = self.nvars;
        let mut out = LaurentPolynomial::zero(n);
        out.exps.reserve(self.exps.len() + rhs.exps.len());
        let (mut i, mut j) = (0, 0);
        let push = |out: &mut LaurentPolynomial, e: &[i32], c: BigInt| {
            if !c.is_zero() {
                out.exps.extend_from_slice(e);
                out.coefs.push(c);
            }
        };
        while i < self.term_count() || j < rhs.term_count() {
            let ord = match (i < self.term_count(), j < rhs.term_count()) {
                (true, true) => self.exp(i).cmp(rhs.exp(j)),
                (true, false) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    push(&mut out, self.exp(i), self.coefs[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    push(&mut out, rhs.exp(j), rhs.coefs[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    push(&mut out, self.exp(i), &self.coefs[i] + &rhs.coefs[j]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// Serialized as a list of `[exponents, "coefficient"]` pairs in term order.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.term_count()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            let neg = c.is_negative();
            if !first {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(3, i)
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&x(0) + &x(1)) * &(&x(2) + &LaurentPolynomial::one(3));
        let b = &x(0) + &x(1);
        assert_eq!(a.div_exact(&b).unwrap(), &x(2) + &LaurentPolynomial::one(3));
    }

    #[test]
    fn inexact_division_detected() {
        let a = &x(0) + &LaurentPolynomial::one(3);
        let b = &x(0) + &x(1);
        assert!(a.div_exact(&b).is_none());
        assert!(LaurentPolynomial::constant(3, 3).div_exact(&LaurentPolynomial::constant(3, 2)).is_none());
    }

    #[test]
    fn monomial_division_is_laurent() {
        let a = LaurentPolynomial::constant(3, 2);
        let q = a.div_exact(&x(0)).unwrap();
        assert_eq!(q, LaurentPolynomial::monomial(3, vec![-1, 0, 0], 2));
        assert_eq!(q.to_string(), "2*x0^-1");
    }

    #[test]
    fn pow_and_deg() {
        let p = (&x(0) + &x(1)).pow(3);
        assert_eq!(p.term_count(), 4);
        assert_eq!(p.coefficient(&[2, 1, 0]), BigInt::from(3));
        let lam = [BigRational::new(1.into(), 2.into()), BigRational::from_integer(2.into()), BigRational::zero()];
        assert_eq!(p.deg_max(&lam), Some(BigRational::from_integer(6.into())));
    }

    #[test]
    fn deg_max_skips_cancelled_degrees() {
        // x0 − x1 at λ = (1, 1) has both terms in degree 1 and they cancel
        let p = LaurentPolynomial::from_terms(2, [(vec![1, 0], BigInt::from(1)), (vec![0, 1], BigInt::from(-1)), (vec![0, 0], BigInt::from(1))]);
        let one = BigRational::one();
        assert_eq!(p.deg_max(&[one.clone(), one]), Some(BigRational::zero()));
    }

    #[test]
    fn packed_and_generic_paths_agree() {
        let a = &(&(&x(0) + &x(1).pow(2)) + &LaurentPolynomial::monomial(3, vec![-2, 0, 1], -3)) * &(&x(2) + &LaurentPolynomial::constant(3, 5));
        let b = &(&x(0) + &LaurentPolynomial::monomial(3, vec![0, -1, 0], 7)).pow(3) * &x(1);
        let prod = &a * &b;
        assert_eq!(prod, a.mul_generic(&b));
        let (lo, hi) = {
            let (slo, shi) = prod.exponent_box();
            let (dlo, dhi) = b.exponent_box();
            (slo.iter().zip(&dlo).map(|(p, q)| p - q).collect::<Vec<_>>(), shi.iter().zip(&dhi).map(|(p, q)| p - q).collect::<Vec<_>>())
        };
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_generic(&b, &lo, &hi).unwrap(), a);
        assert!((&prod + &LaurentPolynomial::one(3)).div_exact(&b).is_none());
    }

    #[test]
    fn huge_coefficients_fall_back() {
        let big: BigInt = BigInt::from(1u8) << 200usize;
        let a = &LaurentPolynomial::monomial(3, vec![1, 0, 0], big.clone()) + &x(1);
        let b = &x(0) + &LaurentPolynomial::constant(3, 2);
        let p = &a * &b;
        assert_eq!(p.coefficient(&[2, 0, 0]), big);
        assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn addition_cancels() {
        let p = &x(0) + &x(1);
        let q = LaurentPolynomial::from_terms(3, [(vec![1, 0, 0], BigInt::from(-1))]);
        assert_eq!(&p + &q, x(1));
        assert!((&q + &x(0)).is_zero());
    }
}
