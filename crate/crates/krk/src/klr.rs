//! Graded characters of KLR modules: Laurent polynomials in `q`, quantum
//! shuffles, strips, `ε`/`ε^∨`/`wt`/`jump`/`φ^Λ`, cyclotomic membership and the
//! quantum Serre operators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVec, WeightH};
use crate::error::CharError;

/// Finitely supported `exponent → coefficient` map; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, coeff: i64, exp: i64) {
        let slot = self.0.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (c, e))
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + s, c)).collect())
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.0.values().sum()
    }

    /// `[k]` in the variable `q^d`.
    pub fn qint(k: i64, d: i64) -> Self {
        assert!(k >= 0);
        Self::from_terms((0..k).map(|t| (1, d * (k - 1 - 2 * t))))
    }

    /// `[k]!` in the variable `q^d`.
    pub fn qfact(k: i64, d: i64) -> Self {
        (1..=k).fold(Self::one(), |acc, t| &acc * &Self::qint(t, d))
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        let (omin, omax) = (other.min_exp()?, other.max_exp()?);
        let lead = other.coeff(omax);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = match self.min_exp() {
            Some(m) => m - omin,
            None => return Some(LaurentPoly::zero()),
        };
        while let Some(top) = rem.max_exp() {
            let e = top - omax;
            let c = rem.coeff(top);
            if e < floor || c % lead != 0 {
                return None;
            }
            let term = LaurentPoly::monomial(c / lead, e);
            rem = &rem - &(&term * other);
            quot.add_term(c / lead, e);
        }
        Some(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (c, e) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (c1, e1) in self.terms() {
            for (c2, e2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(c, e)| format!("{c}:{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

pub type Word = Vec<usize>;

/// `Σ gdim(1_i M) [i]` over words of a fixed content.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedChar {
    n: usize,
    terms: BTreeMap<Word, LaurentPoly>,
}

impl GradedChar {
    pub fn zero(n: usize) -> Self {
        GradedChar { n, terms: BTreeMap::new() }
    }

    /// Character of the unit module.
    pub fn unit(n: usize) -> Self {
        Self::word(n, &[])
    }

    pub fn word(n: usize, w: &[usize]) -> Self {
        Self::word_with(n, w, LaurentPoly::one())
    }

    pub fn word_with(n: usize, w: &[usize], coeff: LaurentPoly) -> Self {
        let mut c = Self::zero(n);
        c.add_word(w.to_vec(), &coeff);
        c
    }

    pub fn add_word(&mut self, w: Word, coeff: &LaurentPoly) {
        assert!(w.iter().all(|&x| x < self.n));
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + coeff;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[usize]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Root content `ν`; `None` for the zero character.
    pub fn content(&self) -> Option<RootVec> {
        self.terms.keys().next().map(|w| RootVec::content(self.n, w))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_word(w.clone(), &(c * p));
        }
        out
    }

    pub fn add(&self, other: &GradedChar) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &GradedChar) -> Self {
        self.add(&other.scale(&LaurentPoly::monomial(-1, 0)))
    }

    /// Shift so that the global minimum exponent is zero.
    pub fn normalized(&self) -> Self {
        let min = self.terms.values().filter_map(|p| p.min_exp()).min().unwrap_or(0);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_word(w.clone(), &c.shift(-min));
        }
        out
    }

    pub fn eq_up_to_shift(&self, other: &GradedChar) -> bool {
        self.normalized() == other.normalized()
    }

    /// Ungraded dimension.
    pub fn dim(&self) -> i64 {
        self.terms.values().map(|p| p.at_one()).sum()
    }

    /// Words ending in `i`, with that letter removed.
    pub fn right_strip(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            if w.last() == Some(&i) {
                out.add_word(w[..w.len() - 1].to_vec(), c);
            }
        }
        out
    }

    /// Words starting with `i`, with that letter removed.
    pub fn left_strip(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            if w.first() == Some(&i) {
                out.add_word(w[1..].to_vec(), c);
            }
        }
        out
    }

    fn divide(&self, p: &LaurentPoly) -> Result<Self, CharError> {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let q = c.div_exact(p).ok_or_else(|| CharError::NotDivisible(p.to_string()))?;
            out.add_word(w.clone(), &q);
        }
        Ok(out)
    }

    /// Text form: one line per word, `i1 i2 … : c:e c:e`, normalized gauge.
    pub fn to_text(&self) -> String {
        let nf = self.normalized();
        let mut s = String::new();
        for (w, c) in &nf.terms {
            let letters: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let head = if letters.is_empty() { "∅".to_string() } else { letters.join(" ") };
            s.push_str(&format!("{head} : {c}\n"));
        }
        s
    }
}

/// Quantum shuffle. Placing a letter `b` of the second word before a letter `a`
/// of the first contributes `−(α_a, α_b)` to the degree.
pub fn qshuffle(cd: &CartanDatum, c1: &GradedChar, c2: &GradedChar) -> GradedChar {
    let mut out = GradedChar::zero(c1.n);
    for (u, pu) in c1.terms() {
        for (v, pv) in c2.terms() {
            let base = pu * pv;
            let mut acc = vec![];
            shuffle_rec(cd, u, v, 0, 0, 0, &mut vec![], &mut acc);
            for (w, deg) in acc {
                out.add_word(w, &base.shift(deg));
            }
        }
    }
    out
}

fn shuffle_rec(
    cd: &CartanDatum,
    u: &[usize],
    v: &[usize],
    i: usize,
    j: usize,
    deg: i64,
    cur: &mut Vec<usize>,
    acc: &mut Vec<(Word, i64)>,
) {
    if i == u.len() && j == v.len() {
        acc.push((cur.clone(), deg));
        return;
    }
    if i < u.len() {
        cur.push(u[i]);
        shuffle_rec(cd, u, v, i + 1, j, deg, cur, acc);
        cur.pop();
    }
    if j < v.len() {
        let b = v[j];
        let cross: i64 = u[i..].iter().map(|&a| -cd.bilinear(a, b)).sum();
        cur.push(b);
        shuffle_rec(cd, u, v, i, j + 1, deg + cross, cur, acc);
        cur.pop();
    }
}

/// `ε_i`: longest `i`-suffix in the support.
pub fn eps(c: &GradedChar, i: usize) -> Result<i64, CharError> {
    if c.is_zero() {
        return Err(CharError::Zero);
    }
    Ok(c.support()
        .map(|w| w.iter().rev().take_while(|&&x| x == i).count() as i64)
        .max()
        .unwrap_or(0))
}

/// `ε^∨_i`: longest `i`-prefix in the support.
pub fn eps_vee(c: &GradedChar, i: usize) -> Result<i64, CharError> {
    if c.is_zero() {
        return Err(CharError::Zero);
    }
    Ok(c.support()
        .map(|w| w.iter().take_while(|&&x| x == i).count() as i64)
        .max()
        .unwrap_or(0))
}

/// `wt_i = −⟨h_i, ν⟩`.
pub fn wt(cd: &CartanDatum, c: &GradedChar, i: usize) -> Result<i64, CharError> {
    let nu = c.content().ok_or(CharError::Zero)?;
    Ok(-cd.pairing(i, &nu))
}

/// `jump_i = wt_i + ε_i + ε^∨_i`.
pub fn jump(cd: &CartanDatum, c: &GradedChar, i: usize) -> Result<i64, CharError> {
    Ok(wt(cd, c, i)? + eps(c, i)? + eps_vee(c, i)?)
}

/// `φ^Λ_j = λ_j + ε_j + wt_j`.
pub fn phi_lambda(cd: &CartanDatum, c: &GradedChar, lambda: &WeightH, j: usize) -> Result<i64, CharError> {
    Ok(lambda.0[j] + eps(c, j)? + wt(cd, c, j)?)
}

/// `ε^∨_i ≤ λ_i` for all `i`.
pub fn in_rep(c: &GradedChar, lambda: &WeightH) -> Result<bool, CharError> {
    for i in 0..c.n() {
        if eps_vee(c, i)? > lambda.0[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Divided power `e_i^{(r)}`: strip `r` times, divide by `[r]_i!`.
pub fn divided_power(cd: &CartanDatum, c: &GradedChar, i: usize, r: i64) -> Result<GradedChar, CharError> {
    let mut out = c.clone();
    for _ in 0..r {
        out = out.right_strip(i);
    }
    out.divide(&LaurentPoly::qfact(r, cd.d(i)))
}

/// Character of `ẽ_i^m M` with `m = ε_i(M)`, and `m`.
pub fn etilde_top(cd: &CartanDatum, c: &GradedChar, i: usize) -> Result<(i64, GradedChar), CharError> {
    let m = eps(c, i)?;
    Ok((m, divided_power(cd, c, i, m)?))
}

/// Character of a single `ẽ_i M`: one strip divided by `[ε_i(M)]_i`.
pub fn etilde_once(cd: &CartanDatum, c: &GradedChar, i: usize) -> Result<GradedChar, CharError> {
    let m = eps(c, i)?;
    if m == 0 {
        return Err(CharError::Zero);
    }
    c.right_strip(i).divide(&LaurentPoly::qint(m, cd.d(i)))
}

/// `Σ_r (−1)^r e_i^{(N−r)} e_j e_i^{(r)}` with `N = 1 − a_ij`.
pub fn serre_apply(cd: &CartanDatum, c: &GradedChar, i: usize, j: usize) -> Result<GradedChar, CharError> {
    assert_ne!(i, j);
    let big_n = 1 - cd.a(i, j);
    let mut total = GradedChar::zero(c.n());
    for r in 0..=big_n {
        let inner = divided_power(cd, c, i, r)?.right_strip(j);
        let term = divided_power(cd, &inner, i, big_n - r)?;
        total = if r % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    Ok(total)
}

/// True when every Serre operator kills `c`.
pub fn serre_clean(cd: &CartanDatum, c: &GradedChar) -> Result<bool, CharError> {
    for i in 0..c.n() {
        for j in (0..c.n()).filter(|&j| j != i) {
            if !serre_apply(cd, c, i, j)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Char L(i^n) = [n]_i! [i^n]`.
pub fn char_lin(cd: &CartanDatum, i: usize, n: usize) -> GradedChar {
    GradedChar::word_with(cd.n(), &vec![i; n], LaurentPoly::qfact(n as i64, cd.d(i)))
}

/// `Char L(i^{c−n} j i^n) = [c−n]_i! [n]_i! [i^{c−n} j i^n]`, for `c ≤ −a_ij`.
pub fn char_lcal(cd: &CartanDatum, i: usize, j: usize, c: i64, n: i64) -> Result<GradedChar, CharError> {
    let bound = -cd.a(i, j);
    if c > bound || n < 0 || n > c {
        return Err(CharError::BadStringLength { c, bound });
    }
    let mut w = vec![i; (c - n) as usize];
    w.push(j);
    w.extend(std::iter::repeat_n(i, n as usize));
    let coeff = &LaurentPoly::qfact(c - n, cd.d(i)) * &LaurentPoly::qfact(n, cd.d(i));
    Ok(GradedChar::word_with(cd.n(), &w, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{AffineType, Family};

    fn a2() -> CartanDatum {
        CartanDatum::build(AffineType::new(Family::A1, 2).unwrap())
    }

    #[test]
    fn qint_values() {
        assert_eq!(LaurentPoly::qint(2, 1), LaurentPoly::from_terms([(1, 1), (1, -1)]));
        assert_eq!(LaurentPoly::qfact(1, 1), LaurentPoly::one());
        assert_eq!(LaurentPoly::qfact(0, 3), LaurentPoly::one());
        assert_eq!(LaurentPoly::qint(2, 2), LaurentPoly::from_terms([(1, 2), (1, -2)]));
    }

    #[test]
    fn exact_division() {
        let f3 = LaurentPoly::qfact(3, 1);
        let f2 = LaurentPoly::qfact(2, 1);
        assert_eq!(f3.div_exact(&f2), Some(LaurentPoly::qint(3, 1)));
        let onepq2 = LaurentPoly::from_terms([(1, 0), (1, 2)]);
        assert_eq!(onepq2.div_exact(&f2), Some(LaurentPoly::monomial(1, 1)));
        assert_eq!(LaurentPoly::one().div_exact(&f2), None);
    }

    #[test]
    fn shuffle_two_letters() {
        let cd = a2();
        let s = qshuffle(&cd, &GradedChar::word(3, &[0]), &GradedChar::word(3, &[1]));
        let want = GradedChar::word(3, &[0, 1]).add(&GradedChar::word_with(3, &[1, 0], LaurentPoly::monomial(1, 1)));
        assert!(s.eq_up_to_shift(&want));
        let ii = qshuffle(&cd, &GradedChar::word(3, &[2]), &GradedChar::word(3, &[2]));
        assert!(ii.eq_up_to_shift(&char_lin(&cd, 2, 2)));
    }

    #[test]
    fn shuffle_orthogonal_letters_is_flat() {
        let cd = CartanDatum::build(AffineType::new(Family::A1, 3).unwrap());
        let s = qshuffle(&cd, &GradedChar::word(4, &[0]), &GradedChar::word(4, &[2]));
        for (_, c) in s.terms() {
            assert_eq!(*c, LaurentPoly::one());
        }
    }

    #[test]
    fn strips() {
        let c = GradedChar::word(3, &[0, 1]);
        assert_eq!(c.right_strip(1), GradedChar::word(3, &[0]));
        assert!(c.right_strip(0).is_zero());
        assert_eq!(eps(&c, 1), Ok(1));
        assert_eq!(eps_vee(&GradedChar::word(3, &[0]), 0), Ok(1));
        assert_eq!(eps(&GradedChar::zero(3), 0), Err(CharError::Zero));
    }

    #[test]
    fn etilde_on_doubled_zero() {
        let cd = CartanDatum::build(AffineType::new(Family::A2Even, 2).unwrap());
        let c = GradedChar::word_with(3, &[0, 0], LaurentPoly::from_terms([(1, 0), (1, 2)]));
        assert_eq!(eps(&c, 0), Ok(2));
        let (m, top) = etilde_top(&cd, &c, 0).unwrap();
        assert_eq!(m, 2);
        assert!(top.eq_up_to_shift(&GradedChar::unit(3)));
    }

    #[test]
    fn etilde_on_lin() {
        let cd = a2();
        for n in 1..5 {
            let c = char_lin(&cd, 1, n);
            let (m, top) = etilde_top(&cd, &c, 1).unwrap();
            assert_eq!(m, n as i64);
            assert!(top.eq_up_to_shift(&GradedChar::unit(3)));
            // a single strip carries [n]_1 copies of L(1^{n-1})
            let once = etilde_once(&cd, &c, 1).unwrap();
            assert!(once.eq_up_to_shift(&char_lin(&cd, 1, n - 1)));
        }
    }

    #[test]
    fn jump_anchor() {
        let cd = a2();
        let l0 = GradedChar::word(3, &[0]);
        assert_eq!(jump(&cd, &l0, 1), Ok(1));
        assert_eq!(phi_lambda(&cd, &l0, &WeightH::fundamental(3, 0), 1), Ok(1));
        assert_eq!(in_rep(&l0, &WeightH::fundamental(3, 0)), Ok(true));
        assert_eq!(in_rep(&GradedChar::word(3, &[1]), &WeightH::fundamental(3, 0)), Ok(false));
    }

    #[test]
    fn serre_on_shuffles() {
        let cd = a2();
        let l01 = GradedChar::word(3, &[0, 1]);
        assert!(serre_clean(&cd, &l01).unwrap());
        let c = qshuffle(&cd, &char_lin(&cd, 0, 2), &GradedChar::word(3, &[1]));
        assert!(serre_clean(&cd, &c).unwrap());
    }

    #[test]
    fn lcal_forms() {
        let cd = CartanDatum::rank2_appendix();
        let (h, i) = (0, 1);
        let c = char_lcal(&cd, i, h, 2, 2).unwrap();
        assert_eq!(c, GradedChar::word_with(2, &[h, i, i], LaurentPoly::qfact(2, 1)));
        assert_eq!(eps(&c, i), Ok(2));
        assert!(char_lcal(&cd, i, h, 3, 0).is_err());
    }
}
