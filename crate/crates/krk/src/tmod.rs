//! The modules `T(p,k)` as explicit integer matrix representations of the KLR
//! generators, with relation, character and strip checks.

use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::cartan::{AffineType, CartanDatum, Family, WeightH};
use crate::error::{KrError, ModuleError};
use crate::klr::{self, GradedChar, LaurentPoly, Word};
use crate::kr::KrCrystal;
use crate::paths::{self, Path};

/// Dense square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    dim: usize,
    a: Vec<i64>,
}

impl Mat {
    pub fn zero(dim: usize) -> Self {
        Mat { dim, a: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.a[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.a[row * self.dim + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, e: u32) -> Mat {
        (0..e).fold(Mat::identity(self.dim), |acc, _| &acc * self)
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.dim).map(|r| self.get(r, col)).collect()
    }

    /// Nonzero entries of a column as `(row, value)`.
    pub fn column_support(&self, col: usize) -> Vec<(usize, i64)> {
        (0..self.dim).filter_map(|r| {
            let v = self.get(r, col);
            (v != 0).then_some((r, v))
        })
        .collect()
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        let d = self.dim;
        let mut out = Mat::zero(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    out.a[i * d + j] += x * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        Mat { dim: self.dim, a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        Mat { dim: self.dim, a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct TrivModule {
    pub word: Word,
    n: usize,
    /// 1-based positions whose crossing flips the basis vector.
    pub flips: Vec<usize>,
    /// 1-based positions carrying a dot pair.
    pub dots: Vec<usize>,
    /// Idempotent sector of each basis vector.
    pub sectors: Vec<Word>,
    pub degrees: Vec<i64>,
    /// `x[r-1]` is `x_r`.
    pub x: Vec<Mat>,
    /// `psi[r-1]` is `ψ_r`.
    pub psi: Vec<Mat>,
}

fn swap(w: &[usize], t: usize) -> Word {
    let mut v = w.to_vec();
    v.swap(t - 1, t);
    v
}

fn markers(ty: AffineType, p: &Path) -> Result<(Vec<usize>, Vec<usize>), ModuleError> {
    let l = ty.rank();
    let join = |sets: &[Vec<usize>]| {
        let mut v: Vec<usize> = sets.concat();
        v.sort_unstable();
        v.dedup();
        v
    };
    let zero_one = || join(&[p.adjacency(0, 1), p.adjacency(1, 0)]);
    let (flips, dots) = match ty.family() {
        Family::A1 | Family::C1 => (vec![], vec![]),
        Family::A2Even => (vec![], p.adjacency(0, 0)),
        Family::A2Dag => (vec![], p.adjacency(l, l)),
        Family::D2 => (vec![], join(&[p.adjacency(0, 0), p.adjacency(l, l)])),
        Family::A2Odd => (zero_one(), vec![]),
        Family::D1 => (
            join(&[zero_one(), p.adjacency(l - 1, l), p.adjacency(l, l - 1)]),
            vec![],
        ),
        Family::B1 => (zero_one(), p.adjacency(l, l)),
    };
    if let Some(&t) = flips.iter().find(|t| dots.contains(t)) {
        return Err(ModuleError::MarkerOverlap(t));
    }
    Ok((flips, dots))
}

impl TrivModule {
    /// The unit module of `R(0)`.
    pub fn unit(n: usize) -> Self {
        TrivModule {
            word: vec![],
            n,
            flips: vec![],
            dots: vec![],
            sectors: vec![vec![]],
            degrees: vec![0],
            x: vec![],
            psi: vec![],
        }
    }

    /// `T(p,k)` for the colour word `word` (must be realisable in `kr`).
    pub fn build(cd: &CartanDatum, kr: &KrCrystal, word: &[usize]) -> Result<Self, ModuleError> {
        let n = cd.n();
        if word.is_empty() {
            return Ok(Self::unit(n));
        }
        let p = paths::realize(kr, word)?;
        let (flips, dots) = markers(kr.ty(), &p)?;
        let k = word.len();
        let d1 = flips.len();
        let d = d1 + dots.len();
        let dim = 1usize << d;
        // bit m < d1: flip marker m; bit d1 + m: dot marker m
        let sectors: Vec<Word> = (0..dim)
            .map(|b| {
                let mut w = word.to_vec();
                for m in (0..d1).rev() {
                    if b >> m & 1 == 1 {
                        w = swap(&w, flips[m]);
                    }
                }
                w
            })
            .collect();
        let degrees: Vec<i64> = (0..dim)
            .map(|b| {
                dots.iter()
                    .enumerate()
                    .filter(|(m, _)| b >> (d1 + m) & 1 == 1)
                    .map(|(_, &t)| 2 * cd.d(word[t - 1]))
                    .sum()
            })
            .collect();
        let mut x = vec![Mat::zero(dim); k];
        for (r, xr) in (1..=k).zip(x.iter_mut()) {
            let hit = dots
                .iter()
                .position(|&t| t == r)
                .map(|m| (m, 1))
                .or_else(|| dots.iter().position(|&t| t + 1 == r).map(|m| (m, -1)));
            if let Some((m, sign)) = hit {
                let bit = 1 << (d1 + m);
                for b in (0..dim).filter(|b| b & bit == 0) {
                    xr.set(b | bit, b, sign);
                }
            }
        }
        let mut psi = vec![Mat::zero(dim); k.saturating_sub(1)];
        for (r, pr) in (1..k).zip(psi.iter_mut()) {
            if let Some(m) = flips.iter().position(|&t| t == r) {
                for b in 0..dim {
                    pr.set(b ^ (1 << m), b, 1);
                }
            } else if let Some(m) = dots.iter().position(|&t| t == r) {
                let bit = 1 << (d1 + m);
                for b in (0..dim).filter(|b| b & bit != 0) {
                    pr.set(b & !bit, b, 1);
                }
            }
        }
        Ok(TrivModule { word: word.to_vec(), n, flips, dots, sectors, degrees, x, psi })
    }

    pub fn k(&self) -> usize {
        self.word.len()
    }

    pub fn dim(&self) -> usize {
        self.sectors.len()
    }

    /// Graded character read off the basis.
    pub fn character(&self) -> GradedChar {
        let mut c = GradedChar::zero(self.n);
        for (s, &deg) in self.sectors.iter().zip(&self.degrees) {
            c.add_word(s.clone(), &LaurentPoly::monomial(1, deg));
        }
        c
    }
}

/// The per-type closed form for `Char T(p,k)`, built directly from the word.
pub fn closed_form(cd: &CartanDatum, ty: AffineType, p: &Path) -> Result<GradedChar, ModuleError> {
    let n = cd.n();
    let (flips, dots) = markers(ty, p)?;
    let mut prefactor = LaurentPoly::one();
    for &t in &dots {
        let c = p.word[t - 1];
        prefactor = &(&prefactor * &LaurentPoly::monomial(1, cd.d(c))) * &LaurentPoly::qint(2, cd.d(c));
    }
    let mut words = vec![p.word.clone()];
    for &t in &flips {
        let extra: Vec<Word> = words.iter().map(|w| swap(w, t)).collect();
        words.extend(extra);
    }
    let mut out = GradedChar::zero(n);
    for w in words {
        out.add_word(w, &prefactor);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub instances: usize,
}

fn fail(relation: &str, context: String) -> ModuleError {
    ModuleError::Relation { relation: relation.to_string(), context }
}

/// Checks every defining relation, degree homogeneity and nilpotency of the dots.
pub fn verify_relations(cd: &CartanDatum, m: &TrivModule) -> Result<RelationReport, ModuleError> {
    let k = m.k();
    let dim = m.dim();
    let mut rep = RelationReport::default();
    let unit_col = |v: usize, c: i64| -> Vec<i64> {
        let mut col = vec![0; dim];
        col[v] = c;
        col
    };
    for v in 0..dim {
        let sec = &m.sectors[v];
        for r in 1..=k {
            for (w, _) in m.x[r - 1].column_support(v) {
                rep.instances += 1;
                if m.sectors[w] != *sec {
                    return Err(fail("x_r 1_i = 1_i x_r", format!("r={r} v={v}")));
                }
                let want = cd.bilinear(sec[r - 1], sec[r - 1]);
                if m.degrees[w] - m.degrees[v] != want {
                    return Err(fail("deg x_r", format!("r={r} v={v}")));
                }
            }
        }
        for r in 1..k {
            for (w, _) in m.psi[r - 1].column_support(v) {
                rep.instances += 1;
                if m.sectors[w] != swap(sec, r) {
                    return Err(fail("ψ_r 1_i = 1_{s_r i} ψ_r", format!("r={r} v={v}")));
                }
                let want = -cd.bilinear(sec[r - 1], sec[r]);
                if m.degrees[w] - m.degrees[v] != want {
                    return Err(fail("deg ψ_r", format!("r={r} v={v}")));
                }
            }
        }
    }
    for r in 0..k {
        for s in 0..k {
            rep.instances += 1;
            if &m.x[r] * &m.x[s] != &m.x[s] * &m.x[r] {
                return Err(fail("x_r x_t = x_t x_r", format!("r={} t={}", r + 1, s + 1)));
            }
        }
        rep.instances += 1;
        if !m.x[r].pow(dim as u32 + 1).is_zero() {
            return Err(fail("x_r nilpotent", format!("r={}", r + 1)));
        }
    }
    for r in 1..k {
        for s in 1..k {
            if r.abs_diff(s) > 1 {
                rep.instances += 1;
                if &m.psi[r - 1] * &m.psi[s - 1] != &m.psi[s - 1] * &m.psi[r - 1] {
                    return Err(fail("ψ_r ψ_t = ψ_t ψ_r", format!("r={r} t={s}")));
                }
            }
        }
    }
    for r in 1..k {
        let pr = &m.psi[r - 1];
        for t in 1..=k {
            let st = if t == r { r + 1 } else if t == r + 1 { r } else { t };
            let lhs = &(pr * &m.x[t - 1]) - &(&m.x[st - 1] * pr);
            for v in 0..dim {
                let sec = &m.sectors[v];
                let same = sec[r - 1] == sec[r];
                let c = i64::from(t == r && same) - i64::from(t == r + 1 && same);
                rep.instances += 1;
                if lhs.column(v) != unit_col(v, c) {
                    return Err(fail("dot past crossing", format!("r={r} t={t} v={v}")));
                }
            }
        }
        let sq = pr * pr;
        for v in 0..dim {
            let sec = &m.sectors[v];
            let (a, b) = (sec[r - 1], sec[r]);
            let want = if a == b {
                vec![0; dim]
            } else if cd.bilinear(a, b) == 0 {
                unit_col(v, 1)
            } else {
                let rhs = &m.x[r - 1].pow((-cd.a(a, b)) as u32) + &m.x[r].pow((-cd.a(b, a)) as u32);
                rhs.column(v)
            };
            rep.instances += 1;
            if sq.column(v) != want {
                return Err(fail("square", format!("r={r} v={v}")));
            }
        }
    }
    for r in 1..k.saturating_sub(1) {
        let (p1, p2) = (&m.psi[r - 1], &m.psi[r]);
        let lhs = &(&(p1 * p2) * p1) - &(&(p2 * p1) * p2);
        for v in 0..dim {
            let sec = &m.sectors[v];
            let want = if sec[r - 1] == sec[r + 1] && cd.bilinear(sec[r - 1], sec[r]) != 0 {
                let a = cd.a(sec[r - 1], sec[r]);
                let mut acc = Mat::zero(dim);
                for t in 0..(-a) {
                    let term = &m.x[r - 1].pow(t as u32) * &m.x[r + 1].pow((-a - 1 - t) as u32);
                    acc = &acc + &term;
                }
                acc.column(v)
            } else {
                vec![0; dim]
            };
            rep.instances += 1;
            if lhs.column(v) != want {
                return Err(fail("braid", format!("r={r} v={v}")));
            }
        }
    }
    Ok(rep)
}

/// Repeatedly applies `ẽ_i^{ε_i}` with `i` the last letter and compares with the
/// shorter `T`, down to the unit module. Returns the strip sizes.
pub fn building_t_check(cd: &CartanDatum, kr: &KrCrystal, m: &TrivModule) -> Result<Vec<i64>, ModuleError> {
    let mut word = m.word.clone();
    let mut c = m.character();
    let mut steps = vec![];
    while let Some(&i) = word.last() {
        let (e, top) = klr::etilde_top(cd, &c, i)?;
        if !(1..=2).contains(&e) || e as usize > word.len() {
            return Err(fail("building T", format!("ε_{i} = {e} on {word:?}")));
        }
        word.truncate(word.len() - e as usize);
        let shorter = TrivModule::build(cd, kr, &word)?.character();
        if !top.eq_up_to_shift(&shorter) {
            return Err(fail("building T", format!("strip of {i} does not give T({word:?})")));
        }
        steps.push(e);
        c = top;
    }
    Ok(steps)
}

/// `T(p,k) ∈ rep(Λ_{p(0)})`.
pub fn triv_rep_check(m: &TrivModule) -> Result<bool, ModuleError> {
    let Some(&first) = m.word.first() else {
        return Ok(true);
    };
    Ok(klr::in_rep(&m.character(), &WeightH::fundamental(m.n, first))?)
}

/// The 1-dimensional module `S(p,k)` for a path in `B^{ℓ,1}` of type A.
pub fn build_s_type_a(kr: &KrCrystal, word: &[usize]) -> Result<TrivModule, ModuleError> {
    if !kr.is_reversed() || kr.ty().family() != Family::A1 {
        return Err(ModuleError::Relation {
            relation: "S(p,k)".into(),
            context: KrError::NotTypeA(kr.ty().to_string()).to_string(),
        });
    }
    paths::realize(kr, word)?;
    let k = word.len();
    let n = kr.ty().n();
    Ok(TrivModule {
        word: word.to_vec(),
        n,
        flips: vec![],
        dots: vec![],
        sectors: vec![word.to_vec()],
        degrees: vec![0],
        x: vec![Mat::zero(1); k],
        psi: vec![Mat::zero(1); k.saturating_sub(1)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kr::{build_b11, build_bl1_type_a};

    fn setup(f: Family, l: usize) -> (CartanDatum, KrCrystal) {
        let t = AffineType::new(f, l).unwrap();
        (CartanDatum::build(t), build_b11(t))
    }

    #[test]
    fn type_a_is_one_dimensional() {
        let (cd, kr) = setup(Family::A1, 2);
        let m = TrivModule::build(&cd, &kr, &[0, 1]).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.character(), GradedChar::word(3, &[0, 1]));
        assert!(m.x.iter().chain(&m.psi).all(Mat::is_zero));
        verify_relations(&cd, &m).unwrap();
    }

    #[test]
    fn a4_double_zero() {
        let (cd, kr) = setup(Family::A2Even, 2);
        let m = TrivModule::build(&cd, &kr, &[0, 0]).unwrap();
        assert_eq!(m.dim(), 2);
        let want = GradedChar::word_with(3, &[0, 0], LaurentPoly::from_terms([(1, 0), (1, 2)]));
        assert!(m.character().eq_up_to_shift(&want));
        // x_1 v_0 = v_1, ψ_1 v_1 = v_0, ψ_1 v_0 = 0
        assert_eq!(m.x[0].column(0), vec![0, 1]);
        assert_eq!(m.psi[0].column(1), vec![1, 0]);
        assert_eq!(m.psi[0].column(0), vec![0, 0]);
        verify_relations(&cd, &m).unwrap();
        assert_eq!(building_t_check(&cd, &kr, &m).unwrap(), vec![2]);
        // ε^∨_0 = 2 > 1
        assert!(!triv_rep_check(&m).unwrap());
    }

    #[test]
    fn d15_bifurcation_relations() {
        let (cd, kr) = setup(Family::D1, 5);
        for word in [vec![0, 2, 3], vec![1, 0, 2], vec![2, 3, 4, 5, 3]] {
            let m = TrivModule::build(&cd, &kr, &word).unwrap();
            verify_relations(&cd, &m).unwrap();
            let p = paths::realize(&kr, &word).unwrap();
            assert!(m.character().eq_up_to_shift(&closed_form(&cd, kr.ty(), &p).unwrap()));
            building_t_check(&cd, &kr, &m).unwrap();
        }
    }

    #[test]
    fn sign_modules() {
        let t = AffineType::new(Family::A1, 2).unwrap();
        let cd = CartanDatum::build(t);
        let rev = build_bl1_type_a(t).unwrap();
        let s = build_s_type_a(&rev, &[0, 2]).unwrap();
        assert_eq!(s.character(), GradedChar::word(3, &[0, 2]));
        verify_relations(&cd, &s).unwrap();
        assert!(build_s_type_a(&build_b11(t), &[0, 1]).is_err());
    }

    #[test]
    fn unit_is_in_every_rep() {
        assert!(triv_rep_check(&TrivModule::unit(3)).unwrap());
    }
}
