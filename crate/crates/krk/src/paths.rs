//! Paths (colour words) in `B^{1,1}`, their walks, extension sets, arrow
//! classes, cyclotomic paths and the `φ̂` tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartan::{AffineType, Family, RootVec};
use crate::crystal::Arrow;
use crate::error::PathError;
use crate::kr::KrCrystal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ArrowClass {
    A,
    B,
    /// Member of a bifurcation pair with the given partner.
    D(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub word: Vec<usize>,
    /// Node sequences of length `k + 1`; exactly one when `k ≥ 2`.
    pub walks: Vec<Vec<usize>>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The unique walk (the first candidate when `k = 1`).
    pub fn walk(&self) -> &[usize] {
        &self.walks[0]
    }

    pub fn start(&self) -> usize {
        self.walks[0][0]
    }

    pub fn end(&self) -> usize {
        *self.walks[0].last().expect("nonempty walk")
    }

    /// `γ^+(p,k) = Σ α_{p(t)}`.
    pub fn gamma_plus(&self, n: usize) -> RootVec {
        RootVec::content(n, &self.word)
    }

    /// `A_{j1,j2}`: positions `t` (1-based) with `p(t−1) = j1`, `p(t) = j2`.
    pub fn adjacency(&self, j1: usize, j2: usize) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&t| self.word[t - 1] == j1 && self.word[t] == j2)
            .collect()
    }

    /// `E^−(p)`: colours extending the tail (union over candidate walks).
    pub fn e_minus(&self, kr: &KrCrystal) -> Vec<usize> {
        union(self.walks.iter().map(|w| kr.in_colours(w[0])))
    }

    /// `E^+(p)`: colours extending the head (union over candidate walks).
    pub fn e_plus(&self, kr: &KrCrystal) -> Vec<usize> {
        union(self.walks.iter().map(|w| kr.out_colours(*w.last().unwrap())))
    }
}

fn union(sets: impl Iterator<Item = Vec<usize>>) -> Vec<usize> {
    let mut out: Vec<usize> = sets.flatten().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn follow(kr: &KrCrystal, start: usize, word: &[usize]) -> Option<Vec<usize>> {
    let mut walk = vec![start];
    let mut cur = start;
    for &c in word {
        match kr.graph().f(cur, c) {
            Arrow::To(nx) => {
                walk.push(nx);
                cur = nx;
            }
            _ => return None,
        }
    }
    Some(walk)
}

/// All walks realising `word`.
pub fn realize(kr: &KrCrystal, word: &[usize]) -> Result<Path, PathError> {
    if word.is_empty() {
        return Err(PathError::Empty);
    }
    let walks: Vec<Vec<usize>> = (0..kr.len()).filter_map(|s| follow(kr, s, word)).collect();
    if walks.is_empty() {
        return Err(PathError::NoWalk(word.to_vec()));
    }
    assert!(
        word.len() < 2 || walks.len() == 1,
        "word {word:?} has {} walks",
        walks.len()
    );
    Ok(Path { word: word.to_vec(), walks })
}

/// Every realisable word of length `k`, sorted.
pub fn enumerate(kr: &KrCrystal, k: usize) -> Vec<Path> {
    let mut by_word: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let n = kr.graph().n();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = (0..kr.len()).map(|s| (vec![s], vec![])).collect();
    while let Some((walk, word)) = stack.pop() {
        if word.len() == k {
            by_word.entry(word).or_default().push(walk);
            continue;
        }
        let cur = *walk.last().unwrap();
        for c in 0..n {
            if let Arrow::To(nx) = kr.graph().f(cur, c) {
                let mut w2 = walk.clone();
                w2.push(nx);
                let mut p2 = word.clone();
                p2.push(c);
                stack.push((w2, p2));
            }
        }
    }
    by_word
        .into_iter()
        .filter(|(w, _)| !w.is_empty())
        .map(|(word, mut walks)| {
            walks.sort();
            Path { word, walks }
        })
        .collect()
}

/// Table 1 of arrow classes, transcribed per type.
pub fn class_table(ty: AffineType) -> Vec<ArrowClass> {
    let l = ty.rank();
    let n = ty.n();
    let mut c = vec![ArrowClass::A; n];
    match ty.family() {
        Family::A1 | Family::C1 => {}
        Family::A2Even => c[0] = ArrowClass::B,
        Family::A2Dag => c[l] = ArrowClass::B,
        Family::D2 => {
            c[0] = ArrowClass::B;
            c[l] = ArrowClass::B;
        }
        Family::D1 => {
            c[0] = ArrowClass::D(1);
            c[1] = ArrowClass::D(0);
            c[l - 1] = ArrowClass::D(l);
            c[l] = ArrowClass::D(l - 1);
        }
        Family::B1 => {
            c[0] = ArrowClass::D(1);
            c[1] = ArrowClass::D(0);
            c[l] = ArrowClass::B;
        }
        Family::A2Odd => {
            c[0] = ArrowClass::D(1);
            c[1] = ArrowClass::D(0);
        }
    }
    c
}

/// Classes read off the graph: `ℬ` when two `i`-arrows are adjacent, `𝒟` when
/// `i` and `j` form the two routes of a diamond.
pub fn derive_classes(kr: &KrCrystal) -> Vec<ArrowClass> {
    let g = kr.graph();
    let n = g.n();
    let mut out = vec![ArrowClass::A; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let adjacent = (0..kr.len()).any(|v| g.f(v, i) != Arrow::None && g.e(v, i) != Arrow::None);
        if adjacent {
            *slot = ArrowClass::B;
            continue;
        }
        for j in (0..n).filter(|&j| j != i) {
            let diamond = (0..kr.len()).any(|a| {
                let ij = g.f(a, i).target().and_then(|b| g.f(b, j).target());
                let ji = g.f(a, j).target().and_then(|b| g.f(b, i).target());
                ij.is_some() && ij == ji
            });
            if diamond {
                *slot = ArrowClass::D(j);
            }
        }
    }
    out
}

pub fn is_d_pair(classes: &[ArrowClass], i: usize, j: usize) -> bool {
    classes[i] == ArrowClass::D(j)
}

/// Forbidden indices: no cyclotomic path of tail weight `(Λ_j, Λ_i)` exists.
pub fn forbidden(ty: AffineType) -> Vec<usize> {
    match (ty.family(), ty.rank()) {
        (Family::D2, 2) => vec![1],
        (Family::D1, 4) | (Family::B1, 3) => vec![2],
        _ => vec![],
    }
}

fn walk_is_cyclotomic(
    kr: &KrCrystal,
    classes: &[ArrowClass],
    word: &[usize],
    walk: &[usize],
    i1: usize,
    i2: usize,
) -> bool {
    let g = kr.graph();
    let (start, end) = (walk[0], *walk.last().unwrap());
    let k = word.len();
    if word[0] != i2 {
        return false;
    }
    if k >= 2 {
        if word[1] == i2 || is_d_pair(classes, word[0], word[1]) {
            return false;
        }
    } else {
        if g.f(end, i2) != Arrow::None {
            return false;
        }
        if kr.out_colours(end).iter().any(|&i| is_d_pair(classes, i2, i)) {
            return false;
        }
    }
    if kr.in_colours(start) != [i1] {
        return false;
    }
    // tail cannot be extended twice by i1
    g.node(start).eps[i1] <= 1
}

/// Walks of `p` satisfying the four cyclotomic conditions for tail weight
/// `(Λ_{i1}, Λ_{i2})`. At most one survives.
pub fn cyclotomic_walks(
    kr: &KrCrystal,
    classes: &[ArrowClass],
    p: &Path,
    i1: usize,
    i2: usize,
) -> Vec<Vec<usize>> {
    let ok: Vec<Vec<usize>> = p
        .walks
        .iter()
        .filter(|w| walk_is_cyclotomic(kr, classes, &p.word, w, i1, i2))
        .cloned()
        .collect();
    assert!(ok.len() <= 1, "ambiguous cyclotomic walk for {:?}", p.word);
    ok
}

pub fn is_cyclotomic(kr: &KrCrystal, classes: &[ArrowClass], p: &Path, i1: usize, i2: usize) -> bool {
    !cyclotomic_walks(kr, classes, p, i1, i2).is_empty()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExistenceReport {
    /// `(i, k)` pairs with no witness, for non-forbidden `i`.
    pub missing: Vec<(usize, usize)>,
    /// Forbidden `i` that nevertheless had a witness.
    pub unexpected: Vec<(usize, usize)>,
    pub witnesses: usize,
}

impl ExistenceReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// A cyclotomic path of length `k` with `p(0) = i`, if one exists.
pub fn cyclotomic_witness(kr: &KrCrystal, classes: &[ArrowClass], i: usize, k: usize) -> Option<(usize, Path)> {
    let n = kr.graph().n();
    let mut paths = enumerate_from_colour(kr, i, k);
    paths.sort_by(|a, b| a.word.cmp(&b.word));
    for p in paths {
        for j in 0..n {
            if is_cyclotomic(kr, classes, &p, j, i) {
                return Some((j, p));
            }
        }
    }
    None
}

fn enumerate_from_colour(kr: &KrCrystal, i: usize, k: usize) -> Vec<Path> {
    let mut by_word: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let n = kr.graph().n();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = kr
        .arrows_of(i)
        .into_iter()
        .map(|(s, d)| (vec![s, d], vec![i]))
        .collect();
    while let Some((walk, word)) = stack.pop() {
        if word.len() == k {
            by_word.entry(word).or_default().push(walk);
            continue;
        }
        let cur = *walk.last().unwrap();
        for c in 0..n {
            if let Arrow::To(nx) = kr.graph().f(cur, c) {
                let mut w2 = walk.clone();
                w2.push(nx);
                let mut p2 = word.clone();
                p2.push(c);
                stack.push((w2, p2));
            }
        }
    }
    by_word
        .into_iter()
        .map(|(word, mut walks)| {
            walks.sort();
            Path { word, walks }
        })
        .collect()
}

pub fn cyclotomic_existence_check(kr: &KrCrystal, classes: &[ArrowClass], maxlen: usize) -> ExistenceReport {
    let forb = forbidden(kr.ty());
    let mut rep = ExistenceReport::default();
    for i in 0..kr.graph().n() {
        for k in 1..=maxlen {
            let found = cyclotomic_witness(kr, classes, i, k).is_some();
            match (found, forb.contains(&i)) {
                (true, false) => rep.witnesses += 1,
                (false, false) => rep.missing.push((i, k)),
                (true, true) => rep.unexpected.push((i, k)),
                (false, true) => {}
            }
        }
    }
    rep
}

/// `φ̂^−_j`, `φ̂^+_j` per colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiHat {
    pub minus: Vec<i64>,
    pub plus: Vec<i64>,
}

impl PhiHat {
    pub fn total(&self) -> Vec<i64> {
        self.minus.iter().zip(&self.plus).map(|(a, b)| a + b).collect()
    }
}

fn delta(b: bool) -> i64 {
    i64::from(b)
}

/// Table 4 (whose sum is Table 3), for `k ≥ 2`.
pub fn phi_hat_table(kr: &KrCrystal, classes: &[ArrowClass], p: &Path) -> PhiHat {
    assert!(p.len() >= 2);
    let (em, ep) = (p.e_minus(kr), p.e_plus(kr));
    let (first, last) = (p.word[0], *p.word.last().unwrap());
    let n = classes.len();
    let mut minus = vec![0; n];
    let mut plus = vec![0; n];
    for j in 0..n {
        let dm = delta(em.contains(&j));
        let dp = delta(ep.contains(&j));
        match classes[j] {
            ArrowClass::A => {
                minus[j] = dm;
                plus[j] = dp;
            }
            ArrowClass::B => {
                minus[j] = 2 * dm - delta(j == first);
                plus[j] = dp * (2 - delta(j == last));
            }
            ArrowClass::D(partner) => {
                minus[j] = dm + (dm - 1) * delta(partner == first);
                plus[j] = dp;
            }
        }
    }
    PhiHat { minus, plus }
}

/// Table 2, for `k ≥ 2`.
pub fn jump_table(kr: &KrCrystal, classes: &[ArrowClass], p: &Path) -> Vec<i64> {
    assert!(p.len() >= 2);
    let (em, ep) = (p.e_minus(kr), p.e_plus(kr));
    let (first, last) = (p.word[0], *p.word.last().unwrap());
    (0..classes.len())
        .map(|j| {
            let dm = delta(em.contains(&j));
            let dp = delta(ep.contains(&j));
            match classes[j] {
                ArrowClass::A | ArrowClass::D(_) => dm + dp,
                ArrowClass::B => dm * (2 - delta(j == first)) + dp * (2 - delta(j == last)),
            }
        })
        .collect()
}

/// Maximal numbers of `j`-arrows extending the tail and the head (maximum over
/// candidate walks).
pub fn phi_hat_oracle(kr: &KrCrystal, p: &Path) -> PhiHat {
    let g = kr.graph();
    let n = g.n();
    let mut minus = vec![0; n];
    let mut plus = vec![0; n];
    for w in &p.walks {
        let (s, e) = (w[0], *w.last().unwrap());
        for j in 0..n {
            minus[j] = minus[j].max(g.node(s).eps[j]);
            plus[j] = plus[j].max(g.node(e).phi[j]);
        }
    }
    PhiHat { minus, plus }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kr::build_b11;

    fn kr(f: Family, l: usize) -> KrCrystal {
        build_b11(AffineType::new(f, l).unwrap())
    }

    #[test]
    fn d15_example_walk() {
        let b = kr(Family::D1, 5);
        let p = realize(&b, &[0, 2, 3]).unwrap();
        assert_eq!(p.walks.len(), 1);
        assert_eq!(b.label(p.start()), "1\u{0304}");
        assert_eq!(p.e_plus(&b), vec![4, 5]);
        assert_eq!(p.e_minus(&b), vec![1]);
        let classes = class_table(b.ty());
        assert!(is_cyclotomic(&b, &classes, &p, 1, 0));
    }

    #[test]
    fn a2_zero_zero_has_no_walk() {
        let b = kr(Family::A1, 2);
        assert_eq!(realize(&b, &[0, 0]), Err(PathError::NoWalk(vec![0, 0])));
        let p = realize(&b, &[0, 1]).unwrap();
        assert_eq!(p.e_minus(&b), vec![2]);
        assert_eq!(p.e_plus(&b), vec![2]);
    }

    #[test]
    fn a2even_double_zero_goes_through_top() {
        let b = kr(Family::A2Even, 2);
        let p = realize(&b, &[0, 0]).unwrap();
        assert_eq!(b.label(p.walk()[1]), crate::kr::TOP);
    }

    #[test]
    fn derived_classes_match_table() {
        for ty in AffineType::all_up_to(8) {
            let b = build_b11(ty);
            assert_eq!(derive_classes(&b), class_table(ty), "{ty}");
        }
    }

    #[test]
    fn a2_phi_hat() {
        let b = kr(Family::A1, 2);
        let classes = class_table(b.ty());
        let p = realize(&b, &[0, 1]).unwrap();
        assert_eq!(phi_hat_table(&b, &classes, &p).total(), vec![0, 0, 2]);
        assert_eq!(phi_hat_oracle(&b, &p).total(), vec![0, 0, 2]);
    }

    #[test]
    fn a4_class_b_head() {
        let b = kr(Family::A2Even, 2);
        let classes = class_table(b.ty());
        let p = realize(&b, &[1, 0]).unwrap();
        assert_eq!(phi_hat_table(&b, &classes, &p).plus[0], 1);
        assert_eq!(phi_hat_oracle(&b, &p).plus[0], 1);
    }

    #[test]
    fn forbidden_sets() {
        let t = |f, l| AffineType::new(f, l).unwrap();
        assert_eq!(forbidden(t(Family::D2, 2)), vec![1]);
        assert_eq!(forbidden(t(Family::D1, 4)), vec![2]);
        assert_eq!(forbidden(t(Family::B1, 3)), vec![2]);
        assert!(forbidden(t(Family::A1, 5)).is_empty());
    }

    #[test]
    fn existence_small() {
        let b = kr(Family::A1, 2);
        let classes = class_table(b.ty());
        let rep = cyclotomic_existence_check(&b, &classes, 12);
        assert!(rep.passed());
        for f in [Family::D2, Family::B1] {
            let l = if f == Family::D2 { 2 } else { 3 };
            let b = kr(f, l);
            let classes = class_table(b.ty());
            let rep = cyclotomic_existence_check(&b, &classes, 6);
            assert!(rep.passed(), "{f}: {rep:?}");
        }
    }
}
