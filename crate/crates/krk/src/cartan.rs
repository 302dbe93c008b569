//! Affine Cartan data: matrices, symmetrizers, central coefficients and the
//! root/weight bookkeeping shared by every other module.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CartanError;

/// Affine family tag. `A1` at rank 1 is the double-edged `A^{(1)}_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A1,
    C1,
    A2Even,
    A2Dag,
    D2,
    D1,
    B1,
    A2Odd,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A1,
        Family::C1,
        Family::A2Even,
        Family::A2Dag,
        Family::D2,
        Family::D1,
        Family::B1,
        Family::A2Odd,
    ];

    pub fn min_rank(self) -> usize {
        match self {
            Family::A1 => 1,
            Family::C1 | Family::A2Even | Family::A2Dag | Family::D2 => 2,
            Family::B1 | Family::A2Odd => 3,
            Family::D1 => 4,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::C1 => "C1",
            Family::A2Even => "A2even",
            Family::A2Dag => "A2dag",
            Family::D2 => "D2",
            Family::D1 => "D1",
            Family::B1 => "B1",
            Family::A2Odd => "A2odd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| CartanError::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineType {
    family: Family,
    rank: usize,
}

impl AffineType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CartanError> {
        if rank < family.min_rank() {
            return Err(CartanError::RankTooSmall {
                family,
                rank,
                min: family.min_rank(),
            });
        }
        Ok(AffineType { family, rank })
    }

    /// Smallest legal rank.
    pub fn minimal(family: Family) -> Self {
        AffineType { family, rank: family.min_rank() }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Size of the index set `I = {0..ℓ}`.
    pub fn n(self) -> usize {
        self.rank + 1
    }

    /// Every supported type with `rank <= max_rank`, family-major.
    pub fn all_up_to(max_rank: usize) -> Vec<AffineType> {
        let mut out = Vec::new();
        for f in Family::ALL {
            for r in f.min_rank()..=max_rank {
                out.push(AffineType { family: f, rank: r });
            }
        }
        out
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.tag(), self.rank)
    }
}

/// h-pairing vector of a weight: entry `i` is `<h_i, w>`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightH(pub Vec<i64>);

impl WeightH {
    pub fn zero(n: usize) -> Self {
        WeightH(vec![0; n])
    }

    /// Fundamental weight `Λ_i`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        WeightH(v)
    }

    pub fn add(&self, other: &WeightH) -> WeightH {
        WeightH(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightH) -> WeightH {
        WeightH(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// Element `ν = Σ ν_i α_i` of the positive root lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(n: usize) -> Self {
        RootVec(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn plus_simple(&self, i: usize) -> RootVec {
        let mut v = self.0.clone();
        v[i] += 1;
        RootVec(v)
    }

    /// `self - other`, or `None` if the difference leaves `Q^+`.
    pub fn checked_sub(&self, other: &RootVec) -> Option<RootVec> {
        let v: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        v.iter().all(|&x| x >= 0).then_some(RootVec(v))
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Content of a word over `I`.
    pub fn content(n: usize, word: &[usize]) -> RootVec {
        let mut v = vec![0; n];
        for &c in word {
            v[c] += 1;
        }
        RootVec(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    name: String,
    affine: Option<AffineType>,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    c: Vec<i64>,
}

impl CartanDatum {
    pub fn build(ty: AffineType) -> CartanDatum {
        let (a, c) = affine_matrix(ty);
        let d = minimal_symmetrizer(&a).expect("affine matrices are symmetrizable");
        CartanDatum { name: ty.to_string(), affine: Some(ty), a, d, c }
    }

    /// The rank-2 finite datum used by the appendix: index 0 is `h`, index 1 is `i`,
    /// with `a_{hi} = -1` and `a_{ih} = -2`.
    pub fn rank2_appendix() -> CartanDatum {
        let a = vec![vec![2, -1], vec![-2, 2]];
        let d = minimal_symmetrizer(&a).expect("B2 is symmetrizable");
        CartanDatum { name: "B2".into(), affine: None, a, d, c: vec![] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn affine_type(&self) -> Option<AffineType> {
        self.affine
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Central coefficients `c_i` (empty for finite data).
    pub fn central(&self) -> &[i64] {
        &self.c
    }

    /// `level(Λ_i) = c_i`.
    pub fn levels(&self) -> &[i64] {
        &self.c
    }

    /// `<h_i, ν>`.
    pub fn pairing(&self, i: usize, nu: &RootVec) -> i64 {
        self.a[i].iter().zip(&nu.0).map(|(a, x)| a * x).sum()
    }

    /// h-vector of `-ν`.
    pub fn root_weight(&self, nu: &RootVec) -> WeightH {
        WeightH((0..self.n()).map(|i| -self.pairing(i, nu)).collect())
    }

    /// `(α_i, α_j) = d_i a_{ij}`.
    pub fn bilinear(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    pub fn level(&self, w: &WeightH) -> i64 {
        self.c.iter().zip(&w.0).map(|(c, x)| c * x).sum()
    }

    pub fn level_one(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.c.get(i) == Some(&1)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (ty, rank) = match self.affine {
            Some(t) => (t.family().tag().to_string(), t.rank()),
            None => (self.name.clone(), self.n()),
        };
        serde_json::json!({
            "type": ty,
            "rank": rank,
            "cartan": self.a,
            "d": self.d,
            "c": self.c,
            "levels": self.c,
        })
    }
}

fn affine_matrix(ty: AffineType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let l = ty.rank();
    let n = l + 1;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    // simple chain on the listed range
    let chain = |edge: &mut dyn FnMut(usize, usize, i64, i64), from: usize, to: usize| {
        for k in from..to {
            edge(k, k + 1, -1, -1);
        }
    };
    let c: Vec<i64> = match ty.family() {
        Family::A1 if l == 1 => {
            edge(0, 1, -2, -2);
            vec![1, 1]
        }
        Family::A1 => {
            chain(&mut edge, 0, l);
            edge(l, 0, -1, -1);
            vec![1; n]
        }
        Family::C1 => {
            chain(&mut edge, 1, l - 1);
            edge(0, 1, -1, -2);
            edge(l - 1, l, -2, -1);
            vec![1; n]
        }
        Family::A2Even => {
            chain(&mut edge, 1, l - 1);
            edge(0, 1, -2, -1);
            edge(l - 1, l, -2, -1);
            (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect()
        }
        Family::A2Dag => {
            chain(&mut edge, 1, l - 1);
            edge(0, 1, -1, -2);
            edge(l - 1, l, -1, -2);
            (0..n).map(|i| if i == l { 1 } else { 2 }).collect()
        }
        Family::D2 => {
            chain(&mut edge, 1, l - 1);
            edge(0, 1, -2, -1);
            edge(l - 1, l, -1, -2);
            (0..n).map(|i| if i == 0 || i == l { 1 } else { 2 }).collect()
        }
        Family::D1 => {
            chain(&mut edge, 2, l - 2);
            edge(0, 2, -1, -1);
            edge(1, 2, -1, -1);
            edge(l - 2, l - 1, -1, -1);
            edge(l - 2, l, -1, -1);
            (0..n).map(|i| if i <= 1 || i >= l - 1 { 1 } else { 2 }).collect()
        }
        Family::B1 => {
            chain(&mut edge, 2, l - 1);
            edge(0, 2, -1, -1);
            edge(1, 2, -1, -1);
            edge(l - 1, l, -1, -2);
            (0..n).map(|i| if i <= 1 || i == l { 1 } else { 2 }).collect()
        }
        Family::A2Odd => {
            chain(&mut edge, 2, l - 1);
            edge(0, 2, -1, -1);
            edge(1, 2, -1, -1);
            edge(l - 1, l, -2, -1);
            (0..n).map(|i| if i <= 1 { 1 } else { 2 }).collect()
        }
    };
    (a, c)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Minimal positive integral `d` with `d_i a_{ij} = d_j a_{ji}`, or `None` when
/// the matrix is not symmetrizable (or its diagram is disconnected).
pub fn minimal_symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    // d_i as fractions num/den, propagated along the diagram
    let mut frac: Vec<Option<(i64, i64)>> = vec![None; n];
    frac[0] = Some((1, 1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let (p, q) = frac[i]?;
        for j in 0..n {
            if i == j || a[i][j] == 0 {
                continue;
            }
            // d_j = d_i a_ij / a_ji
            let (np, nq) = (p * a[i][j], q * a[j][i]);
            let g = gcd(np, nq);
            let (np, nq) = if nq < 0 { (-np / g, -nq / g) } else { (np / g, nq / g) };
            match frac[j] {
                None => {
                    frac[j] = Some((np, nq));
                    stack.push(j);
                }
                Some((x, y)) if x * nq != np * y => return None,
                Some(_) => {}
            }
        }
    }
    let fr: Vec<(i64, i64)> = frac.into_iter().collect::<Option<_>>()?;
    let lcm = fr.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q) * q);
    let ints: Vec<i64> = fr.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
    Some(ints.into_iter().map(|x| x / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a11_is_double_edged() {
        let cd = CartanDatum::build(AffineType::new(Family::A1, 1).unwrap());
        assert_eq!(cd.matrix(), &[vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(AffineType::new(Family::D1, 3).is_err());
        assert!(AffineType::new(Family::B1, 2).is_err());
        assert!(AffineType::new(Family::C1, 1).is_err());
        assert!(AffineType::new(Family::A1, 0).is_err());
        assert!(AffineType::new(Family::D1, 4).is_ok());
    }

    #[test]
    fn appendix_form() {
        let cd = CartanDatum::rank2_appendix();
        assert_eq!(cd.symmetrizer(), &[2, 1]);
        assert_eq!(cd.bilinear(0, 0), 4);
        assert_eq!(cd.bilinear(1, 1), 2);
        assert_eq!(cd.bilinear(1, 0), -2);
        assert_eq!(cd.bilinear(0, 1), -2);
    }

    #[test]
    fn pairing_examples() {
        let cd = CartanDatum::build(AffineType::new(Family::A1, 2).unwrap());
        let nu = RootVec(vec![1, 1, 0]);
        assert_eq!(cd.pairing(2, &nu), -2);
        assert_eq!(cd.pairing(1, &RootVec::simple(3, 1)), 2);
        assert_eq!(cd.pairing(0, &RootVec::zero(3)), 0);
    }

    #[test]
    fn family_tags_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("E8".parse::<Family>().is_err());
    }

    #[test]
    fn a2even_levels() {
        let cd = CartanDatum::build(AffineType::new(Family::A2Even, 4).unwrap());
        assert_eq!(cd.levels(), &[1, 2, 2, 2, 2]);
    }

    #[test]
    fn non_symmetrizable_is_rejected() {
        let a = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert!(minimal_symmetrizer(&a).is_none());
    }
}
