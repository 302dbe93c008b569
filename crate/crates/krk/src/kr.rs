//! The KR crystals `B^{1,1}` for the eight affine families, plus `B^{ℓ,1}` in
//! type A by arrow reversal.

use std::collections::BTreeMap;

use crate::cartan::{AffineType, CartanDatum, Family, WeightH};
use crate::crystal::{Arrow, CrystalGraph};
use crate::error::KrError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrCrystal {
    ty: AffineType,
    graph: CrystalGraph,
    reversed: bool,
}

/// `k` for the unbarred node, `k̄` for the barred one.
pub fn plain(k: usize) -> String {
    k.to_string()
}

pub fn barred(k: usize) -> String {
    format!("{k}\u{0304}")
}

pub const TOP: &str = "∅";

struct Builder {
    labels: Vec<String>,
    arrows: Vec<(usize, usize, usize)>,
}

impl Builder {
    fn id(&mut self, label: String) -> usize {
        match self.labels.iter().position(|l| *l == label) {
            Some(i) => i,
            None => {
                self.labels.push(label);
                self.labels.len() - 1
            }
        }
    }

    fn arrow(&mut self, src: String, colour: usize, dst: String) {
        let (s, d) = (self.id(src), self.id(dst));
        self.arrows.push((s, colour, d));
    }
}

pub fn build_b11(ty: AffineType) -> KrCrystal {
    let l = ty.rank();
    let mut b = Builder { labels: vec![], arrows: vec![] };
    // x_0 → x_1 → … → x_{upto}
    let first_half = |b: &mut Builder, upto: usize| {
        b.id(plain(0));
        for k in 1..=upto {
            b.arrow(plain(k - 1), k, plain(k));
        }
    };
    // the barred tail ending at 1̄, entered from `from` with colour `c`
    let second_half = |b: &mut Builder, from: String, c: usize| {
        b.arrow(from, c, barred(c));
        for k in (2..=c).rev() {
            b.arrow(barred(k), k - 1, barred(k - 1));
        }
    };
    match ty.family() {
        Family::A1 => {
            first_half(&mut b, l);
            b.arrow(plain(l), 0, plain(0));
        }
        Family::C1 | Family::A2Even | Family::A2Odd => {
            first_half(&mut b, l);
            second_half(&mut b, plain(l), l - 1);
        }
        Family::A2Dag | Family::D2 | Family::B1 => {
            first_half(&mut b, l);
            second_half(&mut b, plain(l), l);
        }
        Family::D1 => {
            first_half(&mut b, l - 2);
            b.arrow(plain(l - 2), l - 1, plain(l - 1));
            b.arrow(plain(l - 2), l, plain(l));
            b.arrow(plain(l - 1), l, barred(l - 1));
            b.arrow(plain(l), l - 1, barred(l - 1));
            for k in (2..l).rev() {
                b.arrow(barred(k), k - 1, barred(k - 1));
            }
        }
    }
    match ty.family() {
        Family::A1 => {}
        Family::C1 | Family::A2Dag => b.arrow(barred(1), 0, plain(0)),
        Family::A2Even | Family::D2 => {
            b.arrow(barred(1), 0, TOP.to_string());
            b.arrow(TOP.to_string(), 0, plain(0));
        }
        Family::D1 | Family::B1 | Family::A2Odd => {
            b.arrow(barred(1), 0, plain(1));
            b.arrow(barred(2), 0, plain(0));
        }
    }
    let graph = CrystalGraph::from_arrows(ty.n(), &b.labels, &b.arrows);
    KrCrystal { ty, graph, reversed: false }
}

/// `B^{ℓ,1}` of type `A^{(1)}_ℓ`: `B^{1,1}` with every arrow reversed.
pub fn build_bl1_type_a(ty: AffineType) -> Result<KrCrystal, KrError> {
    if ty.family() != Family::A1 {
        return Err(KrError::NotTypeA(ty.to_string()));
    }
    let b = build_b11(ty);
    Ok(KrCrystal { ty, graph: b.graph.reversed(), reversed: true })
}

/// Perfectness data for one level-1 index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ground {
    pub node: usize,
    pub sigma: usize,
}

impl KrCrystal {
    pub fn ty(&self) -> AffineType {
        self.ty
    }

    pub fn graph(&self) -> &CrystalGraph {
        &self.graph
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.graph.node(v).label
    }

    pub fn node(&self, label: &str) -> Result<usize, KrError> {
        self.graph.find(label).ok_or_else(|| KrError::NoSuchNode(label.to_string()))
    }

    /// Arrows of colour `i` as `(src, dst)`.
    pub fn arrows_of(&self, i: usize) -> Vec<(usize, usize)> {
        self.graph
            .arrows()
            .filter(|&(_, c, _)| c == i)
            .map(|(s, _, d)| (s, d))
            .collect()
    }

    pub fn out_colours(&self, v: usize) -> Vec<usize> {
        let nd = self.graph.node(v);
        (0..self.graph.n()).filter(|&c| nd.f[c] != Arrow::None).collect()
    }

    pub fn in_colours(&self, v: usize) -> Vec<usize> {
        let nd = self.graph.node(v);
        (0..self.graph.n()).filter(|&c| nd.e[c] != Arrow::None).collect()
    }

    /// For each level-1 `i`: the unique node with `ε = Λ_i` and `σ(i)` read off
    /// its `φ`.
    pub fn perfect_data(&self, cd: &CartanDatum) -> Result<BTreeMap<usize, Ground>, KrError> {
        if self.ty.family() == Family::C1 {
            return Err(KrError::NotPerfect(self.ty.to_string()));
        }
        let n = self.graph.n();
        let mut out = BTreeMap::new();
        for i in cd.level_one() {
            let target = WeightH::fundamental(n, i);
            let hits: Vec<usize> = (0..self.len())
                .filter(|&v| self.graph.node(v).eps == target.0)
                .collect();
            let [node] = hits[..] else {
                return Err(KrError::NotPerfect(self.ty.to_string()));
            };
            let phi = &self.graph.node(node).phi;
            let sigma = (0..n)
                .find(|&j| *phi == WeightH::fundamental(n, j).0 && cd.central()[j] == 1)
                .ok_or_else(|| KrError::NotPerfect(self.ty.to_string()))?;
            out.insert(i, Ground { node, sigma });
        }
        Ok(out)
    }

    /// Violations of the three structural facts behind unique walk realisation.
    pub fn structural_violations(&self) -> Vec<String> {
        let n = self.graph.n();
        let mut bad = vec![];
        let m = self.len();
        for i in 0..n {
            let arrows = self.arrows_of(i);
            if arrows.len() > 2 {
                bad.push(format!("{} arrows of colour {i}", arrows.len()));
            }
            let mut srcs: Vec<usize> = arrows.iter().map(|a| a.0).collect();
            let mut dsts: Vec<usize> = arrows.iter().map(|a| a.1).collect();
            srcs.sort_unstable();
            dsts.sort_unstable();
            if srcs.windows(2).any(|w| w[0] == w[1]) || dsts.windows(2).any(|w| w[0] == w[1]) {
                bad.push(format!("repeated {i}-arrow at a node"));
            }
            for (a, b) in pairs(&dsts) {
                if shares(&self.out_colours(a), &self.out_colours(b)) {
                    bad.push(format!("targets of {i}-arrows share an outgoing colour"));
                }
            }
            for (a, b) in pairs(&srcs) {
                if shares(&self.in_colours(a), &self.in_colours(b)) {
                    bad.push(format!("sources of {i}-arrows share an incoming colour"));
                }
            }
        }
        debug_assert!(m > 0);
        bad
    }

    /// Nodes with `Σ c_i wt_i ≠ 0`.
    pub fn level_zero_violations(&self, cd: &CartanDatum) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| cd.level(&self.graph.node(v).wt) != 0)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.ty.family().tag(),
            "rank": self.ty.rank(),
            "reversed": self.reversed,
            "crystal": self.graph.to_json(),
        })
    }
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter()
        .enumerate()
        .flat_map(move |(k, &a)| v[k + 1..].iter().map(move |&b| (a, b)))
}

fn shares(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::axiom_check;

    fn ty(f: Family, l: usize) -> AffineType {
        AffineType::new(f, l).unwrap()
    }

    #[test]
    fn type_a_cycle_strings() {
        for l in 1..6 {
            let t = ty(Family::A1, l);
            let b = build_b11(t);
            assert_eq!(b.len(), l + 1);
            for j in 0..=l {
                let nd = b.graph().node(b.node(&plain(j)).unwrap());
                assert_eq!(nd.eps, WeightH::fundamental(l + 1, j).0);
                assert_eq!(nd.phi, WeightH::fundamental(l + 1, (j + 1) % (l + 1)).0);
            }
        }
    }

    #[test]
    fn c1_bar_one() {
        let b = build_b11(ty(Family::C1, 3));
        let nd = b.graph().node(b.node(&barred(1)).unwrap());
        assert_eq!(nd.eps, vec![0, 1, 0, 0]);
        assert_eq!(nd.phi, vec![1, 0, 0, 0]);
    }

    #[test]
    fn a2even_zero_arrows_meet_at_top() {
        let b = build_b11(ty(Family::A2Even, 3));
        let zero = b.arrows_of(0);
        assert_eq!(zero.len(), 2);
        let top = b.node(TOP).unwrap();
        assert!(zero.iter().any(|a| a.1 == top) && zero.iter().any(|a| a.0 == top));
    }

    #[test]
    fn perfect_sigma_type_a() {
        let t = ty(Family::A1, 4);
        let cd = CartanDatum::build(t);
        let pd = build_b11(t).perfect_data(&cd).unwrap();
        for (i, g) in pd {
            assert_eq!(g.sigma, (i + 1) % 5);
        }
    }

    #[test]
    fn c1_is_not_perfect() {
        let t = ty(Family::C1, 2);
        let cd = CartanDatum::build(t);
        assert!(matches!(build_b11(t).perfect_data(&cd), Err(KrError::NotPerfect(_))));
    }

    #[test]
    fn d1_sigma_swaps() {
        let t = ty(Family::D1, 5);
        let cd = CartanDatum::build(t);
        let pd = build_b11(t).perfect_data(&cd).unwrap();
        let s: Vec<(usize, usize)> = pd.iter().map(|(&i, g)| (i, g.sigma)).collect();
        assert_eq!(s, vec![(0, 1), (1, 0), (4, 5), (5, 4)]);
    }

    #[test]
    fn reversed_type_a() {
        let t = ty(Family::A1, 2);
        let r = build_bl1_type_a(t).unwrap();
        let one = r.arrows_of(1);
        assert_eq!(one, vec![(r.node("1").unwrap(), r.node("0").unwrap())]);
        assert!(r.structural_violations().is_empty());
        assert!(build_bl1_type_a(ty(Family::C1, 2)).is_err());
    }

    #[test]
    fn d15_passes_axioms() {
        let t = ty(Family::D1, 5);
        let cd = CartanDatum::build(t);
        assert!(axiom_check(&cd, build_b11(t).graph()).passed());
    }
}
