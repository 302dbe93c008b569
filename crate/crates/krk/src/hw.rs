//! Depth-truncated highest-weight crystals `B(Λ)`: the iterative tensor
//! bootstrap through `B^{1,1}`, the restricted-partition model in type A and
//! extraction of level-2 components from tensor squares.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Family, RootVec, WeightH};
use crate::crystal::{
    e_acts_left, f_acts_left, rooted_iso, tensor_component, tensor_eps, tensor_phi, Arrow, CrystalGraph,
    Node, Tensor, TensorComponent,
};
use crate::error::CrystalError;
use crate::kr::{plain, KrCrystal};

/// `B(Λ)` cut off at f-depth `depth`. The root (node 0) is `u_Λ`; nodes of
/// depth `< depth` carry exact arrows, deeper arrows are `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwCrystal {
    graph: CrystalGraph,
    lambda: WeightH,
    depth: usize,
}

impl HwCrystal {
    /// Wrap a graph rooted at node 0, relabelling nodes by their first
    /// f-word from the root.
    pub fn from_graph(mut graph: CrystalGraph, lambda: WeightH, depth: usize) -> Self {
        let words = first_words(&graph);
        for (v, w) in words.into_iter().enumerate() {
            graph.node_mut(v).label = w;
        }
        HwCrystal { graph, lambda, depth }
    }

    fn from_component(tc: TensorComponent, lambda: WeightH, depth: usize) -> Self {
        Self::from_graph(tc.graph, lambda, depth)
    }

    pub fn graph(&self) -> &CrystalGraph {
        &self.graph
    }

    pub fn lambda(&self) -> &WeightH {
        &self.lambda
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn node_depth(&self, v: usize) -> usize {
        self.graph.node(v).depth.unwrap_or(0)
    }

    pub fn nu(&self, v: usize) -> &RootVec {
        self.graph.node(v).nu.as_ref().expect("hw nodes carry ν")
    }

    /// All `f̃` out of `v` are known.
    pub fn is_trusted(&self, v: usize) -> bool {
        self.node_depth(v) < self.depth
    }

    /// `f̃_{w_k} ⋯ f̃_{w_1} u` with `w` read left to right.
    pub fn apply_f(&self, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(self.root(), |v, &i| self.graph.f(v, i).target())
    }

    /// The depth-`d` ball as its own crystal (ids are preserved when the
    /// graph is already ordered by depth, which every builder here ensures).
    pub fn truncate(&self, d: usize) -> HwCrystal {
        let ids: Vec<usize> = (0..self.len()).filter(|&v| self.node_depth(v) <= d).collect();
        let mut graph = self.graph.subgraph(&ids);
        for v in 0..graph.len() {
            if graph.node(v).depth == Some(d) {
                let phi = graph.node(v).phi.clone();
                let nd = graph.node_mut(v);
                for (i, a) in nd.f.iter_mut().enumerate() {
                    *a = if phi[i] == 0 { Arrow::None } else { Arrow::Unknown };
                }
            }
        }
        HwCrystal { graph, lambda: self.lambda.clone(), depth: d.min(self.depth) }
    }

    /// Node-level bookkeeping: `C1` against `Λ − ν`, ν-increments along arrows,
    /// constant level, and a unique highest-weight node in the trusted region.
    pub fn invariant_violations(&self, cd: &CartanDatum) -> Vec<String> {
        let n = cd.n();
        let level = cd.level(&self.lambda);
        let mut bad = vec![];
        for v in 0..self.len() {
            let nd = self.graph.node(v);
            let nu = self.nu(v);
            let expect = self.lambda.add(&cd.root_weight(nu));
            if nd.wt != expect {
                bad.push(format!("{}: wt {:?} but Λ − ν gives {:?}", nd.label, nd.wt.0, expect.0));
            }
            for i in 0..n {
                if nd.phi[i] != nd.eps[i] + nd.wt.0[i] {
                    bad.push(format!("{}: φ_{i} ≠ ε_{i} + wt_{i}", nd.label));
                }
                if let Arrow::To(w) = nd.f[i] {
                    if *self.nu(w) != nu.plus_simple(i) {
                        bad.push(format!("{}: ν does not grow by α_{i}", nd.label));
                    }
                }
            }
            if cd.level(&nd.wt) != level {
                bad.push(format!("{}: level changes", nd.label));
            }
            if v != self.root() && nd.depth.is_some_and(|d| d <= self.depth) && nd.is_highest() {
                bad.push(format!("{}: second highest-weight node", nd.label));
            }
        }
        if self.graph.node(self.root()).nu.as_ref().is_some_and(|x| x.height() != 0) {
            bad.push("root has ν ≠ 0".into());
        }
        bad
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda.0,
            "depth": self.depth,
            "crystal": self.graph.to_json(),
        })
    }
}

/// First f-word (BFS, colours ascending) reaching each node; `u` for the root.
fn first_words(g: &CrystalGraph) -> Vec<String> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; g.len()];
    if g.is_empty() {
        return vec![];
    }
    words[0] = Some(vec![]);
    let mut q = VecDeque::from([0usize]);
    while let Some(v) = q.pop_front() {
        for i in 0..g.n() {
            if let Arrow::To(w) = g.f(v, i) {
                if words[w].is_none() {
                    let mut wd = words[v].clone().unwrap_or_default();
                    wd.push(i);
                    words[w] = Some(wd);
                    q.push_back(w);
                }
            }
        }
    }
    words
        .into_iter()
        .map(|w| match w {
            Some(w) if w.is_empty() => "u".to_string(),
            Some(w) => w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("."),
            None => "?".to_string(),
        })
        .collect()
}

/// The single node `u_Λ` with every `f̃` unknown (or zero where `φ = 0`).
fn seed_crystal(lambda: &WeightH) -> HwCrystal {
    let n = lambda.0.len();
    let mut g = CrystalGraph::new(n);
    g.push(Node {
        label: "u".into(),
        wt: lambda.clone(),
        eps: vec![0; n],
        phi: lambda.0.clone(),
        depth: Some(0),
        nu: Some(RootVec::zero(n)),
        f: lambda.0.iter().map(|&x| if x == 0 { Arrow::None } else { Arrow::Unknown }).collect(),
        e: vec![Arrow::None; n],
    });
    HwCrystal { graph: g, lambda: lambda.clone(), depth: 0 }
}

/// Index `s` with `B^{1,1} ⊗ B(Λ_s)` containing `B(Λ_t)` as the component used
/// by the bootstrap: `σ^{-1}(t)` for perfect types, and for `C^{(1)}` the
/// chain `Λ_0 ← Λ_1`, `Λ_t ← Λ_{t−1}`.
pub fn bootstrap_predecessor(cd: &CartanDatum, kr: &KrCrystal, t: usize) -> Result<usize, CrystalError> {
    if kr.ty().family() == Family::C1 {
        return Ok(if t == 0 { 1 } else { t - 1 });
    }
    let pd = kr.perfect_data(cd)?;
    pd.iter()
        .find(|(_, g)| g.sigma == t)
        .map(|(&i, _)| i)
        .ok_or(CrystalError::NotLevelOne(t))
}

/// Highest-weight nodes `b ⊗ u_Λ` of `B^{1,1} ⊗ B(Λ)` (those with `ε(b) ≤ Λ`),
/// as `(kr node, weight)`.
pub fn highest_seeds(kr: &KrCrystal, lambda: &WeightH) -> Vec<(usize, WeightH)> {
    (0..kr.len())
        .filter_map(|b| {
            let nd = kr.graph().node(b);
            let fits = nd.eps.iter().zip(&lambda.0).all(|(e, l)| e <= l);
            fits.then(|| (b, nd.wt.add(lambda)))
        })
        .collect()
}

/// One bootstrap round: the component of `B^{1,1} ⊗ C` whose highest-weight
/// node has weight `target`.
pub fn bootstrap_round(kr: &KrCrystal, c: &HwCrystal, target: &WeightH, depth: usize) -> Result<HwCrystal, CrystalError> {
    let (b, _) = highest_seeds(kr, c.lambda())
        .into_iter()
        .find(|(_, w)| w == target)
        .ok_or_else(|| CrystalError::NoTarget(target.0.clone()))?;
    let tc = tensor_component(kr.graph(), c.graph(), (b, c.root()), depth);
    Ok(HwCrystal::from_component(tc, target.clone(), depth))
}

/// `rounds` bootstrap rounds ending at `Λ_target`.
pub fn bootstrap_rounds(
    cd: &CartanDatum,
    kr: &KrCrystal,
    target: usize,
    depth: usize,
    rounds: usize,
) -> Result<HwCrystal, CrystalError> {
    let n = cd.n();
    let mut chain = vec![target];
    for _ in 0..rounds {
        let last = *chain.last().expect("nonempty");
        chain.push(bootstrap_predecessor(cd, kr, last)?);
    }
    chain.reverse();
    let mut cur = seed_crystal(&WeightH::fundamental(n, chain[0]));
    for &t in &chain[1..] {
        cur = bootstrap_round(kr, &cur, &WeightH::fundamental(n, t), depth)?;
    }
    Ok(cur)
}

/// `B(Λ_target)` to depth `depth`: add bootstrap rounds until the depth ball
/// agrees for two consecutive round counts.
pub fn bootstrap_build(cd: &CartanDatum, kr: &KrCrystal, target: usize, depth: usize) -> Result<HwCrystal, CrystalError> {
    if target >= cd.n() || cd.central()[target] != 1 {
        return Err(CrystalError::NotLevelOne(target));
    }
    let limit = depth + 4;
    let mut prev: Option<HwCrystal> = None;
    for rounds in 1..=limit {
        let cur = bootstrap_rounds(cd, kr, target, depth, rounds)?;
        if let Some(p) = &prev {
            if rooted_iso(p.graph(), p.root(), cur.graph(), cur.root(), depth).is_ok() {
                return Ok(cur);
            }
        }
        prev = Some(cur);
    }
    Err(CrystalError::NoStabilization(limit))
}

/// `(ℓ+1)`-restricted partitions realising `B(Λ_i)` in type `A^{(1)}_ℓ`, with
/// crystal operators from the full row expansion `λ ↦ ⟨k_1⟩ ⊗ ⟨k_2⟩ ⊗ ⋯ ⊗ u`.
pub struct PartitionModel {
    kr: KrCrystal,
    l: usize,
    i: usize,
}

pub type Partition = Vec<usize>;

pub fn partition_label(p: &[usize]) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

pub fn is_restricted(p: &[usize], l: usize) -> bool {
    let mut padded = p.to_vec();
    padded.push(0);
    padded.windows(2).all(|w| w[0] >= w[1] && w[0] - w[1] < l + 1)
}

/// Top-row removal `λ ↦ (k, μ)` with `k ≡ λ_1 + i − 1 (mod ℓ+1)`.
pub fn psi_row(l: usize, i: usize, p: &[usize]) -> (usize, Partition) {
    let m = l + 1;
    let first = p.first().copied().unwrap_or(0);
    let k = (first + i + m - 1) % m;
    (k, p.iter().skip(1).copied().collect())
}

impl PartitionModel {
    pub fn new(kr: KrCrystal, i: usize) -> Result<Self, CrystalError> {
        if kr.ty().family() != Family::A1 {
            return Err(CrystalError::Kr(crate::error::KrError::NotTypeA(kr.ty().to_string())));
        }
        let l = kr.ty().rank();
        Ok(PartitionModel { kr, l, i })
    }

    fn m(&self) -> usize {
        self.l + 1
    }

    /// Residue content `ν` of the boxes.
    pub fn content(&self, p: &[usize]) -> RootVec {
        let m = self.m();
        let mut nu = vec![0; m];
        for (r, &len) in p.iter().enumerate() {
            for c in 0..len {
                nu[(self.i + c + m * (r + 1) - r) % m] += 1;
            }
        }
        RootVec(nu)
    }

    /// Factor nodes of the expansion (padded with empty rows) and the tail weight.
    fn expand(&self, p: &[usize]) -> (Vec<usize>, WeightH) {
        let m = self.m();
        let rows = p.len() + m + 1;
        let factors = (1..=rows)
            .map(|r| {
                let len = p.get(r - 1).copied().unwrap_or(0);
                let k = (len + self.i + m * rows - r) % m;
                self.kr.node(&plain(k)).expect("type A node")
            })
            .collect();
        let tail = (self.i + m * rows - rows) % m;
        (factors, WeightH::fundamental(m, tail))
    }

    /// `(ε, φ)` of every suffix `b_r ⊗ ⋯ ⊗ u`; entry `rows` is `u`.
    fn suffixes(&self, factors: &[usize], tail: &WeightH) -> Vec<Node> {
        let m = self.m();
        let u = Node {
            label: String::new(),
            wt: tail.clone(),
            eps: vec![0; m],
            phi: tail.0.clone(),
            depth: None,
            nu: None,
            f: vec![],
            e: vec![],
        };
        let mut out = vec![u];
        for &b in factors.iter().rev() {
            let bn = self.kr.graph().node(b);
            let s = out.last().expect("nonempty");
            out.push(Node {
                wt: bn.wt.add(&s.wt),
                eps: tensor_eps(bn, s),
                phi: tensor_phi(bn, s),
                ..s.clone()
            });
        }
        out.reverse();
        out
    }

    /// `ε` and `φ` of `λ`.
    pub fn data(&self, p: &[usize]) -> (Vec<i64>, Vec<i64>) {
        let (factors, tail) = self.expand(p);
        let s = self.suffixes(&factors, &tail);
        (s[0].eps.clone(), s[0].phi.clone())
    }

    /// `f̃_j λ` (`raise = false`) or `ẽ_j λ` (`raise = true`).
    pub fn act(&self, p: &[usize], j: usize, raise: bool) -> Result<Option<Partition>, CrystalError> {
        let (factors, tail) = self.expand(p);
        let s = self.suffixes(&factors, &tail);
        let whole = &s[0];
        if (raise && whole.eps[j] == 0) || (!raise && whole.phi[j] == 0) {
            return Ok(None);
        }
        for (r, &b) in factors.iter().enumerate() {
            let bn = self.kr.graph().node(b);
            let here = if raise { e_acts_left(bn, &s[r + 1], j) } else { f_acts_left(bn, &s[r + 1], j) };
            if !here {
                continue;
            }
            let moved = if raise { self.kr.graph().e(b, j) } else { self.kr.graph().f(b, j) };
            if moved.target().is_none() {
                return Err(CrystalError::Inconsistent(format!(
                    "operator {j} kills row {} of {}",
                    r + 1,
                    partition_label(p)
                )));
            }
            let mut q: Partition = (0..factors.len()).map(|t| p.get(t).copied().unwrap_or(0)).collect();
            if raise {
                q[r] -= 1;
            } else {
                q[r] += 1;
            }
            while q.last() == Some(&0) {
                q.pop();
            }
            if !is_restricted(&q, self.l) {
                return Err(CrystalError::Inconsistent(format!(
                    "{} leaves the restricted partitions",
                    partition_label(&q)
                )));
            }
            return Ok(Some(q));
        }
        Err(CrystalError::Inconsistent(format!("operator {j} reaches the padding of {}", partition_label(p))))
    }

    /// BFS from `∅` along `f̃` up to size `depth`.
    pub fn build(&self, depth: usize) -> Result<(HwCrystal, Vec<Partition>), CrystalError> {
        let m = self.m();
        let lambda = WeightH::fundamental(m, self.i);
        let mut parts: Vec<Partition> = vec![vec![]];
        let mut index: HashMap<Partition, usize> = HashMap::from([(vec![], 0)]);
        let mut f_arrows: Vec<Vec<Arrow>> = vec![];
        let mut q = VecDeque::from([0usize]);
        while let Some(v) = q.pop_front() {
            let p = parts[v].clone();
            let size: usize = p.iter().sum();
            let (_, phi) = self.data(&p);
            let mut row = vec![Arrow::None; m];
            for (j, slot) in row.iter_mut().enumerate() {
                if phi[j] == 0 {
                    continue;
                }
                if size >= depth {
                    *slot = Arrow::Unknown;
                    continue;
                }
                let next = self.act(&p, j, false)?.expect("φ > 0");
                let w = *index.entry(next.clone()).or_insert_with(|| {
                    parts.push(next);
                    q.push_back(parts.len() - 1);
                    parts.len() - 1
                });
                *slot = Arrow::To(w);
            }
            if f_arrows.len() <= v {
                f_arrows.resize(v + 1, vec![]);
            }
            f_arrows[v] = row;
        }
        let mut g = CrystalGraph::new(m);
        for (v, p) in parts.iter().enumerate() {
            let (eps, phi) = self.data(p);
            let mut e = vec![Arrow::None; m];
            for (j, slot) in e.iter_mut().enumerate() {
                if eps[j] > 0 {
                    let prev = self.act(p, j, true)?.expect("ε > 0");
                    let w = index.get(&prev).copied().ok_or_else(|| {
                        CrystalError::Inconsistent(format!("ẽ_{j} {} is unreachable", partition_label(p)))
                    })?;
                    *slot = Arrow::To(w);
                }
            }
            let wt = WeightH(phi.iter().zip(&eps).map(|(a, b)| a - b).collect());
            g.push(Node {
                label: partition_label(p),
                wt,
                eps,
                phi,
                depth: Some(p.iter().sum()),
                nu: Some(self.content(p)),
                f: f_arrows[v].clone(),
                e,
            });
        }
        Ok((HwCrystal { graph: g, lambda, depth }, parts))
    }
}

/// Type-A `B(Λ_i)` from partitions, labelled by the partitions themselves.
pub fn partition_model(kr: &KrCrystal, i: usize, depth: usize) -> Result<HwCrystal, CrystalError> {
    Ok(PartitionModel::new(kr.clone(), i)?.build(depth)?.0)
}

/// A component extracted from a tensor product of two highest-weight crystals.
#[derive(Clone, Debug)]
pub struct Extracted {
    pub crystal: HwCrystal,
    /// Depth of the seed `x` in the left factor.
    pub seed_depth: usize,
    /// Number of highest-weight seeds with the target weight at that depth.
    pub multiplicity: usize,
}

/// The component of `A ⊗ B` generated by `x ⊗ u_B`, with `x` a
/// depth-minimal seed of weight `target`. Only depths up to
/// `depth − depth(x)` are trusted.
pub fn extract_level2(a: &HwCrystal, b: &HwCrystal, target: &WeightH, depth: usize) -> Result<Extracted, CrystalError> {
    let t = Tensor::new(a.graph(), b.graph());
    let limit = depth.min(a.depth()).min(b.depth());
    let seeds: Vec<usize> = (0..a.len())
        .filter(|&x| a.node_depth(x) <= limit)
        .filter(|&x| t.wt((x, b.root())) == *target && t.is_highest((x, b.root())))
        .collect();
    let best = seeds
        .iter()
        .map(|&x| a.node_depth(x))
        .min()
        .ok_or_else(|| CrystalError::NoTarget(target.0.clone()))?;
    let at_best: Vec<usize> = seeds.into_iter().filter(|&x| a.node_depth(x) == best).collect();
    let x = at_best[0];
    let trusted = limit - best;
    let tc = tensor_component(a.graph(), b.graph(), (x, b.root()), trusted);
    Ok(Extracted {
        crystal: HwCrystal::from_component(tc, target.clone(), trusted),
        seed_depth: best,
        multiplicity: at_best.len(),
    })
}

/// One highest-weight component of `B^{1,1} ⊗ B(Λ)` and the summand it matched.
#[derive(Clone, Debug, Serialize)]
pub struct FoundComponent {
    pub seed: String,
    pub weight: Vec<i64>,
    pub matched: Option<String>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub depth: usize,
    pub found: Vec<FoundComponent>,
    /// Claimed summands that no component matched.
    pub missing: Vec<String>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.found.iter().all(|c| c.matched.is_some())
    }
}

/// Split `B^{1,1} ⊗ base` into highest-weight components to depth `depth` and
/// match them one-to-one with `claimed` by rooted isomorphism.
pub fn decomposition_check(
    kr: &KrCrystal,
    base: &HwCrystal,
    claimed: &[(String, &HwCrystal)],
    depth: usize,
) -> DecompositionReport {
    let depth = depth.min(base.depth());
    let mut used = vec![false; claimed.len()];
    let mut found = vec![];
    for (b, w) in highest_seeds(kr, base.lambda()) {
        let tc = tensor_component(kr.graph(), base.graph(), (b, base.root()), depth);
        let mut matched = None;
        let mut reason = Some("no summand with this weight".to_string());
        for (k, (name, h)) in claimed.iter().enumerate() {
            if used[k] || *h.lambda() != w {
                continue;
            }
            let d = depth.min(h.depth());
            match rooted_iso(&tc.graph, 0, h.graph(), h.root(), d) {
                Ok(_) => {
                    used[k] = true;
                    matched = Some(name.clone());
                    reason = None;
                    break;
                }
                Err(e) => reason = Some(format!("{name}: {e}")),
            }
        }
        found.push(FoundComponent { seed: kr.label(b).to_string(), weight: w.0, matched, reason });
    }
    let missing = claimed
        .iter()
        .zip(&used)
        .filter(|(_, &u)| !u)
        .map(|((name, _), _)| name.clone())
        .collect();
    DecompositionReport { depth, found, missing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AffineType;
    use crate::crystal::axiom_check;
    use crate::kr::build_b11;

    fn setup(f: Family, l: usize) -> (CartanDatum, KrCrystal) {
        let t = AffineType::new(f, l).unwrap();
        (CartanDatum::build(t), build_b11(t))
    }

    #[test]
    fn psi_rows_of_small_partitions() {
        assert_eq!(psi_row(2, 0, &[2, 1]), (1, vec![1]));
        assert_eq!(psi_row(2, 0, &[1]), (0, vec![]));
        assert_eq!(psi_row(2, 0, &[]), (2, vec![]));
    }

    #[test]
    fn partition_counts_a2() {
        let (cd, kr) = setup(Family::A1, 2);
        let h = partition_model(&kr, 0, 4).unwrap();
        assert_eq!(h.len(), 10);
        assert!(h.invariant_violations(&cd).is_empty());
        let c = h.graph().find("(2,1)").unwrap();
        let two = h.graph().find("(2)").unwrap();
        assert_eq!(h.graph().e(c, 2), Arrow::To(two));
    }

    #[test]
    fn bootstrap_matches_partitions() {
        for l in 2..=3 {
            let (cd, kr) = setup(Family::A1, l);
            for i in 0..=l {
                let a = bootstrap_build(&cd, &kr, i, 6).unwrap();
                let b = partition_model(&kr, i, 6).unwrap();
                assert!(a.invariant_violations(&cd).is_empty());
                rooted_iso(a.graph(), 0, b.graph(), 0, 6).unwrap();
                assert_eq!(a.len(), b.len());
            }
        }
    }

    #[test]
    fn bootstrap_axioms_all_types() {
        for ty in AffineType::all_up_to(4) {
            let cd = CartanDatum::build(ty);
            let kr = build_b11(ty);
            for i in cd.level_one() {
                let h = bootstrap_build(&cd, &kr, i, 4).unwrap();
                assert!(h.invariant_violations(&cd).is_empty(), "{ty} Λ_{i}");
                let trusted: Vec<usize> = (0..h.len()).filter(|&v| h.is_trusted(v)).collect();
                let rep = axiom_check(&cd, &h.graph().subgraph(&trusted));
                assert!(rep.passed(), "{ty} Λ_{i}: {:?}", rep.violations.first());
            }
        }
    }

    #[test]
    fn type_c_components() {
        let (cd, kr) = setup(Family::C1, 2);
        let b1 = bootstrap_build(&cd, &kr, 1, 5).unwrap();
        let seeds: Vec<String> = highest_seeds(&kr, b1.lambda()).iter().map(|(b, _)| kr.label(*b).to_string()).collect();
        assert_eq!(seeds.len(), 2);
        let b0 = bootstrap_build(&cd, &kr, 0, 5).unwrap();
        let b2 = bootstrap_build(&cd, &kr, 2, 5).unwrap();
        let rep = decomposition_check(&kr, &b1, &[("B(Λ0)".into(), &b0), ("B(Λ2)".into(), &b2)], 5);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn truncation_keeps_prefix() {
        let (cd, kr) = setup(Family::A1, 2);
        let h = bootstrap_build(&cd, &kr, 0, 5).unwrap();
        let t = h.truncate(3);
        rooted_iso(h.graph(), 0, t.graph(), 0, 3).unwrap();
        assert!(t.len() < h.len());
    }
}
