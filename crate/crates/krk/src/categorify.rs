//! The isomorphism `Ψ: B(Λ_top) → B^{1,1} ⊗ B(Λ_base)` matched node by node,
//! decomposition of a node into a cyclotomic path and a remainder, and the
//! case splits describing how `ẽ_j` and `f̃_j` move through that decomposition.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::cartan::{CartanDatum, Family, RootVec, WeightH};
use crate::crystal::{rooted_iso, tensor_component, Arrow, TensorComponent};
use crate::error::{CategorifyError, CrystalError};
use crate::hw::{bootstrap_build, bootstrap_predecessor, highest_seeds, HwCrystal};
use crate::klr::{eps, etilde_once, in_rep, GradedChar};
use crate::kr::KrCrystal;
use crate::paths::{derive_classes, forbidden, is_cyclotomic, is_d_pair, ArrowClass, Path};
use crate::tmod::TrivModule;

/// `Ψ` restricted to the depth-`depth` ball of `B(Λ_top)`.
pub struct PsiMap {
    cd: CartanDatum,
    kr: KrCrystal,
    classes: Vec<ArrowClass>,
    base: usize,
    top: usize,
    seed: usize,
    source: HwCrystal,
    target: HwCrystal,
    comp: TensorComponent,
    map: Vec<Option<usize>>,
    depth: usize,
    tchars: RefCell<HashMap<Vec<usize>, GradedChar>>,
}

/// A node `A` written as `⟨b⟩ ⊗ R` together with the path `p` that reaches `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub node: usize,
    pub b: usize,
    pub remainder: usize,
    pub word: Vec<usize>,
    pub walk: Vec<usize>,
    pub k: usize,
    pub gamma: Vec<i64>,
}

/// Perfect case: `Ψ: B(Λ_{σ(i)}) → B^{1,1} ⊗ B(Λ_i)`.
pub fn build_psi(cd: &CartanDatum, kr: &KrCrystal, i: usize, depth: usize) -> Result<PsiMap, CategorifyError> {
    let pd = kr.perfect_data(cd)?;
    let g = pd.get(&i).ok_or(CrystalError::NotLevelOne(i))?;
    build_psi_onto(cd, kr, i, g.sigma, depth)
}

/// `Ψ: B(Λ_top) → B^{1,1} ⊗ B(Λ_base)`, both sides bootstrapped to `depth`.
pub fn build_psi_onto(
    cd: &CartanDatum,
    kr: &KrCrystal,
    base: usize,
    top: usize,
    depth: usize,
) -> Result<PsiMap, CategorifyError> {
    if forbidden(kr.ty()).contains(&top) {
        return Err(CategorifyError::Forbidden(top));
    }
    let source = bootstrap_build(cd, kr, top, depth)?;
    let target = bootstrap_build(cd, kr, base, depth)?;
    PsiMap::new(cd, kr, source, target, depth)
}

/// `Ψ` with `B(Λ_top)` for the level-one `top`, choosing `base` as the
/// bootstrap does.
pub fn build_psi_for(cd: &CartanDatum, kr: &KrCrystal, top: usize, depth: usize) -> Result<PsiMap, CategorifyError> {
    if forbidden(kr.ty()).contains(&top) {
        return Err(CategorifyError::Forbidden(top));
    }
    let base = bootstrap_predecessor(cd, kr, top)?;
    build_psi_onto(cd, kr, base, top, depth)
}

fn favour_key(word: &[usize], top: usize) -> Vec<(bool, usize)> {
    word.iter().map(|&c| (c != top, c)).collect()
}

/// Words reachable from `word` by swapping adjacent class-𝒟 partners.
pub fn d_class(classes: &[ArrowClass], word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut q = VecDeque::from([word.to_vec()]);
    while let Some(w) = q.pop_front() {
        for t in 0..w.len().saturating_sub(1) {
            if is_d_pair(classes, w[t], w[t + 1]) {
                let mut v = w.clone();
                v.swap(t, t + 1);
                if seen.insert(v.clone()) {
                    q.push_back(v);
                }
            }
        }
    }
    seen
}

impl PsiMap {
    /// Match `source` with the component of `B^{1,1} ⊗ target` whose
    /// highest-weight node has weight `Λ_source`.
    pub fn new(
        cd: &CartanDatum,
        kr: &KrCrystal,
        source: HwCrystal,
        target: HwCrystal,
        depth: usize,
    ) -> Result<PsiMap, CategorifyError> {
        let n = cd.n();
        let depth = depth.min(source.depth()).min(target.depth());
        let top = (0..n)
            .find(|&j| *source.lambda() == WeightH::fundamental(n, j))
            .ok_or_else(|| CrystalError::NoTarget(source.lambda().0.clone()))?;
        let base = (0..n)
            .find(|&j| *target.lambda() == WeightH::fundamental(n, j))
            .ok_or_else(|| CrystalError::NoTarget(target.lambda().0.clone()))?;
        let (seed, _) = highest_seeds(kr, target.lambda())
            .into_iter()
            .find(|(_, w)| w == source.lambda())
            .ok_or_else(|| CrystalError::NoTarget(source.lambda().0.clone()))?;
        let comp = tensor_component(kr.graph(), target.graph(), (seed, target.root()), depth);
        let pairs = rooted_iso(source.graph(), source.root(), &comp.graph, 0, depth)
            .map_err(|e| CrystalError::NotIsomorphic(e.to_string()))?;
        let mut map = vec![None; source.len()];
        for (a, c) in pairs {
            map[a] = Some(c);
        }
        Ok(PsiMap {
            cd: cd.clone(),
            kr: kr.clone(),
            classes: derive_classes(kr),
            base,
            top,
            seed,
            source,
            target,
            comp,
            map,
            depth,
            tchars: RefCell::new(HashMap::new()),
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn seed(&self) -> usize {
        self.seed
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn source(&self) -> &HwCrystal {
        &self.source
    }

    pub fn target(&self) -> &HwCrystal {
        &self.target
    }

    pub fn kr(&self) -> &KrCrystal {
        &self.kr
    }

    pub fn classes(&self) -> &[ArrowClass] {
        &self.classes
    }

    /// Nodes of the source inside the matched ball.
    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.map.len()).filter(|&a| self.map[a].is_some())
    }

    /// `Ψ(A) = ⟨b⟩ ⊗ R` as `(b, R)`.
    pub fn image(&self, a: usize) -> Result<(usize, usize), CategorifyError> {
        let c = self.map.get(a).copied().flatten().ok_or(CategorifyError::Untrusted(a))?;
        Ok(self.comp.pairs[c])
    }

    /// Morphism checks on the matched ball: weights, `ε`, `φ` agree and `Ψ`
    /// commutes with every known `ẽ_j`, `f̃_j`.
    pub fn strictness_violations(&self) -> Vec<String> {
        let g = self.source.graph();
        let h = &self.comp.graph;
        let mut bad = vec![];
        for a in self.domain() {
            let c = self.map[a].expect("domain");
            let (na, nc) = (g.node(a), h.node(c));
            if na.wt != nc.wt || na.eps != nc.eps || na.phi != nc.phi {
                bad.push(format!("{}: data differ", na.label));
            }
            for j in 0..g.n() {
                for (x, y, op) in [(g.f(a, j), h.f(c, j), "f̃"), (g.e(a, j), h.e(c, j), "ẽ")] {
                    match (x, y) {
                        (Arrow::To(x), Arrow::To(y)) => {
                            if let Some(mx) = self.map[x] {
                                if mx != y {
                                    bad.push(format!("{}: {op}_{j} does not commute", na.label));
                                }
                            }
                        }
                        (Arrow::None, Arrow::None) | (Arrow::Unknown, _) | (_, Arrow::Unknown) => {}
                        _ => bad.push(format!("{}: {op}_{j} defined on one side only", na.label)),
                    }
                }
            }
        }
        bad
    }

    /// Walks of length `|γ|` and colour content `γ` ending at `b`.
    fn walks_into(&self, b: usize, gamma: &RootVec) -> Vec<(Vec<usize>, Vec<usize>)> {
        let g = self.kr.graph();
        let mut out = vec![];
        let mut stack = vec![(vec![b], vec![], gamma.0.clone())];
        while let Some((walk, word, rest)) = stack.pop() {
            if rest.iter().all(|&x| x == 0) {
                let mut walk = walk;
                let mut word = word;
                walk.reverse();
                word.reverse();
                out.push((word, walk));
                continue;
            }
            let cur = *walk.last().expect("nonempty");
            for c in (0..g.n()).filter(|&c| rest[c] > 0) {
                if let Arrow::To(prev) = g.e(cur, c) {
                    let (mut w2, mut p2, mut r2) = (walk.clone(), word.clone(), rest.clone());
                    w2.push(prev);
                    p2.push(c);
                    r2[c] -= 1;
                    stack.push((w2, p2, r2));
                }
            }
        }
        out.sort();
        out
    }

    /// `A ↦ (b, R, p)`: the endpoint and remainder come from `Ψ`, the path is
    /// the unique (up to class-𝒟 swaps) cyclotomic walk ending at `b` with
    /// content `ν_A − ν_R`, canonically favouring `p(0)`-coloured steps.
    pub fn decompose(&self, a: usize) -> Result<Decomposition, CategorifyError> {
        let (b, r) = self.image(a)?;
        let gamma = self
            .source
            .nu(a)
            .checked_sub(self.target.nu(r))
            .ok_or_else(|| CategorifyError::Check(format!("ν_A − ν_R ∉ Q⁺ at {}", self.label(a))))?;
        let k = gamma.height() as usize;
        if k == 0 {
            if a == self.source.root() && b == self.seed {
                return Ok(Decomposition {
                    node: a,
                    b,
                    remainder: r,
                    word: vec![],
                    walk: vec![b],
                    k: 0,
                    gamma: gamma.0,
                });
            }
            return Err(CategorifyError::NoPath(a));
        }
        let cands: Vec<(Vec<usize>, Vec<usize>)> = self
            .walks_into(b, &gamma)
            .into_iter()
            .filter(|(word, walk)| {
                let p = Path { word: word.clone(), walks: vec![walk.clone()] };
                is_cyclotomic(&self.kr, &self.classes, &p, self.base, self.top)
            })
            .collect();
        let Some(first) = cands.first() else {
            return Err(CategorifyError::NoPath(a));
        };
        let class = d_class(&self.classes, &first.0);
        if cands.iter().any(|(w, _)| !class.contains(w)) {
            return Err(CategorifyError::Ambiguous { node: a, paths: cands.into_iter().map(|c| c.0).collect() });
        }
        let (word, walk) = cands
            .into_iter()
            .min_by_key(|(w, _)| favour_key(w, self.top))
            .expect("nonempty");
        Ok(Decomposition { node: a, b, remainder: r, word, walk, k, gamma: gamma.0 })
    }

    pub fn label(&self, a: usize) -> &str {
        &self.source.graph().node(a).label
    }

    /// `Char T(p,k)` for the colour word of `p`.
    pub fn t_char(&self, word: &[usize]) -> Result<GradedChar, CategorifyError> {
        if let Some(c) = self.tchars.borrow().get(word) {
            return Ok(c.clone());
        }
        let c = TrivModule::build(&self.cd, &self.kr, word)?.character();
        self.tchars.borrow_mut().insert(word.to_vec(), c.clone());
        Ok(c)
    }

    fn eps_t(&self, word: &[usize], j: usize) -> Result<i64, CategorifyError> {
        if word.is_empty() {
            return Ok(0);
        }
        Ok(eps(&self.t_char(word)?, j)?)
    }

    /// `φ^{Λ_base}_j(R)` by `δ_{j,base} + ε_j(R) + wt_j(R)` with `wt(R) = −ν_R`,
    /// and the crystal's own `φ_j(R)`.
    pub fn phi_remainder(&self, r: usize, j: usize) -> (i64, i64) {
        let nd = self.target.graph().node(r);
        let formula = i64::from(j == self.base) + nd.eps[j] - self.cd.pairing(j, self.target.nu(r));
        (formula, nd.phi[j])
    }

    fn same_t(&self, word: &[usize], expected: &GradedChar) -> Result<bool, CategorifyError> {
        let c = if word.is_empty() { GradedChar::unit(self.cd.n()) } else { self.t_char(word)? };
        Ok(c.eq_up_to_shift(expected))
    }

    /// Case split for `ẽ_j A`; `None` when `ẽ_j A = 0` or the hypothesis on
    /// class-ℬ `p(0)` excludes `A`.
    pub fn verify_etil(&self, a: usize, j: usize) -> Result<Option<OpCheck>, CategorifyError> {
        let Arrow::To(a2) = self.source.graph().e(a, j) else {
            return Ok(None);
        };
        if self.classes[self.top] == ArrowClass::B && self.source.nu(a).height() <= 1 {
            return Ok(None);
        }
        let d = self.decompose(a)?;
        let d2 = self.decompose(a2)?;
        let eps_t = self.eps_t(&d.word, j)?;
        let (phi_r, phi_crystal) = self.phi_remainder(d.remainder, j);
        let eps_b = self.kr.graph().node(d.b).eps[j];
        let tensor_left = eps_b > phi_crystal;
        let theorem_left = eps_t > phi_r;
        let check = |left: bool| -> Result<Result<(), String>, CategorifyError> {
            if left {
                if d2.remainder != d.remainder {
                    return Ok(Err("remainder changed although ẽ_j should act on T".into()));
                }
                let Ok(expected) = etilde_once(&self.cd, &self.t_char(&d.word)?, j) else {
                    return Ok(Err("ẽ_j T(p,k) has no character of the expected shape".into()));
                };
                if !self.same_t(&d2.word, &expected)? {
                    return Ok(Err(format!("T-part {:?} is not ẽ_j T({:?})", d2.word, d.word)));
                }
            } else {
                if self.target.graph().e(d.remainder, j).target() != Some(d2.remainder) {
                    return Ok(Err("remainder is not ẽ_j R".into()));
                }
                if d2.b != d.b || d2.gamma != d.gamma {
                    return Ok(Err("T-part changed although ẽ_j should act on R".into()));
                }
            }
            Ok(Ok(()))
        };
        let case = if theorem_left { OpCase::E1 } else { OpCase::E2 };
        self.finish(a, j, case, &d, eps_t, phi_r, phi_crystal, eps_b, theorem_left, tensor_left, &check)
            .map(Some)
    }

    /// Case split for `f̃_j A`; `None` when `φ_j(A) = 0` or `f̃_j A` is beyond
    /// the matched ball.
    pub fn verify_ftil(&self, a: usize, j: usize) -> Result<Option<OpCheck>, CategorifyError> {
        if self.source.graph().node(a).phi[j] == 0 {
            return Ok(None);
        }
        let Arrow::To(a2) = self.source.graph().f(a, j) else {
            return Ok(None);
        };
        if self.map[a2].is_none() {
            return Ok(None);
        }
        let d = self.decompose(a)?;
        let d2 = self.decompose(a2)?;
        let eps_t = self.eps_t(&d.word, j)?;
        let (phi_r, phi_crystal) = self.phi_remainder(d.remainder, j);
        let eps_b = self.kr.graph().node(d.b).eps[j];
        let tensor_left = eps_b >= phi_crystal;
        let theorem_left = eps_t >= phi_r;
        let check = |left: bool| -> Result<Result<(), String>, CategorifyError> {
            if left {
                if d2.remainder != d.remainder {
                    return Ok(Err("remainder changed although f̃_j should act on T".into()));
                }
                if d2.k != d.k + 1 {
                    return Ok(Err(format!("r(f̃_j A) = {} but r(A) = {}", d2.k, d.k)));
                }
                let mut ext = d.word.clone();
                ext.push(j);
                if !d_class(&self.classes, &ext).contains(&d2.word) {
                    return Ok(Err(format!("path {:?} is not {:?} extended by {j}", d2.word, d.word)));
                }
            } else {
                if self.target.graph().f(d.remainder, j).target() != Some(d2.remainder) {
                    return Ok(Err("remainder is not f̃_j R".into()));
                }
                if d2.b != d.b || d2.gamma != d.gamma {
                    return Ok(Err("T-part changed although f̃_j should act on R".into()));
                }
            }
            Ok(Ok(()))
        };
        let case = if theorem_left { OpCase::F1 } else { OpCase::F2 };
        self.finish(a, j, case, &d, eps_t, phi_r, phi_crystal, eps_b, theorem_left, tensor_left, &check)
            .map(Some)
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        &self,
        a: usize,
        j: usize,
        case: OpCase,
        d: &Decomposition,
        eps_t: i64,
        phi_r: i64,
        phi_crystal: i64,
        eps_b: i64,
        theorem_left: bool,
        tensor_left: bool,
        check: &dyn Fn(bool) -> Result<Result<(), String>, CategorifyError>,
    ) -> Result<OpCheck, CategorifyError> {
        let anchor_mismatch = eps_t != eps_b;
        let (outcome, detail) = if phi_r != phi_crystal {
            (Outcome::Fail, Some(format!("φ formula {phi_r} ≠ crystal φ {phi_crystal}")))
        } else if anchor_mismatch && d.k <= 1 {
            match check(tensor_left)? {
                Ok(()) => (Outcome::Logged, Some(format!("ε_{j}(T) = {eps_t} but ε_{j}(b) = {eps_b}"))),
                Err(e) => (Outcome::Fail, Some(format!("tensor branch: {e}"))),
            }
        } else if theorem_left != tensor_left {
            (Outcome::Fail, Some(format!("theorem and tensor branches differ (k = {})", d.k)))
        } else {
            match check(theorem_left)? {
                Ok(()) => (Outcome::Pass, None),
                Err(e) => (Outcome::Fail, Some(e)),
            }
        };
        Ok(OpCheck {
            node: self.label(a).to_string(),
            j,
            case,
            k: d.k,
            word: d.word.clone(),
            eps_t,
            phi_r,
            eps_b,
            tensor_left,
            outcome,
            detail,
        })
    }

    /// Every node and every applicable `j` of the matched ball.
    pub fn sweep(&self) -> TheoremReport {
        let mut rep = TheoremReport { base: self.base, top: self.top, depth: self.depth, ..Default::default() };
        let n = self.cd.n();
        for a in self.domain() {
            rep.nodes += 1;
            match self.decompose(a) {
                Ok(d) => {
                    rep.decomposed += 1;
                    rep.max_k = rep.max_k.max(d.k);
                    if !self.remainder_in_target(&d) {
                        rep.record_failure(format!("{}: remainder outside B(Λ_base)", self.label(a)));
                    }
                }
                Err(e) => {
                    rep.record_failure(format!("{}: {e}", self.label(a)));
                    continue;
                }
            }
            for j in 0..n {
                for res in [self.verify_etil(a, j), self.verify_ftil(a, j)] {
                    match res {
                        Ok(Some(c)) => rep.absorb(c),
                        Ok(None) => {}
                        Err(e) => rep.record_failure(format!("{} j={j}: {e}", self.label(a))),
                    }
                }
            }
        }
        rep
    }

    fn remainder_in_target(&self, d: &Decomposition) -> bool {
        d.remainder < self.target.len() && d.walk.first() == Some(&self.seed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OpCase {
    E1,
    E2,
    F1,
    F2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass,
    /// A length-one path whose `ε_j(T)` differs from `ε_j(b)`; the observed
    /// move follows the tensor rule.
    Logged,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct OpCheck {
    pub node: String,
    pub j: usize,
    pub case: OpCase,
    pub k: usize,
    pub word: Vec<usize>,
    pub eps_t: i64,
    pub phi_r: i64,
    pub eps_b: i64,
    pub tensor_left: bool,
    pub outcome: Outcome,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TheoremReport {
    pub base: usize,
    pub top: usize,
    pub depth: usize,
    pub nodes: usize,
    pub decomposed: usize,
    pub max_k: usize,
    pub cases: HashMapCounts,
    pub f1_instances: usize,
    pub logged: Vec<OpCheck>,
    pub failures: usize,
    pub first_failures: Vec<String>,
}

/// Case counters in a fixed order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct HashMapCounts {
    pub e1: usize,
    pub e2: usize,
    pub f1: usize,
    pub f2: usize,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.decomposed == self.nodes
    }

    fn record_failure(&mut self, msg: String) {
        self.failures += 1;
        if self.first_failures.len() < 10 {
            self.first_failures.push(msg);
        }
    }

    fn absorb(&mut self, c: OpCheck) {
        match c.case {
            OpCase::E1 => self.cases.e1 += 1,
            OpCase::E2 => self.cases.e2 += 1,
            OpCase::F1 => {
                self.cases.f1 += 1;
                self.f1_instances += 1;
            }
            OpCase::F2 => self.cases.f2 += 1,
        }
        match c.outcome {
            Outcome::Pass => {}
            Outcome::Logged => self.logged.push(c),
            Outcome::Fail => {
                let msg = format!("{} j={} {:?}: {}", c.node, c.j, c.case, c.detail.clone().unwrap_or_default());
                self.record_failure(msg);
            }
        }
    }
}

/// One displayed correspondence `A ↦ ⟨b⟩ ⊗ R` of the type `C^{(1)}` example.
#[derive(Clone, Debug, Serialize)]
pub struct Display {
    pub node: String,
    pub expected: (String, String),
    pub computed: (String, String),
    pub status: DisplayStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DisplayStatus {
    Holds,
    /// The printed value contradicts the tensor rule; the computed value
    /// matches the tensor-rule prediction recorded alongside.
    PrintedValueDeviates,
    Fails,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeCReport {
    pub rank: usize,
    pub displays: Vec<Display>,
    pub character_checks: Vec<(String, bool)>,
}

impl TypeCReport {
    pub fn passed(&self) -> bool {
        self.displays.iter().all(|d| d.status != DisplayStatus::Fails) && self.character_checks.iter().all(|c| c.1)
    }
}

/// The two maps `B(Λ_0), B(Λ_2) → B^{1,1} ⊗ B(Λ_1)` on the four displayed
/// nodes, plus the module-side membership checks behind them.
pub fn type_c_branching_check(l: usize, depth: usize) -> Result<TypeCReport, CategorifyError> {
    let ty = crate::cartan::AffineType::new(Family::C1, l).map_err(|e| CategorifyError::Check(e.to_string()))?;
    let cd = CartanDatum::build(ty);
    let kr = crate::kr::build_b11(ty);
    let depth = depth.max(2);
    let psi0 = build_psi_onto(&cd, &kr, 1, 0, depth)?;
    let psi2 = build_psi_onto(&cd, &kr, 1, 2, depth)?;
    let word_label = |w: &[usize]| if w.is_empty() { "u".to_string() } else { w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".") };
    // (map, f-word, printed b, printed R-word, tensor-rule b, tensor-rule R-word)
    let cases: [(&PsiMap, Vec<usize>, &str, Vec<usize>, &str, Vec<usize>); 4] = [
        (&psi0, vec![0, 1], "1", vec![], "0", vec![1]),
        (&psi2, vec![2, 1], "2", vec![1], "2", vec![1]),
        (&psi0, vec![0], "0", vec![], "0", vec![]),
        (&psi2, vec![2], "2", vec![], "2", vec![]),
    ];
    let mut displays = vec![];
    for (psi, fw, pb, pr, tb, tr) in cases {
        let a = psi.source().apply_f(&fw).ok_or(CategorifyError::NoPath(0))?;
        let (b, r) = psi.image(a)?;
        let computed = (psi.kr().label(b).to_string(), psi.target().graph().node(r).label.clone());
        let printed = (pb.to_string(), word_label(&pr));
        let predicted = (tb.to_string(), word_label(&tr));
        let status = if computed == printed {
            DisplayStatus::Holds
        } else if computed == predicted {
            DisplayStatus::PrintedValueDeviates
        } else {
            DisplayStatus::Fails
        };
        let node = format!("f̃_{{{}}} u_Λ{}", fw.iter().rev().map(|c| c.to_string()).collect::<String>(), psi.top());
        displays.push(Display { node, expected: printed, computed, status });
    }
    let n = cd.n();
    let lam = |i: usize| WeightH::fundamental(n, i);
    let c01 = GradedChar::word(n, &[0, 1]);
    let c21 = GradedChar::word(n, &[2, 1]);
    let c1 = GradedChar::word(n, &[1]);
    let char_eq = |a: &GradedChar, b: &GradedChar| a.eq_up_to_shift(b);
    let t01 = psi0.t_char(&[0, 1])?;
    let character_checks = vec![
        ("L(1) ∈ rep(Λ1)".into(), in_rep(&c1, &lam(1))?),
        ("L(01) ∈ rep(Λ0)".into(), in_rep(&c01, &lam(0))?),
        ("L(21) ∈ rep(Λ2)".into(), in_rep(&c21, &lam(2))?),
        ("L(1) ∉ rep(Λ0)".into(), !in_rep(&c1, &lam(0))?),
        ("ẽ^∨_0 L(01) = L(1)".into(), char_eq(&c01.left_strip(0), &c1)),
        ("T(01) = L(01)".into(), char_eq(&t01, &c01)),
    ];
    Ok(TypeCReport { rank: l, displays, character_checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AffineType;
    use crate::hw::partition_model;
    use crate::kr::build_b11;

    fn setup(f: Family, l: usize) -> (CartanDatum, KrCrystal) {
        let t = AffineType::new(f, l).unwrap();
        (CartanDatum::build(t), build_b11(t))
    }

    #[test]
    fn figure_two_from_partitions() {
        let (cd, kr) = setup(Family::A1, 2);
        let src = partition_model(&kr, 0, 4).unwrap();
        let tgt = partition_model(&kr, 2, 4).unwrap();
        let psi = PsiMap::new(&cd, &kr, src, tgt, 4).unwrap();
        let look = |lab: &str| {
            let a = psi.source().graph().find(lab).unwrap();
            let (b, r) = psi.image(a).unwrap();
            (kr.label(b).to_string(), psi.target().graph().node(r).label.clone())
        };
        assert_eq!(look("∅"), ("2".into(), "∅".into()));
        assert_eq!(look("(2,1)"), ("1".into(), "(1)".into()));
        assert_eq!(look("(3,1)"), ("2".into(), "(1)".into()));
        assert!(psi.strictness_violations().is_empty());
    }

    #[test]
    fn decompose_two_one() {
        let (cd, kr) = setup(Family::A1, 2);
        let src = partition_model(&kr, 0, 5).unwrap();
        let tgt = partition_model(&kr, 2, 5).unwrap();
        let psi = PsiMap::new(&cd, &kr, src, tgt, 5).unwrap();
        let a = psi.source().graph().find("(2,1)").unwrap();
        let d = psi.decompose(a).unwrap();
        assert_eq!(d.word, vec![0, 1]);
        assert_eq!(d.k, 2);
        assert_eq!(d.gamma, vec![1, 1, 0]);
        assert_eq!(psi.target().graph().node(d.remainder).label, "(1)");
    }

    #[test]
    fn etil_examples() {
        let (cd, kr) = setup(Family::A1, 2);
        let src = partition_model(&kr, 0, 5).unwrap();
        let tgt = partition_model(&kr, 2, 5).unwrap();
        let psi = PsiMap::new(&cd, &kr, src, tgt, 5).unwrap();
        let node = |l: &str| psi.source().graph().find(l).unwrap();
        let c = psi.verify_etil(node("(2)"), 1).unwrap().unwrap();
        assert_eq!((c.case, c.eps_t, c.phi_r, c.outcome), (OpCase::E1, 1, 0, Outcome::Pass));
        let c = psi.verify_etil(node("(2,1)"), 2).unwrap().unwrap();
        assert_eq!((c.case, c.eps_t, c.phi_r, c.outcome), (OpCase::E2, 0, 0, Outcome::Pass));
        let c = psi.verify_ftil(node("∅"), 0).unwrap().unwrap();
        assert_eq!((c.case, c.outcome), (OpCase::F1, Outcome::Pass));
        let c = psi.verify_ftil(node("(1)"), 2).unwrap().unwrap();
        assert_eq!((c.case, c.phi_r, c.outcome), (OpCase::F2, 1, Outcome::Pass));
    }

    #[test]
    fn sweep_type_a() {
        let (cd, kr) = setup(Family::A1, 2);
        let psi = build_psi(&cd, &kr, 2, 6).unwrap();
        let rep = psi.sweep();
        assert!(rep.passed(), "{:?}", rep.first_failures);
    }

    #[test]
    fn type_c_displays() {
        let rep = type_c_branching_check(2, 4).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.displays[0].status, DisplayStatus::PrintedValueDeviates);
        assert!(rep.displays[1..].iter().all(|d| d.status == DisplayStatus::Holds));
    }

    #[test]
    fn forbidden_top_is_refused() {
        let (cd, kr) = setup(Family::B1, 3);
        assert!(matches!(build_psi_for(&cd, &kr, 2, 3), Err(CategorifyError::Forbidden(2))));
    }
}
