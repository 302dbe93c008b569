//! Verification suites and the machine-readable run report.
//!
//! Each suite is a list of named checks with counters and the first failure
//! seen. Reports serialise deterministically; wall-clock timings are optional.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::appendix::{appendix_suite as appendix_report, lcal_jump_anchors};
use crate::cartan::{AffineType, CartanDatum, Family, WeightH};
use crate::categorify::{build_psi_onto, d_class, type_c_branching_check, PsiMap};
use crate::crystal::{axiom_check, rooted_iso, CrystalGraph};
use crate::error::CategorifyError;
use crate::hw::{
    bootstrap_build, bootstrap_predecessor, decomposition_check, extract_level2, partition_model, HwCrystal,
};
use crate::klr::{char_lin, eps, eps_vee, in_rep, jump, phi_lambda, serre_clean, GradedChar};
use crate::kr::{build_b11, build_bl1_type_a, KrCrystal};
use crate::paths::{
    class_table, cyclotomic_existence_check, derive_classes, enumerate, forbidden, is_cyclotomic, jump_table,
    phi_hat_oracle, phi_hat_table, realize,
};
use crate::tmod::{building_t_check, closed_form, triv_rep_check, verify_relations, TrivModule};

/// One named check with counters.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counts: BTreeMap<String, i64>,
    pub failures: i64,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, counts: BTreeMap::new(), failures: 0, first_failure: None }
    }

    pub fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }

    pub fn add(&mut self, key: &str, v: i64) {
        *self.counts.entry(key.to_string()).or_insert(0) += v;
    }

    pub fn set(&mut self, key: &str, v: i64) {
        self.counts.insert(key.to_string(), v);
    }

    pub fn get(&self, key: &str) -> i64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.passed = false;
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(msg.into());
        }
    }

    /// Record `ok`; on failure keep `msg()` as context.
    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for suite in &self.suites {
            let t = suite.millis.map(|m| format!(" ({m} ms)")).unwrap_or_default();
            s.push_str(&format!("[{}] {}{t}\n", if suite.passed { "PASS" } else { "FAIL" }, suite.name));
            for c in &suite.checks {
                let counts: Vec<String> = c.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                s.push_str(&format!("  {} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, counts.join(" ")));
                if let Some(f) = &c.first_failure {
                    s.push_str(&format!("       first failure: {f}\n"));
                }
            }
        }
        s
    }
}

fn run_suite(name: &str, timing: bool, f: impl FnOnce() -> Vec<Check>) -> SuiteReport {
    let start = Instant::now();
    let checks = f();
    let millis = timing.then(|| start.elapsed().as_millis() as u64);
    SuiteReport { name: name.to_string(), passed: checks.iter().all(|c| c.passed), checks, millis }
}

/// Levels of the fundamental weights as listed under each Dynkin diagram.
pub fn printed_levels(ty: AffineType) -> Vec<i64> {
    let l = ty.rank();
    let one: Vec<usize> = match ty.family() {
        Family::A1 | Family::C1 => (0..=l).collect(),
        Family::A2Even => vec![0],
        Family::A2Dag => vec![l],
        Family::D2 => vec![0, l],
        Family::D1 => vec![0, 1, l - 1, l],
        Family::B1 => vec![0, 1, l],
        Family::A2Odd => vec![0, 1],
    };
    (0..=l).map(|i| if one.contains(&i) { 1 } else { 2 }).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn cartan_checks(types: &[AffineType]) -> Vec<Check> {
    let mut shape = Check::new("generalized Cartan matrix");
    let mut null = Check::new("null vector");
    let mut sym = Check::new("symmetrizable, minimal d");
    let mut lev = Check::new("level lists");
    let mut datums: Vec<CartanDatum> = types.iter().map(|&t| CartanDatum::build(t)).collect();
    datums.push(CartanDatum::rank2_appendix());
    for cd in &datums {
        let n = cd.n();
        let name = cd.name().to_string();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (cd.a(i, j), cd.a(j, i));
                let ok = if i == j { a == 2 } else { a <= 0 && ((a == 0) == (b == 0)) };
                shape.expect(ok, || format!("{name}: a[{i}][{j}]"));
                shape.bump("entries");
                sym.expect(cd.bilinear(i, j) == cd.bilinear(j, i), || format!("{name}: ({i},{j})"));
                sym.bump("pairs");
            }
        }
        let d = cd.symmetrizer();
        let g = d.iter().fold(0, |g, &x| gcd(g, x));
        sym.expect(d.iter().all(|&x| x > 0) && g == 1, || format!("{name}: d = {d:?}"));
        let Some(ty) = cd.affine_type() else { continue };
        for j in 0..n {
            let s: i64 = (0..n).map(|i| cd.central()[i] * cd.a(i, j)).sum();
            null.expect(s == 0, || format!("{ty}: column {j} gives {s}"));
        }
        null.bump("types");
        lev.expect(cd.levels() == printed_levels(ty), || format!("{ty}: {:?}", cd.levels()));
        lev.bump("types");
    }
    vec![shape, null, sym, lev]
}

pub fn kr_checks(types: &[AffineType]) -> Vec<Check> {
    let mut bullets = Check::new("unique-walk bullets");
    let mut level0 = Check::new("level-zero weights");
    let mut axioms = Check::new("crystal axioms");
    let mut classes = Check::new("arrow classes from graph");
    let mut perfect = Check::new("perfectness data");
    for &ty in types {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let v = kr.structural_violations();
        bullets.expect(v.is_empty(), || format!("{ty}: {}", v.join("; ")));
        bullets.bump("types");
        let z = kr.level_zero_violations(&cd);
        level0.expect(z.is_empty(), || format!("{ty}: nodes {z:?}"));
        level0.add("nodes", kr.len() as i64);
        let ax = axiom_check(&cd, kr.graph());
        axioms.expect(ax.passed(), || format!("{ty}: {:?}", ax.violations.first()));
        axioms.add("nodes", ax.checked_nodes as i64);
        classes.expect(derive_classes(&kr) == class_table(ty), || format!("{ty}"));
        classes.bump("types");
        match (ty.family(), kr.perfect_data(&cd)) {
            (Family::C1, Err(_)) => perfect.bump("not perfect"),
            (Family::C1, Ok(_)) => perfect.fail(format!("{ty} reported perfect")),
            (_, Ok(pd)) => {
                perfect.expect(pd.len() == cd.level_one().len(), || format!("{ty}: {} grounds", pd.len()));
                perfect.add("grounds", pd.len() as i64);
            }
            (_, Err(e)) => perfect.fail(format!("{ty}: {e}")),
        }
        if ty.family() == Family::A1 {
            match build_bl1_type_a(ty) {
                Ok(r) => {
                    let v = r.structural_violations();
                    bullets.expect(v.is_empty(), || format!("{ty} reversed: {}", v.join("; ")));
                }
                Err(e) => bullets.fail(format!("{ty} reversed: {e}")),
            }
        }
    }
    vec![bullets, level0, axioms, classes, perfect]
}

/// Bootstrapped `B(Λ_i)` for every level-one `i`: axioms and weight bookkeeping.
pub fn crystal_checks(types: &[AffineType], depth: usize) -> Vec<Check> {
    let mut c = Check::new("highest weight crystals");
    for &ty in types {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        for i in cd.level_one() {
            match bootstrap_build(&cd, &kr, i, depth) {
                Ok(h) => {
                    let v = h.invariant_violations(&cd);
                    c.expect(v.is_empty(), || format!("{ty} Λ{i}: {}", v.join("; ")));
                    let ax = axiom_check(&cd, h.graph());
                    c.expect(ax.passed(), || format!("{ty} Λ{i}: {:?}", ax.violations.first()));
                    c.add("nodes", h.len() as i64);
                    c.bump("crystals");
                }
                Err(e) => c.fail(format!("{ty} Λ{i}: {e}")),
            }
        }
    }
    vec![c]
}

fn drawn_arrows(h: &HwCrystal, depth: usize) -> Vec<(String, String, usize)> {
    let g = h.graph();
    let mut out: Vec<(String, String, usize)> = g
        .arrows()
        .filter(|&(s, _, t)| h.node_depth(s) < depth && h.node_depth(t) <= depth)
        .map(|(s, c, t)| (g.node(s).label.clone(), g.node(t).label.clone(), c))
        .collect();
    out.sort();
    out
}

fn figure(list: &[(&str, &str, usize)]) -> Vec<(String, String, usize)> {
    let mut v: Vec<_> = list.iter().map(|&(a, b, c)| (a.to_string(), b.to_string(), c)).collect();
    v.sort();
    v
}

/// The two small figures of `B(Λ_0)`, `B(Λ_2)` for `A^{(1)}_2` and the drawn
/// correspondence `B(Λ_0) ≅ B^{1,1} ⊗ B(Λ_2)`.
pub fn figure_checks() -> Vec<Check> {
    let ty = AffineType::new(Family::A1, 2).expect("valid");
    let cd = CartanDatum::build(ty);
    let kr = build_b11(ty);
    let mut small = Check::new("fundamental crystals to depth 3");
    let mut big = Check::new("B(Λ0) to depth 4");
    let mut psi = Check::new("Ψ on the drawn nodes");
    let left = figure(&[("∅", "(1)", 0), ("(1)", "(2)", 1), ("(1)", "(1,1)", 2), ("(1,1)", "(1,1,1)", 1), ("(2)", "(2,1)", 2)]);
    let right = figure(&[("∅", "(1)", 2), ("(1)", "(2)", 0), ("(1)", "(1,1)", 1), ("(1,1)", "(1,1,1)", 0), ("(2)", "(2,1)", 1)]);
    let depth4 = figure(&[
        ("∅", "(1)", 0),
        ("(1)", "(2)", 1),
        ("(1)", "(1,1)", 2),
        ("(2)", "(2,1)", 2),
        ("(1,1)", "(1,1,1)", 1),
        ("(2,1)", "(2,2)", 0),
        ("(2,1)", "(3,1)", 2),
        ("(1,1,1)", "(2,1,1)", 1),
        ("(1,1,1)", "(1,1,1,1)", 0),
    ]);
    let built = |i: usize, d: usize| partition_model(&kr, i, d);
    match (built(0, 4), built(2, 4)) {
        (Ok(b0), Ok(b2)) => {
            for (name, h, want) in [("Λ0", &b0, &left), ("Λ2", &b2, &right)] {
                let got = drawn_arrows(h, 3);
                small.expect(got == *want, || format!("{name}: {got:?}"));
                small.add("arrows", got.len() as i64);
                let nodes = (0..h.len()).filter(|&v| h.node_depth(v) <= 3).count();
                small.expect(nodes == 6, || format!("{name}: {nodes} nodes"));
            }
            let got = drawn_arrows(&b0, 4);
            big.expect(got == depth4, || format!("{got:?}"));
            let nodes = (0..b0.len()).filter(|&v| b0.node_depth(v) <= 4).count();
            big.expect(nodes == 10, || format!("{nodes} nodes"));
            big.set("nodes", nodes as i64);
            big.set("arrows", got.len() as i64);
            match PsiMap::new(&cd, &kr, b0, b2, 4) {
                Ok(map) => {
                    let pairs = [
                        ("∅", "2", "∅"),
                        ("(1)", "0", "∅"),
                        ("(2)", "1", "∅"),
                        ("(2,1)", "1", "(1)"),
                        ("(2,2)", "1", "(2)"),
                        ("(1,1)", "0", "(1)"),
                        ("(1,1,1)", "0", "(1,1)"),
                        ("(3,1)", "2", "(1)"),
                        ("(2,1,1)", "1", "(1,1)"),
                        ("(1,1,1,1)", "0", "(1,1,1)"),
                    ];
                    for (a, b, r) in pairs {
                        let got = map
                            .source()
                            .graph()
                            .find(a)
                            .and_then(|v| map.image(v).ok())
                            .map(|(x, y)| (kr.label(x).to_string(), map.target().graph().node(y).label.clone()));
                        psi.expect(got == Some((b.to_string(), r.to_string())), || format!("{a} ↦ {got:?}"));
                        psi.bump("pairs");
                    }
                    let v = map.strictness_violations();
                    psi.expect(v.is_empty(), || v.join("; "));
                }
                Err(e) => psi.fail(e.to_string()),
            }
        }
        (Err(e), _) | (_, Err(e)) => small.fail(e.to_string()),
    }
    vec![small, big, psi]
}

/// Partition model against the bootstrap for type `A^{(1)}_ℓ`.
pub fn cross_model_checks(ranks: &[usize], depth: usize) -> Vec<Check> {
    let mut c = Check::new("partition model ≅ bootstrap");
    for &l in ranks {
        let Ok(ty) = AffineType::new(Family::A1, l) else {
            c.fail(format!("rank {l}"));
            continue;
        };
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        for i in 0..=l {
            let res = partition_model(&kr, i, depth).and_then(|p| Ok((p, bootstrap_build(&cd, &kr, i, depth)?)));
            match res {
                Ok((p, b)) => match rooted_iso(p.graph(), p.root(), b.graph(), b.root(), depth) {
                    Ok(m) => {
                        c.add("matched nodes", m.len() as i64);
                        c.bump("crystals");
                    }
                    Err(e) => c.fail(format!("{ty} Λ{i}: {e}")),
                },
                Err(e) => c.fail(format!("{ty} Λ{i}: {e}")),
            }
        }
    }
    vec![c]
}

/// Jump and `φ̂` tables against characters of `T(p,k)` and the extension oracle.
pub fn table_checks(types: &[AffineType], maxlen: usize) -> Vec<Check> {
    let mut jumps = Check::new("jump table = jump of character");
    let mut phis = Check::new("φ̂ table = φ^Λ of character = extension oracle");
    let mut split = Check::new("φ̂± split = tail/head oracle");
    for &ty in types {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let classes = class_table(ty);
        let n = cd.n();
        for k in 2..=maxlen {
            for p in enumerate(&kr, k) {
                let c = match TrivModule::build(&cd, &kr, &p.word) {
                    Ok(m) => m.character(),
                    Err(e) => {
                        jumps.fail(format!("{ty} {:?}: {e}", p.word));
                        continue;
                    }
                };
                let table = jump_table(&kr, &classes, &p);
                let from_char: Result<Vec<i64>, _> = (0..n).map(|j| jump(&cd, &c, j)).collect();
                jumps.bump("paths");
                match from_char {
                    Ok(v) => jumps.expect(v == table, || format!("{ty} {:?}: table {table:?} char {v:?}", p.word)),
                    Err(e) => jumps.fail(format!("{ty} {:?}: {e}", p.word)),
                }
                let lam = WeightH::fundamental(n, p.word[0]);
                let in_rep_p0 = in_rep(&c, &lam).unwrap_or(false);
                if !in_rep_p0 {
                    phis.bump("outside rep(Λ_p(0)), excluded");
                    continue;
                }
                phis.bump("paths");
                let hat = phi_hat_table(&kr, &classes, &p);
                let oracle = phi_hat_oracle(&kr, &p);
                let from_char: Vec<i64> = (0..n).map(|j| phi_lambda(&cd, &c, &lam, j).unwrap_or(i64::MIN)).collect();
                let t = hat.total();
                phis.expect(t == from_char && t == oracle.total(), || {
                    format!("{ty} {:?}: table {t:?} char {from_char:?} oracle {:?}", p.word, oracle.total())
                });
                split.bump("paths");
                split.expect(hat == oracle, || format!("{ty} {:?}: table {hat:?} oracle {oracle:?}", p.word));
            }
        }
    }
    vec![jumps, phis, split]
}

fn word_paths(kr: &KrCrystal, maxlen: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=maxlen {
        out.extend(enumerate(kr, k).into_iter().map(|p| p.word));
    }
    out
}

/// `T(p,k)` for every realisable word: relations, closed form, building from
/// the unit, Serre, cyclotomic membership.
pub fn tmod_checks(types: &[AffineType], maxlen: usize) -> Vec<Check> {
    let mut rel = Check::new("KLR relations, dots nilpotent");
    let mut chr = Check::new("character = closed form");
    let mut build = Check::new("built from the unit by f̃");
    let mut serre = Check::new("Serre operators vanish");
    let mut strings = Check::new("ε, ε^∨ ∈ {0,1,2}");
    let mut cyc = Check::new("cyclotomic T ∈ rep(Λ_p(0))");
    let mut dimc = Check::new("dimension 2^d");
    for &ty in types {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let classes = class_table(ty);
        let n = cd.n();
        for word in word_paths(&kr, maxlen) {
            let m = match TrivModule::build(&cd, &kr, &word) {
                Ok(m) => m,
                Err(e) => {
                    rel.fail(format!("{ty} {word:?}: {e}"));
                    continue;
                }
            };
            let ctx = || format!("{ty} {word:?}");
            match verify_relations(&cd, &m) {
                Ok(r) => rel.add("instances", r.instances as i64),
                Err(e) => rel.fail(format!("{}: {e}", ctx())),
            }
            rel.bump("modules");
            dimc.expect(m.dim() == 1 << (m.flips.len() + m.dots.len()), ctx);
            dimc.bump("modules");
            let c = m.character();
            if word.is_empty() {
                continue;
            }
            let Ok(p) = realize(&kr, &word) else {
                chr.fail(format!("{}: not realisable", ctx()));
                continue;
            };
            match closed_form(&cd, ty, &p) {
                Ok(f) => chr.expect(f.eq_up_to_shift(&c), ctx),
                Err(e) => chr.fail(format!("{}: {e}", ctx())),
            }
            chr.bump("modules");
            match building_t_check(&cd, &kr, &m) {
                Ok(_) => build.bump("modules"),
                Err(e) => build.fail(format!("{}: {e}", ctx())),
            }
            match serre_clean(&cd, &c) {
                Ok(ok) => serre.expect(ok, ctx),
                Err(e) => serre.fail(format!("{}: {e}", ctx())),
            }
            serre.bump("characters");
            for j in 0..n {
                let (a, b) = (eps(&c, j).unwrap_or(-1), eps_vee(&c, j).unwrap_or(-1));
                strings.expect((0..=2).contains(&a) && (0..=2).contains(&b), || format!("{} j={j}", ctx()));
            }
            strings.bump("modules");
            for i1 in 0..n {
                if is_cyclotomic(&kr, &classes, &p, i1, word[0]) {
                    cyc.bump("cyclotomic paths");
                    match triv_rep_check(&m) {
                        Ok(ok) => cyc.expect(ok, || format!("{} tail Λ{i1}", ctx())),
                        Err(e) => cyc.fail(format!("{}: {e}", ctx())),
                    }
                }
            }
        }
        let ex = cyclotomic_existence_check(&kr, &classes, maxlen);
        cyc.add("witnesses", ex.witnesses as i64);
        cyc.expect(ex.passed(), || format!("{ty}: missing {:?} unexpected {:?}", ex.missing, ex.unexpected));
    }
    vec![rel, chr, build, serre, strings, cyc, dimc]
}

pub fn jump_anchor_checks() -> Vec<Check> {
    let mut a = Check::new("jump_1(L(0)) = 1");
    for l in [2, 3] {
        let cd = CartanDatum::build(AffineType::new(Family::A1, l).expect("valid"));
        let c = char_lin(&cd, 0, 1);
        let j = jump(&cd, &c, 1).unwrap_or(i64::MIN);
        a.expect(j == 1, || format!("ℓ={l}: {j}"));
        a.bump("ranks");
    }
    let mut b = Check::new("jump_i(L(i^{c−n} j i^n)) = −a_ij − c");
    match lcal_jump_anchors(&CartanDatum::rank2_appendix()) {
        Ok(rows) => {
            for r in rows {
                b.expect(r.jump == r.expected, || format!("{r:?}"));
                b.bump("modules");
            }
        }
        Err(e) => b.fail(e.to_string()),
    }
    vec![a, b]
}

pub fn appendix_checks() -> Vec<Check> {
    let mut rows = Check::new("catalog characters in rep(Λ_h+Λ_i)");
    let mut jumps = Check::new("jump values");
    let mut arrows = Check::new("thick and thin arrows");
    let mut graph = Check::new("crystal graph from characters");
    match appendix_report() {
        Ok(rep) => {
            for r in &rep.rows {
                rows.expect(r.in_rep && r.serre_clean && r.phi_nonnegative, || r.name.clone());
                rows.bump("entries");
                jumps.expect((r.jump_i, r.jump_h) == r.expected, || {
                    format!("{}: ({}, {}) vs {:?}", r.name, r.jump_i, r.jump_h, r.expected)
                });
            }
            rows.set("max depth", rep.max_depth);
            rows.expect(rep.rows.len() == 16 && rep.max_depth == 7, || format!("max depth {}", rep.max_depth));
            jumps.set("matches", rep.jump_matches as i64);
            for a in &rep.arrows {
                arrows.expect(a.pass, || format!("{} → {}: {:?}", a.source, a.target, a.detail));
                arrows.bump(if a.thick { "thick" } else { "thin" });
            }
            graph.set("arrows", rep.derived_arrows.len() as i64);
            graph.expect(rep.graph_matches, || format!("{:?}", rep.derived_arrows));
        }
        Err(e) => rows.fail(e.to_string()),
    }
    vec![rows, jumps, arrows, graph]
}

/// Non-perfect type `C^{(1)}` and the two level-2 splittings for `A^{(2)}_{2ℓ}`.
pub fn decomposition_checks(c_ranks: &[usize], c_depth: usize, a2_depth: usize) -> Vec<Check> {
    let mut c1 = Check::new("type C tensor decompositions");
    for &l in c_ranks {
        let ty = AffineType::new(Family::C1, l).expect("valid");
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let build = |i| bootstrap_build(&cd, &kr, i, c_depth);
        match (build(0), build(1), build(2)) {
            (Ok(b0), Ok(b1), Ok(b2)) => {
                let r = decomposition_check(&kr, &b1, &[("B(Λ0)".into(), &b0), ("B(Λ2)".into(), &b2)], c_depth);
                c1.expect(r.passed() && r.found.len() == 2, || format!("{ty} over Λ1: {r:?}"));
                let r = decomposition_check(&kr, &b0, &[("B(Λ1)".into(), &b1)], c_depth);
                c1.expect(r.passed() && r.found.len() == 1, || format!("{ty} over Λ0: {r:?}"));
                c1.bump("ranks");
            }
            _ => c1.fail(format!("{ty}: bootstrap failed")),
        }
        match type_c_branching_check(l, c_depth) {
            Ok(rep) => {
                c1.expect(rep.passed(), || format!("{ty} displays: {rep:?}"));
                for d in &rep.displays {
                    c1.bump(&format!("display {:?}", d.status));
                }
            }
            Err(e) => c1.fail(format!("{ty} displays: {e}")),
        }
    }
    let mut a2 = Check::new("twisted level-2 decompositions");
    for (l, base, parts) in [(2usize, 1usize, vec![(vec![0, 0], "B(2Λ0)"), (vec![2], "B(Λ2)")]), (3, 2, vec![(vec![1], "B(Λ1)"), (vec![3], "B(Λ3)")])] {
        let ty = AffineType::new(Family::A2Even, l).expect("valid");
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let n = cd.n();
        let big = a2_depth + 8;
        let Ok(b0) = bootstrap_build(&cd, &kr, 0, big) else {
            a2.fail(format!("{ty}: bootstrap failed"));
            continue;
        };
        let weight = |idx: &[usize]| idx.iter().fold(WeightH::zero(n), |w, &i| w.add(&WeightH::fundamental(n, i)));
        let ex = |idx: &[usize]| extract_level2(&b0, &b0, &weight(idx), big);
        let Ok(base_c) = ex(&[base]) else {
            a2.fail(format!("{ty}: no B(Λ{base})"));
            continue;
        };
        let mut claimed = vec![];
        for (idx, name) in &parts {
            match ex(idx) {
                Ok(e) => claimed.push((name.to_string(), e.crystal)),
                Err(e) => a2.fail(format!("{ty} {name}: {e}")),
            }
        }
        let refs: Vec<(String, &HwCrystal)> = claimed.iter().map(|(s, h)| (s.clone(), h)).collect();
        let r = decomposition_check(&kr, &base_c.crystal, &refs, a2_depth);
        a2.expect(r.passed() && r.depth >= a2_depth && r.found.len() == parts.len(), || format!("{ty}: {r:?}"));
        a2.bump("equations");
    }
    vec![c1, a2]
}

/// `(base, top)` pairs to sweep: every non-forbidden level-one top, with its
/// bootstrap predecessor as base. `only_base` narrows to one base index.
pub fn psi_pairs(
    cd: &CartanDatum,
    kr: &KrCrystal,
    only_base: Option<usize>,
) -> Result<Vec<(usize, usize)>, CategorifyError> {
    let ty = kr.ty();
    let forb = forbidden(ty);
    if let Some(i) = only_base {
        if forb.contains(&i) {
            return Err(CategorifyError::Forbidden(i));
        }
    }
    let mut out = vec![];
    for top in cd.level_one() {
        if forb.contains(&top) {
            continue;
        }
        let base = bootstrap_predecessor(cd, kr, top)?;
        if only_base.is_none_or(|i| i == base) {
            out.push((base, top));
        }
    }
    if out.is_empty() {
        if let Some(i) = only_base {
            return Err(crate::error::CrystalError::NotLevelOne(i).into());
        }
    }
    Ok(out)
}

/// Ψ strictness, decomposition of every node, and the `ẽ_j`, `f̃_j` case splits.
pub fn theorem_checks(types: &[AffineType], depth: usize, only_base: Option<usize>) -> Vec<Check> {
    let mut strict = Check::new("Ψ strict");
    let mut dec = Check::new("decomposition");
    let mut ops = Check::new("ẽ/f̃ case splits");
    let mut logged = Check::new("length-one anchors follow the tensor rule");
    let mut tfam = Check::new("T-family nodes");
    for &ty in types {
        if ty.family() == Family::A1 && ty.rank() == 1 {
            continue;
        }
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let pairs = match psi_pairs(&cd, &kr, only_base) {
            Ok(p) => p,
            Err(e) => {
                strict.fail(format!("{ty}: {e}"));
                continue;
            }
        };
        for (base, top) in pairs {
            let psi = match build_psi_onto(&cd, &kr, base, top, depth) {
                Ok(p) => p,
                Err(e) => {
                    strict.fail(format!("{ty} {base}→{top}: {e}"));
                    continue;
                }
            };
            let v = psi.strictness_violations();
            strict.expect(v.is_empty(), || format!("{ty} Λ{top}: {}", v.join("; ")));
            strict.bump("maps");
            let rep = psi.sweep();
            dec.add("nodes", rep.nodes as i64);
            dec.add("decomposed", rep.decomposed as i64);
            dec.set("max k", dec.get("max k").max(rep.max_k as i64));
            dec.expect(rep.decomposed == rep.nodes, || format!("{ty} Λ{top}: {:?}", rep.first_failures.first()));
            ops.add("E1", rep.cases.e1 as i64);
            ops.add("E2", rep.cases.e2 as i64);
            ops.add("F1", rep.cases.f1 as i64);
            ops.add("F2", rep.cases.f2 as i64);
            ops.expect(rep.failures == 0, || format!("{ty} Λ{top}: {:?}", rep.first_failures));
            logged.add("logged", rep.logged.len() as i64);
            for a in psi.domain().collect::<Vec<_>>() {
                let Ok(d) = psi.decompose(a) else { continue };
                if d.remainder != psi.target().root() || d.word.is_empty() {
                    continue;
                }
                tfam.bump("nodes");
                let reach = d_class(psi.classes(), &d.word)
                    .iter()
                    .any(|w| psi.source().apply_f(w) == Some(a));
                tfam.expect(reach, || format!("{ty} Λ{top}: {} not f̃ of its path", psi.label(a)));
                match psi.t_char(&d.word) {
                    Ok(c) => tfam.expect(in_rep(&c, &WeightH::fundamental(cd.n(), top)).unwrap_or(false), || {
                        format!("{ty} Λ{top}: T({:?}) ∉ rep", d.word)
                    }),
                    Err(e) => tfam.fail(e.to_string()),
                }
            }
        }
    }
    vec![strict, dec, ops, logged, tfam]
}

/// Options of a full run.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub types: Vec<AffineType>,
    pub depth: usize,
    pub maxlen: usize,
    pub only_base: Option<usize>,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            types: Family::ALL.iter().map(|&f| AffineType::minimal(f)).collect(),
            depth: 6,
            maxlen: 10,
            only_base: None,
            timing: true,
        }
    }
}

/// All suites in order, restricted to `opts.types`.
pub fn verify_all(opts: &RunOptions) -> Result<RunReport, CategorifyError> {
    for ty in &opts.types {
        if let Some(i) = opts.only_base {
            let cd = CartanDatum::build(*ty);
            psi_pairs(&cd, &build_b11(*ty), Some(i))?;
        }
    }
    let t = opts.timing;
    let ty = &opts.types;
    let has = |f: Family, l: usize| ty.iter().any(|x| x.family() == f && x.rank() == l);
    let mut suites = vec![
        run_suite("cartan", t, || cartan_checks(ty)),
        run_suite("kr", t, || kr_checks(ty)),
        run_suite("crystals", t, || crystal_checks(ty, opts.depth)),
    ];
    if has(Family::A1, 2) {
        suites.push(run_suite("figures", t, figure_checks));
    }
    let a_ranks: Vec<usize> = ty.iter().filter(|x| x.family() == Family::A1 && x.rank() >= 2).map(|x| x.rank()).collect();
    if !a_ranks.is_empty() {
        suites.push(run_suite("cross-model", t, || cross_model_checks(&a_ranks, opts.depth)));
    }
    suites.push(run_suite("tables", t, || table_checks(ty, opts.maxlen)));
    suites.push(run_suite("tmod", t, || tmod_checks(ty, opts.maxlen)));
    suites.push(run_suite("jump anchors", t, jump_anchor_checks));
    suites.push(run_suite("theorems", t, || theorem_checks(ty, opts.depth, opts.only_base)));
    let c_ranks: Vec<usize> = ty.iter().filter(|x| x.family() == Family::C1).map(|x| x.rank()).collect();
    if !c_ranks.is_empty() || ty.iter().any(|x| x.family() == Family::A2Even) {
        suites.push(run_suite("decompositions", t, || {
            let mut v = decomposition_checks(&c_ranks, opts.depth, opts.depth.min(5));
            if !ty.iter().any(|x| x.family() == Family::A2Even) {
                v.pop();
            }
            v
        }));
    }
    suites.push(run_suite("appendix", t, appendix_checks));
    Ok(RunReport { passed: suites.iter().all(|s| s.passed), suites })
}

/// A graded character as one line per word.
pub fn char_lines(c: &GradedChar) -> String {
    c.to_text()
}

/// DOT with nodes in depth-then-id order.
pub fn crystal_dot(g: &CrystalGraph) -> String {
    g.to_dot()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_levels_agree_with_central_element() {
        for ty in AffineType::all_up_to(6) {
            assert_eq!(CartanDatum::build(ty).levels(), printed_levels(ty), "{ty}");
        }
    }

    #[test]
    fn figures_pass() {
        for c in figure_checks() {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn anchors_pass() {
        for c in jump_anchor_checks() {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn small_run_is_deterministic() {
        let opts = RunOptions {
            types: vec![AffineType::new(Family::A1, 2).unwrap()],
            depth: 4,
            maxlen: 4,
            only_base: None,
            timing: false,
        };
        let a = verify_all(&opts).unwrap();
        let b = verify_all(&opts).unwrap();
        assert!(a.passed, "{}", a.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn forbidden_base_is_refused() {
        let opts = RunOptions {
            types: vec![AffineType::new(Family::D2, 2).unwrap()],
            only_base: Some(1),
            ..RunOptions::default()
        };
        assert!(matches!(verify_all(&opts), Err(CategorifyError::Forbidden(1))));
    }
}
