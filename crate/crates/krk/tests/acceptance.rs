//! Acceptance criteria, one line each. Thresholds are pinned here.

use std::io::Write;
use std::time::Instant;

use krk::cartan::{AffineType, Family};
use krk::suites::{
    appendix_checks, cartan_checks, cross_model_checks, decomposition_checks, figure_checks, jump_anchor_checks,
    kr_checks, table_checks, theorem_checks, tmod_checks, verify_all, Check, RunOptions,
};

const CARTAN_MAX_RANK: usize = 8;
const KR_MAX_RANK: usize = 8;
const CROSS_MODEL_RANKS: [usize; 2] = [2, 3];
const CROSS_MODEL_DEPTH: usize = 8;
const TABLE_MAX_RANK: usize = 6;
const TABLE_MAX_LEN: usize = 12;
const TMOD_MAX_RANK: usize = 5;
const TMOD_MAX_LEN: usize = 10;
const C_RANKS: [usize; 2] = [2, 3];
const C_DEPTH: usize = 6;
const A2_DEPTH: usize = 5;
const THEOREM_DEPTH: usize = 7;
const SUITE_SECONDS: u64 = 120;

fn theorem_types() -> Vec<AffineType> {
    [
        (Family::A1, 2),
        (Family::C1, 2),
        (Family::A2Even, 2),
        (Family::A2Dag, 2),
        (Family::D2, 2),
        (Family::D1, 5),
        (Family::B1, 3),
        (Family::A2Odd, 3),
    ]
    .into_iter()
    .map(|(f, l)| AffineType::new(f, l).unwrap())
    .collect()
}

struct Outcome {
    id: usize,
    title: &'static str,
    passed: bool,
    summary: String,
}

fn summarise(checks: &[Check]) -> (bool, String) {
    let passed = checks.iter().all(|c| c.passed);
    let mut parts = vec![];
    for c in checks {
        let counts: Vec<String> = c.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.push(format!("{} [{}]", c.name, counts.join(", ")));
        if let Some(f) = &c.first_failure {
            parts.push(format!("first failure: {f}"));
        }
    }
    (passed, parts.join("; "))
}

fn run(id: usize, title: &'static str, f: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = f();
    let secs = start.elapsed().as_secs();
    let (mut passed, mut summary) = summarise(&checks);
    if secs > SUITE_SECONDS {
        passed = false;
        summary.push_str(&format!("; took {secs}s"));
    }
    Outcome { id, title, passed, summary }
}

fn line(o: &Outcome) {
    let mut err = std::io::stderr();
    let tag = if o.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(err, "criterion {:>2} {tag}: {} | {}", o.id, o.title, o.summary);
}

#[test]
fn acceptance() {
    let mut outcomes = vec![];
    let mut push = |o: Outcome| {
        line(&o);
        outcomes.push(o);
    };
    push(run(1, "Cartan data", || cartan_checks(&AffineType::all_up_to(CARTAN_MAX_RANK))));
    push(run(2, "KR structure and Table 1", || kr_checks(&AffineType::all_up_to(KR_MAX_RANK))));
    push(run(3, "figures of B(Λ0), B(Λ2) and Ψ", figure_checks));
    push(run(4, "partition model vs bootstrap", || cross_model_checks(&CROSS_MODEL_RANKS, CROSS_MODEL_DEPTH)));
    push(run(5, "jump and φ̂ tables", || {
        let mut checks = table_checks(&AffineType::all_up_to(TABLE_MAX_RANK), TABLE_MAX_LEN);
        for c in &mut checks {
            if c.get("paths") == 0 {
                c.fail("no paths swept");
            }
        }
        checks
    }));
    push(run(6, "T(p,k) modules", || tmod_checks(&AffineType::all_up_to(TMOD_MAX_RANK), TMOD_MAX_LEN)));
    push(run(7, "jump anchors", jump_anchor_checks));
    push(run(8, "rank-2 appendix", || {
        let mut checks = appendix_checks();
        if checks[1].get("matches") != 32 {
            checks[1].fail("fewer than 32 jump matches");
        }
        checks
    }));
    push(run(9, "tensor decompositions", || decomposition_checks(&C_RANKS, C_DEPTH, A2_DEPTH)));
    push(run(10, "decomposition and operator theorems", || {
        let mut checks = theorem_checks(&theorem_types(), THEOREM_DEPTH, None);
        if checks[2].get("F1") == 0 {
            checks[2].fail("no F1 instance swept");
        }
        checks
    }));
    push(run(11, "deterministic reports", || {
        let opts = RunOptions { timing: false, ..RunOptions::default() };
        let mut c = Check::new("two runs, byte-identical JSON");
        match (verify_all(&opts), verify_all(&opts)) {
            (Ok(a), Ok(b)) => {
                let (ja, jb) = (a.to_json(), b.to_json());
                c.set("bytes", ja.len() as i64);
                c.expect(ja == jb, || "reports differ".into());
                c.expect(a.passed, || "default run did not pass".into());
            }
            (Err(e), _) | (_, Err(e)) => c.fail(e.to_string()),
        }
        vec![c]
    }));
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| format!("{} ({})", o.id, o.title)).collect();
    let _ = writeln!(std::io::stderr(), "acceptance: {}/{} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    assert!(failed.is_empty(), "failing criteria: {}", failed.join(", "));
}
