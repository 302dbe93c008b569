//! `krk`: command-line front end for the verification engine.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
//! usage error (bad flags, forbidden index, unknown object).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use krk::appendix::appendix_suite;
use krk::cartan::{AffineType, CartanDatum, Family};
use krk::categorify::build_psi_onto;
use krk::error::{CartanError, CategorifyError, CrystalError, KrError, ModuleError, PathError};
use krk::hw::{bootstrap_build, partition_model, HwCrystal};
use krk::klr::serre_clean;
use krk::kr::{build_b11, KrCrystal};
use krk::paths::{class_table, enumerate, is_cyclotomic, jump_table, phi_hat_table, realize};
use krk::suites::{psi_pairs, verify_all, Check, RunOptions};
use krk::tmod::{building_t_check, closed_form, triv_rep_check, verify_relations, TrivModule};

#[derive(Parser)]
#[command(name = "krk", version, about = "Affine crystal and KLR character verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite and write the report.
    VerifyAll(VerifyArgs),
    /// The Kirillov-Reshetikhin crystal B^{1,1}.
    Kr {
        #[command(subcommand)]
        cmd: KrCmd,
    },
    /// Highest-weight crystals.
    Crystal {
        #[command(subcommand)]
        cmd: CrystalCmd,
    },
    /// Colour words in B^{1,1}.
    Paths {
        #[command(subcommand)]
        cmd: PathsCmd,
    },
    /// The explicit modules T(p,k).
    Tmod {
        #[command(subcommand)]
        cmd: TmodCmd,
    },
    /// The map Ψ and the operator theorems.
    Categorify {
        #[command(subcommand)]
        cmd: CategorifyCmd,
    },
    /// The rank-two worked example.
    Appendix {
        #[command(subcommand)]
        cmd: AppendixCmd,
    },
}

#[derive(Subcommand)]
enum KrCmd {
    /// Print the crystal graph.
    Dump {
        #[command(flatten)]
        ty: TypeSel,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Build B(Λ_i) to a given depth.
    Build {
        #[command(flatten)]
        ty: TypeSel,
        /// Level-one fundamental weight, `L0`, `L1`, ...
        #[arg(long, default_value = "L0", value_parser = parse_weight)]
        weight: usize,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum PathsCmd {
    /// One JSON object per realisable word, lengths 1 to maxlen.
    Enumerate {
        #[command(flatten)]
        ty: TypeSel,
        #[arg(long, default_value_t = 10)]
        maxlen: usize,
        /// Keep only words with a cyclotomic walk.
        #[arg(long)]
        cyclotomic_only: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum TmodCmd {
    /// Build T(p,k) and check its relations and character.
    Check {
        #[command(flatten)]
        ty: TypeSel,
        /// Colour word, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum CategorifyCmd {
    /// Sweep Ψ, decompositions and the ẽ/f̃ case splits.
    Verify {
        #[command(flatten)]
        ty: TypeSel,
        /// Base index of B^{1,1} ⊗ B(Λ_i).
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Write one node as ⟨b⟩ ⊗ R with its cyclotomic path.
    Decompose {
        #[command(flatten)]
        ty: TypeSel,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Node label, or its f-word from the root as comma-separated colours.
        #[arg(long)]
        node: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum AppendixCmd {
    /// Jump table and thick arrows of the rank-two example.
    B2 {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "type", value_parser = Family::from_str)]
    ty: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value_t = 6)]
    depth: usize,
    #[arg(long, default_value_t = 10)]
    maxlen: usize,
    /// Restrict the Ψ sweeps to this base index.
    #[arg(long)]
    i: Option<usize>,
    /// Leave wall-clock timings out of the report.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct TypeSel {
    #[arg(long = "type", value_parser = Family::from_str)]
    ty: Family,
    /// Defaults to the smallest legal rank.
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeSel {
    fn get(&self) -> Result<AffineType, Fail> {
        match self.rank {
            Some(r) => Ok(AffineType::new(self.ty, r)?),
            None => Ok(AffineType::minimal(self.ty)),
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

enum Fail {
    Usage(String),
    Verify(String),
}

impl From<CartanError> for Fail {
    fn from(e: CartanError) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<KrError> for Fail {
    fn from(e: KrError) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<CrystalError> for Fail {
    fn from(e: CrystalError) -> Self {
        match e {
            CrystalError::NotLevelOne(_) => Fail::Usage(e.to_string()),
            _ => Fail::Verify(e.to_string()),
        }
    }
}

impl From<CategorifyError> for Fail {
    fn from(e: CategorifyError) -> Self {
        match e {
            CategorifyError::Forbidden(_) => Fail::Usage(e.to_string()),
            CategorifyError::Crystal(c) => c.into(),
            _ => Fail::Verify(e.to_string()),
        }
    }
}

impl From<ModuleError> for Fail {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Path(_) => Fail::Usage(e.to_string()),
            _ => Fail::Verify(e.to_string()),
        }
    }
}

fn parse_weight(s: &str) -> Result<usize, String> {
    let t = s.trim_start_matches(['L', 'l', 'Λ']);
    t.parse().map_err(|_| format!("expected L<i>, got `{s}`"))
}

impl Output {
    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format, Fail> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            Err(Fail::Usage(format!("format `{name}` is not available here")))
        }
    }

    fn emit(&self, body: &str) -> Result<(), Fail> {
        match &self.out {
            Some(p) => std::fs::write(p, body).map_err(|e| Fail::Usage(format!("{}: {e}", p.display()))),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

fn verdict(passed: bool, what: &str) -> Result<(), Fail> {
    if passed {
        Ok(())
    } else {
        Err(Fail::Verify(format!("{what} failed")))
    }
}

fn verify_cmd(a: &VerifyArgs) -> Result<(), Fail> {
    let types = match (a.ty, a.rank) {
        (Some(f), Some(r)) => vec![AffineType::new(f, r)?],
        (Some(f), None) => vec![AffineType::minimal(f)],
        (None, Some(r)) => Family::ALL.iter().filter_map(|&f| AffineType::new(f, r).ok()).collect(),
        (None, None) => RunOptions::default().types,
    };
    let opts = RunOptions { types, depth: a.depth, maxlen: a.maxlen, only_base: a.i, timing: !a.no_timing };
    let report = verify_all(&opts)?;
    let body = match a.out.format(Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => report.to_text(),
        _ => report.to_json() + "\n",
    };
    a.out.emit(&body)?;
    verdict(report.passed, "verification")
}

fn kr_text(kr: &KrCrystal) -> String {
    let mut s = String::new();
    let g = kr.graph();
    for v in 0..kr.len() {
        let _ = writeln!(s, "{} wt={:?} eps={:?} phi={:?}", kr.label(v), g.node(v).wt.0, g.node(v).eps, g.node(v).phi);
    }
    for (src, c, dst) in g.arrows() {
        let _ = writeln!(s, "{} -{c}-> {}", kr.label(src), kr.label(dst));
    }
    s
}

fn kr_dump(ty: &TypeSel, out: &Output) -> Result<(), Fail> {
    let kr = build_b11(ty.get()?);
    let body = match out.format(Format::Json, &[Format::Dot, Format::Json, Format::Text])? {
        Format::Dot => kr.graph().to_dot(),
        Format::Json => pretty(&kr.to_json()),
        Format::Text => kr_text(&kr),
    };
    out.emit(&body)
}

fn cache_path(ty: AffineType, i: usize, depth: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("KRK_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("crystal-{ty}-L{i}-d{depth}.json")))
}

/// Type A uses the partition model so nodes carry partition labels.
fn build_crystal(ty: AffineType, i: usize, depth: usize) -> Result<HwCrystal, Fail> {
    let cache = cache_path(ty, i, depth);
    if let Some(c) = cache.as_ref().and_then(|p| std::fs::read_to_string(p).ok()) {
        if let Ok(h) = serde_json::from_str(&c) {
            return Ok(h);
        }
    }
    let cd = CartanDatum::build(ty);
    let kr = build_b11(ty);
    if i >= cd.n() {
        return Err(CartanError::BadIndex(i).into());
    }
    let h = if ty.family() == Family::A1 && ty.rank() >= 2 {
        partition_model(&kr, i, depth)?
    } else {
        bootstrap_build(&cd, &kr, i, depth)?
    };
    if let Some(p) = cache {
        let _ = p.parent().map(std::fs::create_dir_all);
        let _ = std::fs::write(p, serde_json::to_string(&h).expect("crystal serialises"));
    }
    Ok(h)
}

fn crystal_build(ty: &TypeSel, i: usize, depth: usize, out: &Output) -> Result<(), Fail> {
    let t = ty.get()?;
    let h = build_crystal(t, i, depth)?;
    let body = match out.format(Format::Json, &[Format::Dot, Format::Json, Format::Text])? {
        Format::Dot => h.graph().to_dot(),
        Format::Json => pretty(&h.to_json()),
        Format::Text => {
            let g = h.graph();
            let mut s = String::new();
            for v in 0..g.len() {
                let _ = writeln!(s, "{} depth={} wt={:?}", g.node(v).label, h.node_depth(v), g.node(v).wt.0);
            }
            for (src, c, dst) in g.arrows() {
                let _ = writeln!(s, "{} -{c}-> {}", g.node(src).label, g.node(dst).label);
            }
            s
        }
    };
    out.emit(&body)
}

fn paths_enumerate(ty: &TypeSel, maxlen: usize, cyclotomic_only: bool, out: &Output) -> Result<(), Fail> {
    let t = ty.get()?;
    let kr = build_b11(t);
    let classes = class_table(t);
    let n = t.n();
    let format = out.format(Format::Json, &[Format::Json, Format::Text])?;
    let mut body = String::new();
    for k in 1..=maxlen {
        for p in enumerate(&kr, k) {
            let tails: Vec<(usize, usize)> = (0..n)
                .flat_map(|i1| (0..n).map(move |i2| (i1, i2)))
                .filter(|&(i1, i2)| is_cyclotomic(&kr, &classes, &p, i1, i2))
                .collect();
            if cyclotomic_only && tails.is_empty() {
                continue;
            }
            if format == Format::Text {
                let w: Vec<String> = p.word.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(body, "{}", w.join(","));
                continue;
            }
            let mut v = json!({"word": p.word, "walks": p.walks, "cyclotomic_tails": tails});
            if k >= 2 {
                v["jump"] = json!(jump_table(&kr, &classes, &p));
                v["phi_hat"] = json!(phi_hat_table(&kr, &classes, &p));
            }
            body.push_str(&v.to_string());
            body.push('\n');
        }
    }
    out.emit(&body)
}

fn tmod_check(ty: &TypeSel, word: &[usize], out: &Output) -> Result<(), Fail> {
    let t = ty.get()?;
    let cd = CartanDatum::build(t);
    let kr = build_b11(t);
    let classes = class_table(t);
    let p = realize(&kr, word).map_err(|e: PathError| Fail::Usage(e.to_string()))?;
    let m = TrivModule::build(&cd, &kr, word)?;
    let c = m.character();
    let mut checks = vec![];
    let mut rel = Check::new("KLR relations");
    match verify_relations(&cd, &m) {
        Ok(r) => rel.set("instances", r.instances as i64),
        Err(e) => rel.fail(e.to_string()),
    }
    checks.push(rel);
    let mut cf = Check::new("character = closed form");
    match closed_form(&cd, t, &p) {
        Ok(f) => cf.expect(f.eq_up_to_shift(&c), || f.to_text()),
        Err(e) => cf.fail(e.to_string()),
    }
    checks.push(cf);
    let mut bt = Check::new("built from the unit by f̃");
    if let Err(e) = building_t_check(&cd, &kr, &m) {
        bt.fail(e.to_string());
    }
    checks.push(bt);
    let mut se = Check::new("Serre operators vanish");
    match serre_clean(&cd, &c) {
        Ok(ok) => se.expect(ok, || "non-zero Serre image".into()),
        Err(e) => se.fail(e.to_string()),
    }
    checks.push(se);
    let tails: Vec<usize> = (0..t.n()).filter(|&i1| is_cyclotomic(&kr, &classes, &p, i1, word[0])).collect();
    if !tails.is_empty() {
        let mut cy = Check::new("cyclotomic T ∈ rep(Λ_p(0))");
        cy.set("tails", tails.len() as i64);
        match triv_rep_check(&m) {
            Ok(ok) => cy.expect(ok, || "outside rep".into()),
            Err(e) => cy.fail(e.to_string()),
        }
        checks.push(cy);
    }
    let passed = checks.iter().all(|c| c.passed);
    let body = match out.format(Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&json!({
            "type": t.to_string(),
            "word": word,
            "dim": m.dim(),
            "flips": m.flips,
            "dots": m.dots,
            "character": c.to_text(),
            "passed": passed,
            "checks": checks,
        })),
        _ => {
            let mut s = format!("T({word:?}) in {t}, dim {}\n{}", m.dim(), c.to_text());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            for ch in &checks {
                let _ = writeln!(s, "{} {}", if ch.passed { "ok  " } else { "FAIL" }, ch.name);
                if let Some(f) = &ch.first_failure {
                    let _ = writeln!(s, "     {f}");
                }
            }
            s
        }
    };
    out.emit(&body)?;
    verdict(passed, "module check")
}

fn categorify_verify(ty: &TypeSel, i: Option<usize>, depth: usize, out: &Output) -> Result<(), Fail> {
    let t = ty.get()?;
    let cd = CartanDatum::build(t);
    let kr = build_b11(t);
    let mut maps = vec![];
    let mut passed = true;
    let mut text = String::new();
    for (base, top) in psi_pairs(&cd, &kr, i)? {
        let psi = build_psi_onto(&cd, &kr, base, top, depth)?;
        let strict = psi.strictness_violations();
        let rep = psi.sweep();
        let ok = strict.is_empty() && rep.passed();
        passed &= ok;
        let _ = writeln!(
            text,
            "[{}] {t} Λ{base} → Λ{top}: nodes={} decomposed={} max_k={} E1={} E2={} F1={} F2={} logged={} failures={}",
            if ok { "PASS" } else { "FAIL" },
            rep.nodes,
            rep.decomposed,
            rep.max_k,
            rep.cases.e1,
            rep.cases.e2,
            rep.cases.f1,
            rep.cases.f2,
            rep.logged.len(),
            rep.failures + strict.len(),
        );
        for f in strict.iter().chain(&rep.first_failures) {
            let _ = writeln!(text, "  {f}");
        }
        maps.push(json!({"base": base, "top": top, "strictness": strict, "report": rep, "passed": ok}));
    }
    let body = match out.format(Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&json!({"type": t.to_string(), "depth": depth, "passed": passed, "maps": maps})),
        _ => text,
    };
    out.emit(&body)?;
    verdict(passed, "theorem sweep")
}

fn categorify_decompose(ty: &TypeSel, i: Option<usize>, depth: usize, node: &str, out: &Output) -> Result<(), Fail> {
    let t = ty.get()?;
    let cd = CartanDatum::build(t);
    let kr = build_b11(t);
    let pairs = psi_pairs(&cd, &kr, i)?;
    let (base, top) = pairs[0];
    let psi = build_psi_onto(&cd, &kr, base, top, depth)?;
    let src = psi.source();
    let word: Option<Vec<usize>> = match node {
        "u" | "" => Some(vec![]),
        s => s.split(',').map(|c| c.trim().parse().ok()).collect(),
    };
    let a = match word {
        Some(w) => src.apply_f(&w),
        None => src.graph().find(node),
    }
    .ok_or_else(|| Fail::Usage(format!("no node `{node}` within depth {depth}")))?;
    let d = psi.decompose(a)?;
    let b_label = kr.label(d.b).to_string();
    let r_label = psi.target().graph().node(d.remainder).label.clone();
    let tc = psi.t_char(&d.word)?;
    let body = match out.format(Format::Json, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&json!({
            "type": t.to_string(),
            "base": base,
            "top": top,
            "node": psi.label(a),
            "b": b_label,
            "remainder": r_label,
            "decomposition": d,
            "t_character": tc.to_text(),
        })),
        _ => format!(
            "{} = ⟨{b_label}⟩ ⊗ {r_label}\npath {:?}, k = {}, walk {:?}\n",
            psi.label(a),
            d.word,
            d.k,
            d.walk
        ),
    };
    out.emit(&body)
}

fn appendix_b2(out: &Output) -> Result<(), Fail> {
    let rep = appendix_suite().map_err(|e| Fail::Verify(e.to_string()))?;
    let body = match out.format(Format::Text, &[Format::Json, Format::Text])? {
        Format::Json => pretty(&serde_json::to_value(&rep).expect("report serialises")),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "{:<24} {:>6} {:>6}  result  character", "module", "jump_i", "jump_h");
            for r in &rep.rows {
                let ch: Vec<&str> = r.character.lines().collect();
                let _ = writeln!(
                    s,
                    "{:<24} {:>6} {:>6}  {:<6}  {}",
                    r.name,
                    r.jump_i,
                    r.jump_h,
                    if r.pass { "pass" } else { "FAIL" },
                    ch.join(" + ")
                );
            }
            let thick = rep.arrows.iter().filter(|a| a.thick).count();
            let thick_ok = rep.arrows.iter().filter(|a| a.thick && a.pass).count();
            let _ = writeln!(
                s,
                "max depth {}; jump matches {}/32; arrows {}/{} ({thick_ok}/{thick} thick); derived graph {}",
                rep.max_depth,
                rep.jump_matches,
                rep.arrows.iter().filter(|a| a.pass).count(),
                rep.arrows.len(),
                if rep.graph_matches { "matches" } else { "differs" }
            );
            s
        }
    };
    out.emit(&body)?;
    verdict(rep.passed(), "appendix suite")
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.cmd {
        Command::VerifyAll(a) => verify_cmd(&a),
        Command::Kr { cmd: KrCmd::Dump { ty, out } } => kr_dump(&ty, &out),
        Command::Crystal { cmd: CrystalCmd::Build { ty, weight, depth, out } } => crystal_build(&ty, weight, depth, &out),
        Command::Paths { cmd: PathsCmd::Enumerate { ty, maxlen, cyclotomic_only, out } } => {
            paths_enumerate(&ty, maxlen, cyclotomic_only, &out)
        }
        Command::Tmod { cmd: TmodCmd::Check { ty, path, out } } => tmod_check(&ty, &path, &out),
        Command::Categorify { cmd: CategorifyCmd::Verify { ty, i, depth, out } } => categorify_verify(&ty, i, depth, &out),
        Command::Categorify { cmd: CategorifyCmd::Decompose { ty, i, depth, node, out } } => {
            categorify_decompose(&ty, i, depth, &node, &out)
        }
        Command::Appendix { cmd: AppendixCmd::B2 { out } } => appendix_b2(&out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify(m)) => {
            eprintln!("krk: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("krk: {m}");
            ExitCode::from(2)
        }
    }
}
