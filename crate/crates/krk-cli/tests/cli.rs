use std::path::PathBuf;
use std::process::{Command, Output};

fn krk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krk")).args(args).env_remove("KRK_CACHE_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn verify_all_is_byte_identical_without_timing() {
    let args = ["verify-all", "--type", "A1", "--rank", "2", "--depth", "5", "--no-timing"];
    let (a, b) = (krk(&args), krk(&args));
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!stdout(&a).contains("millis"));
}

#[test]
fn timings_appear_by_default() {
    let o = krk(&["verify-all", "--type", "A1", "--rank", "2", "--depth", "3", "--maxlen", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("millis"));
}

#[test]
fn forbidden_index_exits_two() {
    let o = krk(&["verify-all", "--type", "D2", "--rank", "2", "--i", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("forbidden"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(krk(&["kr", "dump", "--type", "E8"]).status.code(), Some(2));
    assert_eq!(krk(&["kr", "dump", "--type", "D1", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(krk(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(krk(&["appendix", "b2", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(krk(&["tmod", "check", "--type", "A1", "--rank", "2", "--path", "0,2,1"]).status.code(), Some(2));
    assert_eq!(
        krk(&["categorify", "decompose", "--type", "A1", "--rank", "2", "--depth", "3", "--node", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn figure_one_left_graph() {
    let o = krk(&["crystal", "build", "--type", "A1", "--rank", "2", "--weight", "L0", "--depth", "4", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")).count(), 10);
    let arrows: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(arrows.len(), 9);
    // ∅ -0-> (1), then (1) splits into colours 1 and 2
    assert!(dot.contains("n0 -> n1 [label=\"0\""));
    assert!(dot.contains("label=\"(1,1,1,1) (-1,1,1)\""));
}

#[test]
fn kr_dump_formats() {
    let o = krk(&["kr", "dump", "--type", "B1", "--rank", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "B1");
    // B^{1,1} of B^{(1)}_3 has 2ℓ+1 = 7 nodes
    assert_eq!(v["crystal"]["nodes"].as_array().unwrap().len(), 7);
    let dot = stdout(&krk(&["kr", "dump", "--type", "B1", "--rank", "3", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
}

#[test]
fn appendix_table_has_sixteen_rows() {
    let o = krk(&["appendix", "b2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(" pass ")).count(), 16);
    let j = krk(&["appendix", "b2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["jump_matches"], 32);
    assert_eq!(v["max_depth"], 7);
}

#[test]
fn paths_are_json_lines() {
    let o = krk(&["paths", "enumerate", "--type", "C1", "--rank", "2", "--maxlen", "4", "--cyclotomic-only"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).expect("one object per line")).collect();
    assert!(!lines.is_empty());
    for v in &lines {
        assert!(!v["cyclotomic_tails"].as_array().unwrap().is_empty());
        let k = v["word"].as_array().unwrap().len();
        assert_eq!(v.get("jump").is_some(), k >= 2);
    }
}

#[test]
fn tmod_and_decompose() {
    let o = krk(&["tmod", "check", "--type", "A1", "--rank", "2", "--path", "0,1,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let d = krk(&["categorify", "decompose", "--type", "A1", "--rank", "2", "--node", "0,1", "--format", "text"]);
    assert_eq!(d.status.code(), Some(0));
    assert!(stdout(&d).starts_with("0.1 = ⟨1⟩ ⊗ u"));
}

#[test]
fn out_flag_and_cache() {
    let dir: PathBuf = std::env::temp_dir().join(format!("krk-cli-test-{}", std::process::id()));
    let file = dir.join("c.json");
    std::fs::create_dir_all(&dir).unwrap();
    let args = ["crystal", "build", "--type", "C1", "--rank", "2", "--depth", "3", "--out", file.to_str().unwrap()];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_krk")).args(args).env("KRK_CACHE_DIR", &dir).output().unwrap()
    };
    assert_eq!(run().status.code(), Some(0));
    let first = std::fs::read(&file).unwrap();
    assert!(dir.join("crystal-C1_2-L0-d3.json").exists());
    assert_eq!(run().status.code(), Some(0));
    assert_eq!(std::fs::read(&file).unwrap(), first);
    let _ = std::fs::remove_dir_all(&dir);
}
