use std::path::Path;
use std::process::{Command, Output};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let o = ringlab(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn construct_validate_and_props() {
    let dir = tempfile::tempdir().unwrap();
    let u2 = construct(dir.path(), "u2.ring", &["tri", "zmod(2)", "2"]);
    let o = ringlab(&["validate", &u2]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("order 8"));

    let o = ringlab(&["props", &u2, "--prop", "nil-reversible", "--prop", "2-primal"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("nil-reversible: false"));
    assert!(out.contains("a=[0,1;0,0], b=[1,0;0,0]"));
    assert!(out.contains("2-primal: true"));

    let o = ringlab(&["props", &u2, "--prop", "reduced-ideal", "--ideal", "[0,1;0,0]", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["value"], false);

    // The file argument may itself be a ring file.
    let t = construct(dir.path(), "t.ring", &["trivext", &u2]);
    let o = ringlab(&["validate", &t]);
    assert!(stdout(&o).contains("order 64"));
}

#[test]
fn construct_variants() {
    let dir = tempfile::tempdir().unwrap();
    for (args, order) in [
        (vec!["zmod", "9"], 9),
        (vec!["product", "zmod(2)", "zmod(5)"], 10),
        (vec!["matrix", "zmod(2)", "2"], 16),
        (vec!["cong2", "zmod(4)"], 64),
        (vec!["dorroh", "null(2)", "2"], 4),
        (vec!["dorroh", "zmod(8)", "8", "--gen", "2"], 32),
        (vec!["quotient", "zmod(12)", "--gen", "4"], 4),
        (vec!["polytrunc", "alg(GF4)", "2", "--alpha", "1"], 16),
        (vec!["alg", "GF9"], 9),
        (vec!["product(zmod(2),alg(GF4))"], 8),
    ] {
        let path = construct(dir.path(), "r.ring", &args);
        let o = ringlab(&["validate", &path]);
        assert!(stdout(&o).contains(&format!("order {order}")), "{args:?}: {}", stdout(&o));
    }
    assert_eq!(code(&ringlab(&["construct", "zmod"])), 2);
    assert_eq!(code(&ringlab(&["construct", "frobnicate", "3"])), 2);
    assert_eq!(code(&ringlab(&["construct", "quotient", "zmod(4)", "--gen", "7"])), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ring");
    std::fs::write(&bad, "ring bad\norder 2\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nend\n").unwrap();
    let o = ringlab(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);

    let garbled = dir.path().join("garbled.ring");
    std::fs::write(&garbled, "ring g\norder x\n").unwrap();
    assert_eq!(code(&ringlab(&["validate", garbled.to_str().unwrap()])), 2);
    assert_eq!(code(&ringlab(&["validate", "/nonexistent/file.ring"])), 2);
    assert_eq!(code(&ringlab(&["props", garbled.to_str().unwrap(), "--prop", "no-such"])), 2);

    let big = construct(dir.path(), "big.ring", &["zmod", "64"]);
    let o = ringlab(&["props", &big, "--prop", "armendariz:2", "--poly-budget", "1000"]);
    assert_eq!(code(&o), 3);
    let o = ringlab(&["poly-suite", &big, "--degree", "2", "--poly-budget", "1000"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn poly_suite_reports() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = construct(dir.path(), "z4.ring", &["zmod", "4"]);
    let o = ringlab(&["poly-suite", &z4, "--degree", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("nilradical-identity:2: true"));
    assert!(out.contains("polyring-nil-reversible:2: true"));
    assert!(out.contains("lemma-products: not applicable"));
    let u2 = construct(dir.path(), "u2.ring", &["tri", "zmod(2)", "2"]);
    let o = ringlab(&["poly-suite", &u2, "--degree", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nilradical-identity:1: not applicable"));
}

#[test]
fn corpus_theorems_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rings");
    let manifest = dir.path().join("manifest.tsv");
    let o = ringlab(&[
        "corpus",
        "--max-order",
        "8",
        "--manifest",
        manifest.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let lines = std::fs::read_to_string(&manifest).unwrap();
    let rings = lines.lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(std::fs::read_dir(&out).unwrap().count(), rings);

    let report = dir.path().join("report.json");
    let o = ringlab(&[
        "theorems",
        "--corpus",
        out.to_str().unwrap(),
        "--format",
        "json",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["corpus"]["rings"], rings);
    assert_eq!(v["totals"]["fail"], 0);

    let o = ringlab(&["theorems", "--max-order", "4", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("def-chain"));

    let o = ringlab(&["search", "--require", "2-primal", "--forbid", "nil-reversible", "--max-order", "8"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains(": found"));
    assert!(s.lines().any(|l| l == "U2(Z2)"));
    let o = ringlab(&["search", "--require", "reduced-ideal"]);
    assert_eq!(code(&o), 2);
}
