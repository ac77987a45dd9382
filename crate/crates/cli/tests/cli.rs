use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn kblocks(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kblocks"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = kblocks(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn generate(dir: &Path, name: &str, family: &[&str]) -> String {
    let path = dir.join(name);
    let mut args = vec!["gen"];
    args.extend(family);
    args.extend(["-o", path.to_str().unwrap()]);
    ok(&args, None);
    path.to_str().unwrap().to_string()
}

#[test]
fn grid_has_one_inner_4_block() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(dir.path(), "grid5x5.txt", &["grid", "5", "5"]);
    let v = json(&ok(&["blocks", "-k", "4", "-i", &grid, "--format", "json"], None));
    assert_eq!(v["command"], "blocks");
    assert_eq!(v["graph"]["n"], 25);
    assert_eq!(v["k"], 4);
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0].as_array().unwrap().len(), 9);
    assert_eq!(blocks[0][0], "6");
}

#[test]
fn beta_of_k5_reads_stdin() {
    let k5 = ok(&["gen", "complete", "5"], None);
    assert_eq!(ok(&["beta"], Some(&k5)), "5\n");
}

#[test]
fn decide_exit_codes_and_witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pi = generate(dir.path(), "pi.txt", &["complement-three-paths"]);
    let out = kblocks(&["decide", "-k", "7", "-i", &pi], None);
    assert_eq!(out.status.code(), Some(3));
    let v = json(std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(v["has_block"], false);
    assert!(!v["witness"].as_array().unwrap().is_empty());

    let w = dir.path().join("w.json");
    fs::write(&w, &out.stdout).unwrap();
    let v = json(&ok(&["verify", "--witness", w.to_str().unwrap(), "-i", &pi], None));
    assert_eq!(v["valid"], true);

    let yes = kblocks(&["decide", "-k", "6", "-i", &pi, "--format", "text"], None);
    assert_eq!(yes.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&yes.stdout).starts_with("yes: "));
}

#[test]
fn tampered_witness_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = generate(dir.path(), "p4.txt", &["path", "4"]);
    let w = dir.path().join("w.json");
    fs::write(&w, r#"{"k": 2, "witness": []}"#).unwrap();
    let out = kblocks(&["verify", "--witness", w.to_str().unwrap(), "-i", &p, "--format", "text"], None);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "invalid: nothing separates 0 1\n");
}

#[test]
fn errors_exit_2_with_one_line() {
    for (args, stdin) in [
        (vec!["beta"], "a a\n"),
        (vec!["blocks", "-k", "0"], "a b\n"),
        (vec!["blocks", "-k", "2", "-i", "/definitely/missing"], ""),
        (vec!["oracle-check", "--budget", "10"], "0 1\n1 2\n2 3\n3 0\n"),
        (vec!["gen", "apex", "5", "10", "10"], ""),
        (vec!["witness", "-k", "2"], "a b\n"),
        (vec!["blocks", "-k", "2", "--format", "yaml"], "a b\n"),
    ] {
        let out = kblocks(&args, Some(stdin));
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        let diagnostic: Vec<&str> = err.lines().filter(|l| !l.contains(" WARN ")).collect();
        assert!(!diagnostic.is_empty(), "{args:?}");
        if !args.contains(&"--format") {
            assert_eq!(diagnostic.len(), 1, "{args:?}: {err}");
            assert!(diagnostic[0].starts_with("kblocks: error: "), "{err}");
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let a = ok(&["gen", "gnp", "12", "0.4", "--seed", "9"], None);
    let b = ok(&["gen", "gnp", "12", "0.4", "--seed", "9"], None);
    assert_eq!(a, b);
    let r1 = ok(&["all-blocks"], Some(&a));
    let r2 = ok(&["all-blocks", "--parallel", "3"], Some(&a));
    assert_eq!(r1, r2);
    let t1 = ok(&["theorem", "--name", "avg_deg", "-k", "2", "--samples", "3", "--seed", "4"], None);
    let t2 = ok(&["theorem", "--name", "avg_deg", "-k", "2", "--samples", "3", "--seed", "4"], None);
    assert_eq!(t1, t2);
    let v = json(&t1);
    assert_eq!(v["seed"], 4);
    assert!(v.get("graph").is_none());
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["verdict"] == "holds"));
}

#[test]
fn kappa_cache_is_written_then_reused() {
    let dir = tempfile::tempdir().unwrap();
    let pet = generate(dir.path(), "pet.txt", &["petersen"]);
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    let fresh = ok(&["blocks", "-k", "3", "-i", &pet, "--kappa-cache", c], None);
    assert!(cache.exists());
    let reused = ok(&["blocks", "-k", "3", "-i", &pet, "--kappa-cache", c], None);
    assert_eq!(fresh, reused);
    assert_eq!(fresh, ok(&["blocks", "-k", "3", "-i", &pet], None));
    assert_eq!(json(&ok(&["verify", "--kappa", c, "-i", &pet], None))["valid"], true);

    // A cache for a different graph is refused.
    let c5 = generate(dir.path(), "c5.txt", &["cycle", "5"]);
    assert_eq!(kblocks(&["beta", "-i", &c5, "--kappa-cache", c], None).status.code(), Some(2));
}

#[test]
fn decomposition_reports_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "lex.txt", &["ladder-lex", "4", "3"]);
    for cmd in [vec!["blocks", "-k", "5"], vec!["bw"]] {
        let d = dir.path().join("d.json");
        let mut args = cmd.clone();
        args.extend(["-i", &g, "-o", d.to_str().unwrap()]);
        ok(&args, None);
        let mut verify = vec!["verify", "--decomposition", d.to_str().unwrap(), "-i", &g];
        if cmd[0] == "bw" {
            verify.extend(["-k", "5"]);
        }
        let v = json(&ok(&verify, None));
        assert_eq!(v["valid"], true, "{cmd:?}: {v}");
    }
    let v = json(&ok(&["bw", "-i", &g], None));
    assert_eq!(v["block_width"], 4);
    assert!(v["adhesion"].as_u64().unwrap() <= 4 && v["width"].as_u64().unwrap() <= 4);
}

#[test]
fn dot_marks_block_leaves() {
    let p4 = ok(&["gen", "path", "4"], None);
    let dot = ok(&["blocks", "-k", "2", "--format", "dot"], Some(&p4));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count() + 1, dot.matches("label=").count());
    assert!(dot.matches("label=").count() <= 7);
    let single = ok(&["blocks", "-k", "3", "--format", "dot"], Some(&ok(&["gen", "complete", "5"], None)));
    assert_eq!(single.matches("->").count(), 0);
}

#[test]
fn analysis_commands() {
    let k7 = ok(&["gen", "complete", "7"], None);
    let v = json(&ok(&["tangle", "-k", "4"], Some(&k7)));
    assert_eq!(v["outcome"], "tangle");

    let tk6 = ok(&["gen", "subdivided-complete", "6"], None);
    let out = kblocks(&["tangle", "-k", "5", "--set", "0,1,2,3,4,5"], Some(&tk6));
    assert_eq!(out.status.code(), Some(3));
    let v = json(std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(v["outcome"], "covering_triple");
    assert_eq!(v["separations"].as_array().unwrap().len(), 3);

    let pi = ok(&["gen", "complement-three-paths"], None);
    let v = json(&ok(&["tshaped", "-k", "6"], Some(&pi)));
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["none_t_shaped"], false);

    let v = json(&ok(&["oracle-check"], Some(&pi)));
    assert_eq!(v["agree"], true);

    let pet = ok(&["gen", "petersen"], None);
    assert_eq!(ok(&["kappa", "--pair", "0", "2", "--format", "text"], Some(&pet)), "3\n");
    let v = json(&ok(&["kappa"], Some(&pet)));
    assert_eq!(v["kappa_table"].as_array().unwrap().len(), 30);
    assert_eq!(ok(&["verify", "--certificate", "0,2,7", "-k", "3", "--format", "text"], Some(&pet)), "valid\n");
}

#[test]
fn dimacs_input_is_detected() {
    let out = ok(&["beta"], Some("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"));
    assert_eq!(out, "3\n");
}
