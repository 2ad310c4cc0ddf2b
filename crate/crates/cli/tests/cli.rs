use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn secdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const K3: &str = "# triangle\n3 3\n0 1\n1 2\n0 2\n";

#[test]
fn gen_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = secdom(&[
            "gen",
            "chordal-bisplit",
            "--leaves",
            "4",
            "--x",
            "3",
            "--seed",
            "7",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let meta: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.txt.json")).unwrap()).unwrap();
    assert_eq!(meta["schema"], 1);
    assert_eq!(meta["spec"]["seed"], 7);
    assert_eq!(meta["partition"]["kind"], "bisplit");

    let out = secdom(&[
        "recognize",
        a.to_str().unwrap(),
        "--class",
        "chordal-bisplit",
    ]);
    assert_eq!(json(&out)["member"], true);
}

#[test]
fn gen_reports_missing_parameters() {
    let out = secdom(&["gen", "split", "--clique", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--independent"));
}

#[test]
fn recognize_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    let v = json(&secdom(&["recognize", &c4, "--class", "split"]));
    assert_eq!(v["class"], "split");
    assert_eq!(v["member"], false);
    assert!(v.get("partition").is_none());

    let v = json(&secdom(&["recognize", &c4, "--class", "chain"]));
    assert_eq!(v["member"], true);
    let v = json(&secdom(&["recognize", &c4, "--class", "chordal"]));
    assert_eq!(v["member"], false);
    let v = json(&secdom(&["recognize", &c4, "--class", "chordal-bipartite"]));
    assert_eq!(v["member"], true);
    assert_eq!(v["partition"]["x"], serde_json::json!([0, 2]));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    let out = secdom(&["verify", &c4, "--set", "0,1", "--secure"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["secure"], true);
    assert_eq!(v["certificate"].as_object().unwrap().len(), 2);

    // the centre of K_{1,3} dominates, but any swap exposes two leaves
    let star = write(dir.path(), "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let out = secdom(&["verify", &star, "--set", "0", "--secure"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["dominating"], true);
    assert_eq!(v["secure"], false);
    assert!(v.get("certificate").is_none());

    let out = secdom(&["verify", &star, "--set", "0"]);
    assert!(out.status.success());
    let out = secdom(&["verify", &c4, "--set", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn solve_exact_and_class_solvers() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    assert_eq!(json(&secdom(&["solve", &c4, "--exact"]))["size"], 2);
    assert_eq!(
        json(&secdom(&["solve", &c4, "--exact", "--domination"]))["size"],
        2
    );

    let k23 = write(dir.path(), "k23.txt", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let v = json(&secdom(&["solve", &k23, "--chain", "--certify"]));
    assert_eq!(v["size"], 2);
    assert_eq!(v["certified"]["oracle_size"], 2);
    assert!(v["branch_taken"].is_string());

    let out = secdom(&["solve", &c4, "--chordal-bisplit"]);
    assert_eq!(out.status.code(), Some(1));
    let out = secdom(&["solve", &c4]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reduce_writes_target_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", K3);
    let target = dir.path().join("t.txt");
    let out = secdom(&[
        "reduce",
        &k3,
        "--kind",
        "split-dd",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let edges = fs::read_to_string(&target).unwrap();
    assert!(edges.starts_with("5 7\n"));
    let side: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("t.txt.json")).unwrap()).unwrap();
    assert_eq!(side["schema"], 1);
    assert_eq!(side["kind"], "split-dd");
    assert_eq!(side["param_map"], serde_json::json!({"a": 1, "b": 1}));
    assert_eq!(side["provenance"].as_array().unwrap().len(), 5);

    let out = secdom(&[
        "reduce",
        &k3,
        "--kind",
        "split-sdd",
        "--out",
        target.to_str().unwrap(),
        "--partition",
        r#"{"class":"split","clique":[0,1],"independent":[2]}"#,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(fs::read_to_string(&target).unwrap().starts_with("10 "));

    let c4 = write(dir.path(), "c4.txt", C4);
    let out = secdom(&["reduce", &c4, "--kind", "split-dd"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn crosscheck_reports() {
    let out = secdom(&["crosscheck", "--suite", "kpq"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["hits"], 15);

    let out = secdom(&["crosscheck", "--suite", "kpq", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,suite,instance,"));
    assert_eq!(text.lines().count(), 16);

    // the doubling suites contain refuted instances
    let out = secdom(&[
        "crosscheck",
        "--suite",
        "cbip-doubling",
        "--random",
        "0",
        "--exhaustive-max-n",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(json(&out)["summary"]["claim_violations"].as_u64().unwrap() > 0);
}
