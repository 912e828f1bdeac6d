use std::process::Command;

use qkflag::cli::run_from;
use qkflag::flag::Flag;
use qkflag::qls::QlsPath;
use qkflag::ring::QkClass;

fn run(args: &[&str]) -> (i32, String) {
    run_from(std::iter::once("qkflag").chain(args.iter().copied()))
}

#[test]
fn documented_examples() {
    let g2 = ["kgw", "--type", "G2", "-i", "2", "-w", "2,1,2,1,2", "-x", "e", "-d", "1,2", "--method", "reduced"];
    assert_eq!(run(&g2), (0, "1 + e^[-3,-2]\n".into()));
    assert_eq!(run(&["lift", "--type", "A2", "--K", "1", "-d", "1"]), (0, "[1,0]\n".into()));
    let (code, out) = run(&["check", "classification", "--max-rank", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("pass classification"), "{out}");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_qkflag"))
        .args(["lift", "--type", "A3", "--K", "2", "-d", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[1,2,1]\n");
    let bad = Command::new(env!("CARGO_BIN_EXE_qkflag")).args(["lift", "--type", "Z9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn kgw_variants() {
    let base = ["kgw", "--type", "G2", "-w", "2,1,2,1,2", "-d", "1,2"];
    let with = |extra: &[&str]| {
        let mut v: Vec<&str> = base.to_vec();
        v.extend_from_slice(extra);
        run(&v)
    };
    assert_eq!(with(&["-i", "2", "-x", "e", "--dual-basis"]).1, "1 + e^[-3,-2]\n");
    assert_eq!(with(&["-i", "2", "-x", "2", "--dual-basis"]).1, "-e^[-3,-2]\n");
    assert_eq!(with(&["-i", "2", "-x", "1", "--dual-basis"]).1, "0\n");
    assert_eq!(with(&["-x", "e", "--two-point"]).1, "1\n");
    assert_eq!(with(&["-i", "2", "-x", "e", "--nonequivariant"]).1, "2\n");
    assert_eq!(with(&["-i", "2", "-x", "e", "--weight-basis"]).1, "1 + e^[0,-1]\n");
    for m in ["pairing", "full", "reduced"] {
        assert_eq!(with(&["-i", "2", "-x", "1", "--method", m]).1, "1 + e^[-3,-2]\n");
    }
    assert_eq!(with(&["-i", "2", "-x", "e", "--method", "fast"]).0, 2);
}

#[test]
fn chevalley_json_round_trips_and_is_deterministic() {
    let args = ["chevalley", "--type", "B2", "--K", "2", "-i", "2", "-w", "1,2", "--format", "json"];
    let (code, a) = run(&args);
    assert_eq!(code, 0, "{a}");
    assert_eq!(run(&args).1, a);
    let flag = Flag::parse("B2").unwrap();
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let class = QkClass::from_json(flag.group(), &v).unwrap();
    assert_eq!(serde_json::to_string_pretty(&class.to_json(flag.group())).unwrap() + "\n", a);
    let tsv = run(&["chevalley", "--type", "A1", "-i", "1", "-w", "1", "--format", "tsv"]).1;
    assert_eq!(tsv, "w\tQ\twt\tc\ne\t[1]\t[-2]\t1\n1\t[0]\t[-2]\t-1\n1\t[0]\t[0]\t1\n");
    let text = run(&["chevalley", "--type", "G2", "-i", "2", "-w", "2,1,2,1,2", "--via-qls"]).1;
    assert_eq!(text, run(&["chevalley", "--type", "G2", "-i", "2", "-w", "2,1,2,1,2"]).1);
}

#[test]
fn qls_listing() {
    let (code, out) = run(&["qls", "--type", "G2", "-i", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    assert_eq!(run(&["qls", "--type", "G2", "-i", "2", "--ls-only"]).1.lines().count(), 14);
    let json = run(&["qls", "--type", "G2", "-i", "2", "--stats", "-w", "e", "--format", "json"]).1;
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 15);
    let flag = Flag::parse("G2").unwrap();
    for r in &rows {
        let eta = QlsPath::from_json(flag.group(), &r["path"]).unwrap();
        assert_eq!(eta.to_json(flag.group()), r["path"]);
        assert!(r["kappa"].is_string() && r["zeta"].is_array() && r["wt"].is_array());
    }
}

#[test]
fn qbg_dumps() {
    let dot = run(&["qbg", "--type", "G2", "--format", "dot"]).1;
    assert_eq!(dot.matches("style=dashed").count(), 18);
    assert_eq!(dot.matches("style=solid").count(), 20);
    let half = run(&["qbg", "--type", "G2", "-i", "2", "--a-lambda", "1/2"]).1;
    // Twelve alpha_1 edges and four theta edges.
    assert_eq!(half.lines().count(), 1 + 12 + 4);
    let json = run(&["qbg", "--type", "A2", "--K", "1", "--format", "json"]).1;
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["qbg", "--type", "G2", "--a-lambda", "1/2"]).0, 2);
}

#[test]
fn dump_rootsys() {
    let (code, out) = run(&["--dump-rootsys", "lift", "--type", "G2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theta"], serde_json::json!([3, 2]));
    assert_eq!(v["pairing_one_nodes"], serde_json::json!([1]));
}

#[test]
fn check_reports_as_json() {
    let (code, out) = run(&["check", "g2-golden", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["instances"], 36);
    assert_eq!(v[0]["failures"], serde_json::json!([]));
    assert_eq!(run(&["check", "nonsense"]).0, 2);
}
