use std::io::Write;
use std::process::{Command, Output, Stdio};

use boxpierce::io::parse_instance;

fn boxpierce(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boxpierce"))
        .args(args)
        .env_remove("BOXPIERCE_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn boxpierce");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or_default()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gadget_pipeline() {
    let inst = boxpierce(&["gen", "gadget"], None);
    assert!(inst.status.success());
    let report = boxpierce(&["pierce", "--algo", "twoline"], Some(&inst.stdout));
    assert!(report.status.success(), "{}", String::from_utf8_lossy(&report.stderr));
    let r = json(&report);
    assert_eq!(r["size"], 3);
    assert_eq!(r["guarantee"], 3.0);
    assert_eq!(r["nu_used"], 2);
    let verify = boxpierce(&["verify", "--oracle"], Some(&report.stdout));
    assert_eq!(verify.status.code(), Some(0));
    let v = json(&verify);
    assert_eq!(v["hits_all"], true);
    assert_eq!(v["size"], 3);
    assert_eq!(v["tau"], 3);
}

#[test]
fn verify_reports_unpierced_box() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("g.json");
    let pts = dir.path().join("p.json");
    std::fs::write(&inst, boxpierce(&["gen", "gadget"], None).stdout).unwrap();
    // (0, 2) and (6, 0) miss the box [3,6] x [2,5] (index 3).
    std::fs::write(&pts, "[[0, 2], [6, 0]]").unwrap();
    let out = boxpierce(&["verify", inst.to_str().unwrap(), pts.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["hits_all"], false);
    assert_eq!(v["violations"], serde_json::json!([3]));
}

#[test]
fn precondition_and_cap_exit_codes() {
    let three_d = boxpierce(&["gen", "random", "--n-boxes", "5", "--dim", "3"], None);
    let out = boxpierce(&["pierce", "--algo", "planar"], Some(&three_d.stdout));
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let no_lines = boxpierce(&["gen", "random", "--n-boxes", "5"], None);
    assert_eq!(boxpierce(&["pierce", "--algo", "twoline"], Some(&no_lines.stdout)).status.code(), Some(2));

    let big = boxpierce(&["gen", "random", "--n-boxes", "40", "--seed", "3"], None);
    assert_eq!(boxpierce(&["pierce", "--algo", "planar"], Some(&big.stdout)).status.code(), Some(3));
    assert_eq!(boxpierce(&["nu"], Some(&big.stdout)).status.code(), Some(3));

    let gadget = boxpierce(&["gen", "gadget"], None);
    assert_eq!(boxpierce(&["tau", "--cap", "4"], Some(&gadget.stdout)).status.code(), Some(3));
    let with_env = Command::new(env!("CARGO_BIN_EXE_boxpierce"))
        .args(["nu", "-"])
        .env("BOXPIERCE_CAP", "4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(&gadget.stdout)?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(with_env.status.code(), Some(3));
}

#[test]
fn malformed_input_is_io_error() {
    let out = boxpierce(&["nu"], Some(b"{\"dim\": 1, \"boxes\": [[[3, 1]]]}"));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("box 0"));
    assert_eq!(boxpierce(&["nu", "/nonexistent/file.json"], None).status.code(), Some(1));
}

#[test]
fn bounds_csv() {
    let out = boxpierce(&["bounds", "prop3", "15", "2"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.starts_with("rule,n,d,value\n"));
    assert!(text.lines().any(|l| l == "prop3,5,2,10"));
    assert_eq!(boxpierce(&["bounds", "prop3", "15", "2"], None).stdout, out.stdout);

    let lemma = String::from_utf8(boxpierce(&["bounds", "lemma1", "4", "3"], None).stdout).unwrap();
    assert!(lemma.lines().any(|l| l == "lemma1,4,3,20.000000"));
    assert_eq!(boxpierce(&["bounds", "nonsense", "3", "2"], None).status.code(), Some(2));
}

#[test]
fn extremal_then_tau() {
    let inst = boxpierce(&["gen", "extremal", "4"], None);
    let out = boxpierce(&["tau"], Some(&inst.stdout));
    assert!(out.status.success());
    assert_eq!(json(&out)["tau"], 6);
    let nu = boxpierce(&["nu"], Some(&inst.stdout));
    assert_eq!(json(&nu)["nu"], 4);
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = boxpierce(
        &["gen", "random", "--n-boxes", "7", "--lines", "1", "5", "9", "--lo", "-3", "--hi", "12", "--seed", "11", "--out", path.to_str().unwrap()],
        None,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let inst = parse_instance(&text).unwrap();
    assert!(inst.family.lines().is_some());
    assert_eq!(boxpierce::io::format_instance(&inst), text);
}

#[test]
fn every_algorithm_output_verifies() {
    for (gen, algos) in [
        (vec!["gen", "random", "--n-boxes", "9", "--dim", "1", "--seed", "2"], vec!["interval", "ddim"]),
        (vec!["gen", "random", "--n-boxes", "9", "--seed", "2", "--lines", "1", "6", "14"], vec!["twoline", "planar", "ddim"]),
        (vec!["gen", "random", "--n-boxes", "9", "--dim", "3", "--seed", "2"], vec!["ddim"]),
    ] {
        let inst = boxpierce(&gen, None);
        for algo in algos {
            for policy in ["balanced", "dp"] {
                let report = boxpierce(&["pierce", "--algo", algo, "--policy", policy], Some(&inst.stdout));
                assert!(report.status.success(), "{algo}: {}", String::from_utf8_lossy(&report.stderr));
                assert_eq!(boxpierce(&["verify"], Some(&report.stdout)).status.code(), Some(0), "{algo}");
            }
        }
    }
}

#[test]
fn bench_runs_clean() {
    let out = boxpierce(&["bench", "--count", "30", "--n-boxes", "8", "--parallel"], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let serial = boxpierce(&["bench", "--count", "30", "--n-boxes", "8"], None);
    assert_eq!(out.stdout, serial.stdout);
    assert_eq!(json(&out)["violations"], serde_json::json!([]));
}
