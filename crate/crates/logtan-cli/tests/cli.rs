//! End-to-end tests of the `logtan` binary: JSON shape, exit codes, and
//! byte-identical reruns under identical configuration.

use std::process::{Command, Output};

fn logtan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logtan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn stability_report_shape() {
    let out = logtan(&["stability", "--poly", "x0*x1^3 + x2^4 + x3^4", "--vars", "4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "Inconclusive");
    assert_eq!(v["q"], 1);
    assert_eq!(v["r"], 1);
    assert_eq!(v["singDeg"], 18);
    assert_eq!(v["bound"], 18);
}

#[test]
fn stability_nodal_cubic_stable() {
    let out = logtan(&[
        "stability",
        "--poly",
        "x0^2*x3 + x1^2*x3 + x2^2*x3 + x0^3 + 2*x1^3 + 3*x2^3 + x0*x1*x2",
        "--vars",
        "4",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "SlopeStable");
    assert_eq!(v["criterion"], "TheoremC");
    assert_eq!(v["singDeg"], 1);
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["quiver", "--n", "4"],
        vec!["det-suite", "--n", "2", "--flavor", "generic"],
        vec!["semigeneric", "--n", "3", "--seed", "5"],
        vec!["cover", "--n", "7"],
        vec!["hilbert", "--gens", "x0^2; x1^3", "--vars", "3"],
    ] {
        let a = logtan(&args);
        let b = logtan(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn rationals_flag_changes_field_but_not_verdict() {
    let args_p = [
        "stability", "--poly", "x0^3 + x1^3 + x2^3 + x3^3", "--vars", "4",
    ];
    let out_p = logtan(&args_p);
    let mut args_q = args_p.to_vec();
    args_q.push("--rationals");
    let out_q = logtan(&args_q);
    assert!(out_p.status.success() && out_q.status.success());
    assert_eq!(
        stdout_json(&out_p)["verdict"],
        stdout_json(&out_q)["verdict"]
    );
}

#[test]
fn exit_codes() {
    // 0: successful check.
    assert_eq!(logtan(&["quiver", "--n", "3"]).status.code(), Some(0));
    // 2: usage error (unparseable polynomial).
    let bad = logtan(&["stability", "--poly", "x0 +* x1", "--vars", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    // 2: clap-level usage error.
    let usage = logtan(&["no-such-subcommand"]);
    assert_eq!(usage.status.code(), Some(2));
    // 3: scale abort (quiver beyond the enumeration cap).
    let scale = logtan(&["quiver", "--n", "40"]);
    assert_eq!(scale.status.code(), Some(3));
    // 3: scale abort (resolution beyond the engine cap).
    let res = logtan(&["resolution", "--n", "4", "--flavor", "generic"]);
    assert_eq!(res.status.code(), Some(3));
}

#[test]
fn det_suite_reports_all_checks() {
    let out = logtan(&["det-suite", "--n", "2", "--flavor", "symmetric"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"partialsAreMinors"));
    assert!(names.contains(&"resolutionTable"));
    assert!(names.contains(&"restrictionVanishing"));
}

#[test]
fn selftest_passes() {
    let out = logtan(&["selftest"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.lines().all(|l| l.starts_with("PASS")));
}
