use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ssn").chain(args.iter().copied());
    let code = ssn_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn surgery_half_slope() {
    let (code, out, _) = run(&["surgery", "-3", "2", "--slope", "-1/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("S²(3, 2, 11)"), "{out}");
}

#[test]
fn surgery_json() {
    let (code, out, _) = run(&["--json", "surgery", "-3", "2", "--slope", "-6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["orbifold"], serde_json::json!([3, 2, 0]));
}

#[test]
fn bad_knot_and_slope_exit_one() {
    assert_eq!(run(&["surgery", "2", "3", "--slope", "1"]).0, 1);
    assert_eq!(run(&["surgery", "-3", "2", "--slope", "1/0"]).0, 1);
    assert_eq!(run(&["surgery", "-3", "2", "--slope", "x"]).0, 1);
    assert_eq!(run(&["nope"]).0, 1);
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("knm"));
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn knm_pretzel() {
    let (code, out, _) = run(&["knm", "-6", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("P(-2,3,7)"));
    assert!(out.contains("|p| <= 100"));
    let (_, out, _) = run(&["knm", "-6", "1", "--bound", "20"]);
    assert!(out.contains("|p| <= 20"));
    assert_eq!(run(&["knm", "0", "1", "--bound", "1"]).0, 1);
}

#[test]
fn knm_grid_rows() {
    let (code, out, _) = run(&["--json", "knm", "--grid", "-3:-1,0:2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!((rows[0]["m"].as_i64(), rows[0]["n"].as_i64()), (Some(-3), Some(0)));
    assert_eq!(run(&["knm", "--grid", "2:1,0:0"]).0, 1);
}

#[test]
fn twist_checks_ambient() {
    let (code, out, _) = run(&["twist", "-1", "c", "-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("P(3,-3,-3)(-1)"), "{out}");
    let (code, _, err) = run(&["twist", "5", "c", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a seiferter"));
    assert_eq!(run(&["twist", "0", "s_9", "1"]).0, 1);
}

#[test]
fn pairs_and_kp() {
    let (code, out, _) = run(&["pairs", "-6"]);
    assert_eq!(code, 0);
    assert!(out.contains("c_1, c_2, c_3 status"));
    let (code, out, _) = run(&["kp", "-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("S²(7, 2, 5)") && out.contains("excluded"));
}

#[test]
fn triple_flags_open_case() {
    let (_, out, _) = run(&["triple", "-2"]);
    assert!(out.contains("mirror") && out.contains("open"));
    let (_, out, _) = run(&["triple", "3"]);
    assert!(!out.contains("open"));
}

#[test]
fn network_formats() {
    let (code, out, _) = run(&["network", "--preset", "named-knots", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph ssn {"));
    assert!(out.contains("P(-2,3,7)(19)"));
    let (_, a, _) = run(&["--json", "network", "--preset", "cm-lines", "--m", "-6", "--radius", "2"]);
    let (_, b, _) = run(&["--json", "network", "--preset", "cm-lines", "--m", "-6", "--radius", "2"]);
    assert_eq!(a, b);
    assert_eq!(run(&["network"]).0, 1);
}

#[test]
fn network_from_config() {
    let dir = std::env::temp_dir().join(format!("ssn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("net.toml");
    std::fs::write(&path, "seeds = [-1]\nseiferters = [\"c_mu\"]\nradius = 3\n").unwrap();
    let (code, out, _) = run(&["network", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("7 vertices, 6 edges"), "{out}");
    std::fs::write(&path, "seeds = [-1]\nbogus = 1\n").unwrap();
    assert_eq!(run(&["network", "--config", path.to_str().unwrap()]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_filters() {
    let (code, out, _) = run(&["verify", "pretzel"]);
    assert_eq!(code, 0);
    assert!(out.contains("all claims pass"));
    assert_eq!(run(&["verify", "no-such-tag"]).0, 1);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_ssn"))
        .args(["surgery", "-3", "2", "--slope", "-5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("S²(3, 2, 1)"));
}
