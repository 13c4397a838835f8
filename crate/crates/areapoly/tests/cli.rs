use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn areapoly(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_areapoly"))
        .args(args)
        .output()
        .expect("spawn");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let r = areapoly(&full);
    let v = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", r.stdout));
    (r.code, v)
}

#[test]
fn validate_and_zt_from_files() {
    let r = areapoly(&["validate", &data("t1.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = areapoly(&["zt", &data("t1.json")]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout.trim(),
        "U^2 + 2*U*B1 + U*B2 + U*B4 + B1^2 + B1*B2 + B1*B3 + B1*B4"
    );
    let r = areapoly(&["pt", &data("center_fan.json")]);
    assert_eq!(r.stdout.trim(), "B1 - B2 + B3 - B4");
}

#[test]
fn invalid_triangulation_exits_one_on_validate_and_two_elsewhere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"vertices":["p","q","r","s"],"corners":["p","q","r","s"],"triangles":[["p","q","r"]]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = json(&["validate", p]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
    assert_eq!(areapoly(&["zt", p]).code, 2);
}

#[test]
fn check_reports_and_rejects_non_monic_input() {
    let (code, v) = json(&["check", "--all", &data("t1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["monic_in_U"]["pass"], true);
    assert_eq!(v["proposition_exponents"]["B4"], serde_json::json!([1, 1]));
    assert_eq!(v["divisibility_quotient"], "B1 + B2 + B3 + B4");
    assert_eq!(v["independent"], true);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad_zt.txt");
    fs::write(&bad, "2*U^2 + B1^2\n").unwrap();
    let r = areapoly(&["check", "--all", &data("t1.json"), "--zt", bad.to_str().unwrap()]);
    assert_eq!(r.code, 1, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("monic in U: FAIL"));

    let given = areapoly(&["check", "--monic", &data("t1.json"), "--zt", &data("zt_t1.txt")]);
    assert_eq!(given.code, 0, "{}", given.stderr);
}

#[test]
fn polynomial_syntax_errors_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("p.txt");
    fs::write(&bad, "U**2").unwrap();
    let r = areapoly(&["verify-vanish", &data("t1.json"), bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("column 3"), "{}", r.stderr);
}

#[test]
fn unknown_command_and_guard() {
    assert_eq!(areapoly(&["frobnicate"]).code, 2);
    let r = areapoly(&["zt", "corpus:T2", "--guard-basis", "3"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    assert!(r.stderr.contains("guard"));
    let (code, v) = json(&["zt", "corpus:T2", "--guard-bits", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["kind"], "guard");
}

#[test]
fn oracle_diagonal() {
    let (code, v) = json(&["oracle-diagonal", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["slots"]["B2"], "A_1");
    assert_eq!(v["slots"]["B5"], "B_2");
    let z2 = areapoly(&["zt", "corpus:T2"]).stdout;
    assert_eq!(areapoly(&["oracle-diagonal", "2"]).stdout, z2);
}

#[test]
fn vanishing_on_random_and_given_drawings() {
    let r = areapoly(&[
        "verify-vanish",
        "corpus:T1",
        &data("zt_t1.txt"),
        "--samples",
        "25",
        "--seed",
        "9",
    ]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    let r = areapoly(&[
        "verify-vanish",
        &data("t1.json"),
        &data("zt_t1.txt"),
        &data("t1_trapezoid.drawing.json"),
    ]);
    assert_eq!(r.code, 0);

    let dir = tempfile::tempdir().unwrap();
    let wrong = dir.path().join("wrong.txt");
    fs::write(&wrong, "U + B1").unwrap();
    let r = areapoly(&[
        "verify-vanish",
        &data("t1.json"),
        wrong.to_str().unwrap(),
        "--samples",
        "5",
    ]);
    assert_eq!(r.code, 1);
}

#[test]
fn areas_are_reproducible_for_a_seed() {
    let a = areapoly(&["areas", "corpus:T2", "--seed", "17", "--json"]);
    let b = areapoly(&["areas", "corpus:T2", "--seed", "17", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = areapoly(&["areas", "corpus:T2", "--seed", "18", "--json"]);
    assert_ne!(a.stdout, c.stdout);
    let (_, v) = json(&["areas", &data("t1.json"), &data("t1_square.drawing.json")]);
    assert_eq!(v["U"], "-1");
    assert_eq!(v["B"], serde_json::json!(["1/2", "1/2", "1/2", "1/2"]));
}

#[test]
fn coloring_and_certificates() {
    let (code, v) = json(&["color", &data("t1.json"), &data("t1_square.drawing.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"]["p"], "C");
    assert_eq!(v["colors"]["q"], "A");
    assert_eq!(v["colors"]["s"], "B");
    assert_eq!(v["colors"]["p1"], "A");
    let (code, v) = json(&["rainbow", &data("t1.json"), &data("t1_square.drawing.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "OK");
    assert!(v["nu_Wj"].as_i64().unwrap() <= v["nu_U"].as_i64().unwrap());
    for seed in ["1", "2", "3"] {
        assert_eq!(areapoly(&["rainbow", "corpus:T1-refined", "--seed", seed]).code, 0);
    }
}

#[test]
fn degenerate_frame_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("flat.json");
    fs::write(
        &d,
        r#"{"coords":{"p":["0","0"],"q":["1","0"],"r":["3","0"],"s":["2","0"]}}"#,
    )
    .unwrap();
    let r = areapoly(&["color", &data("t0.json"), d.to_str().unwrap()]);
    assert_eq!(r.code, 2, "{}", r.stderr);
}

#[test]
fn poof_and_equidissection() {
    let (code, v) = json(&["poof", &data("square_t_vertex.dissection.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["original"], 3);
    assert_eq!(v["inserted"], 1);
    assert_eq!(v["triangulation"]["corners"], serde_json::json!(["p", "q", "r", "s"]));

    let (code, v) = json(&["equidissect-report", &data("square_quarters.dissection.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["equal_areas"]["n"], 4);
    assert_eq!(v["equal_areas"]["even"], true);
    assert_eq!(v["bound"], -1);
    let (code, v) = json(&["equidissect-report", &data("square_unequal.dissection.json")]);
    assert_eq!(code, 0);
    assert!(v["equal_areas"].is_null());

    let dir = tempfile::tempdir().unwrap();
    let gap = dir.path().join("gap.json");
    fs::write(
        &gap,
        r#"{"corners":[["0","0"],["1","0"],["1","1"],["0","1"]],"triangles":[[["0","0"],["1","0"],["1","1"]]]}"#,
    )
    .unwrap();
    assert_eq!(areapoly(&["poof", gap.to_str().unwrap()]).code, 2);
}

#[test]
fn integral_equation_has_true_area_root() {
    let (code, v) = json(&[
        "integral-equation",
        &data("t1.json"),
        &data("t1_trapezoid.drawing.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["monic"], true);
    assert_eq!(v["u"], "-1");
    assert_eq!(v["equation"], "u^2 + 3/2*u + 1/2");
}

#[test]
fn selftest_json() {
    let (code, v) = json(&["selftest"]);
    assert_eq!(code, 0);
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 14);
    assert!(items.iter().all(|i| i["pass"] == true));
}
