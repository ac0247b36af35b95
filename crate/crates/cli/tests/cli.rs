use std::path::PathBuf;
use std::process::{Command, Output};

fn sphcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sphcover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = sphcover(&["verify", "lemma1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS lemma1")));
}

#[test]
fn failing_claims_exit_one() {
    let out = sphcover(&["verify", "lemma1", "--tol", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(sphcover(&["verify", "lemma7"]).status.code(), Some(2));
    assert_eq!(
        sphcover(&["verify", "lemma1", "--n", "8"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sphcover(&["verify", "lemma1", "--delta", "2.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(sphcover(&["sweep"]).status.code(), Some(2));
    assert_eq!(sphcover(&["measure", "hexagon"]).status.code(), Some(2));
    assert_eq!(
        sphcover(&["verify", "lemma1", "--delta-grid", "0.1:0.2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn io_errors_exit_three() {
    let out = sphcover(&["sweep", "lemma3", "--out", "/nonexistent-dir/x/report.csv"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        sphcover(&["circumcap", "/nonexistent-dir/points.json"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn sweep_writes_csv_and_is_deterministic() {
    let a = scratch("a.csv");
    let b = scratch("b.csv");
    for path in [&a, &b] {
        let out = sphcover(&[
            "sweep",
            "lemma2",
            "--delta-grid",
            "0.05:pi/2:50",
            "--n",
            "256",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "claim_id,delta,n,alpha,seed,formula_value,numeric_value,abs_error,tolerance,passed"
    );
    assert_eq!(lines.count(), 50);
}

#[test]
fn sweep_json_mirrors_rows() {
    let out = sphcover(&[
        "sweep", "oracle", "--count", "5", "--seed", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["seed"], 3);
    assert_eq!(rows[4]["seed"], 7);
    assert_eq!(rows[0]["passed"], true);
}

#[test]
fn empty_grid_sweep_is_header_only() {
    let out = sphcover(&["sweep", "lemma1", "--delta-grid", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn circumcap_of_the_octant() {
    let file = scratch("octant.json");
    std::fs::write(&file, r#"{"points": [[2,0,0],[0,1,0],[0,0,3]]}"#).unwrap();
    let out = sphcover(&["circumcap", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let cap: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = cap["radius"].as_f64().unwrap();
    assert!((r - 2f64.sqrt().atan()).abs() < 1e-12);
    let c = cap["center"].as_array().unwrap();
    for x in c {
        assert!((x.as_f64().unwrap() - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }
}

#[test]
fn circumcap_rejects_bad_input() {
    let spanning = scratch("spanning.json");
    std::fs::write(
        &spanning,
        r#"{"points": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0]]}"#,
    )
    .unwrap();
    assert_eq!(
        sphcover(&["circumcap", spanning.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let malformed = scratch("malformed.json");
    std::fs::write(&malformed, r#"{"pts": []}"#).unwrap();
    assert_eq!(
        sphcover(&["circumcap", malformed.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn measure_catalog_shapes() {
    let out = sphcover(&["measure", "quarter_disk", "--delta", "pi/3", "--n", "1024"]);
    assert_eq!(out.status.code(), Some(0));
    let m: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((m["thickness"].as_f64().unwrap() - std::f64::consts::FRAC_PI_3).abs() < 1e-3);
    assert_eq!(m["constant_width"], false);

    let out = sphcover(&["measure", "reuleaux-odd-gon", "--k", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("constant_width,true"));
}

#[test]
fn measure_a_point_file_uses_its_hull() {
    let file = scratch("square.json");
    std::fs::write(
        &file,
        r#"{"points": [[1,0.2,0.2],[1,-0.2,0.2],[1,-0.2,-0.2],[1,0.2,-0.2],[1,0,0]]}"#,
    )
    .unwrap();
    let out = sphcover(&["measure", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let m: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(m["vertices"], 4);
}
