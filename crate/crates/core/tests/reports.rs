use std::f64::consts::FRAC_PI_2;

use sphcover::verify::{
    read_csv, run_named_suite, run_suite, sweep_csv, write_csv, write_json, Suite, SuiteConfig,
    CSV_HEADER,
};
use sphcover::Error;

fn lemma2_config(deltas: usize) -> SuiteConfig {
    let mut config = Suite::Lemma2.default_config();
    config.n = 256;
    config.delta_grid = (1..=deltas)
        .map(|i| FRAC_PI_2 * i as f64 / deltas as f64)
        .collect();
    config
}

fn csv_bytes(suite: Suite, config: &SuiteConfig) -> Vec<u8> {
    let rows = run_suite(suite, config).unwrap();
    let mut out = Vec::new();
    write_csv(&rows, &mut out).unwrap();
    out
}

#[test]
fn csv_round_trips() {
    let bytes = csv_bytes(Suite::Lemma2, &lemma2_config(50));
    let rows = read_csv(bytes.as_slice()).unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r.passed));
    let mut again = Vec::new();
    write_csv(&rows, &mut again).unwrap();
    assert_eq!(again, bytes);
}

#[test]
fn csv_has_the_documented_header_and_digits() {
    let bytes = csv_bytes(Suite::Lemma1, &Suite::Lemma1.default_config());
    let text = String::from_utf8(bytes).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    let last_row = lines.last().unwrap();
    // δ = π/2 printed with 12 significant digits
    assert!(
        last_row.starts_with("lemma1,1.57079632679,1024,,,"),
        "{last_row}"
    );
}

#[test]
fn empty_grid_writes_only_the_header() {
    let mut config = Suite::Lemma2.default_config();
    config.delta_grid.clear();
    let dir = std::env::temp_dir().join(format!("sphcover-empty-{}", std::process::id()));
    let written = sweep_csv(Suite::Lemma2, &config, &dir).unwrap();
    assert_eq!(written, 0);
    let text = std::fs::read_to_string(&dir).unwrap();
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(text, format!("{}\n", CSV_HEADER.join(",")));
}

#[test]
fn unwritable_path_is_an_io_error() {
    let path = std::path::Path::new("/nonexistent-dir/sub/report.csv");
    let err = sweep_csv(Suite::Lemma3, &Suite::Lemma3.default_config(), path).unwrap_err();
    assert!(matches!(err, Error::Io(_)), "{err:?}");
}

#[test]
fn suites_are_deterministic() {
    for suite in [
        Suite::Oracle,
        Suite::PropPolar,
        Suite::Lemma5,
        Suite::Dekster,
    ] {
        let mut config = suite.default_config();
        config.count = config.count.min(20);
        config.seed = 7;
        assert_eq!(
            csv_bytes(suite, &config),
            csv_bytes(suite, &config),
            "{suite}"
        );
    }
}

#[test]
fn json_mirrors_csv_fields() {
    let rows = run_suite(Suite::Lemma3, &Suite::Lemma3.default_config()).unwrap();
    let mut out = Vec::new();
    write_json(&rows, &mut out).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let first = value.as_array().unwrap()[0].as_object().unwrap();
    for key in CSV_HEADER {
        assert!(first.contains_key(key), "missing {key}");
    }
    let parsed: Vec<sphcover::verify::VerificationReport> = serde_json::from_slice(&out).unwrap();
    assert_eq!(parsed, rows);
}

#[test]
fn config_errors() {
    assert_eq!(
        run_named_suite("lemma6").unwrap_err(),
        Error::UnknownSuite("lemma6".into())
    );
    let mut config = Suite::Lemma1.default_config();
    config.n = 10;
    assert!(matches!(
        run_suite(Suite::Lemma1, &config),
        Err(Error::InvalidConfig(_))
    ));
    let mut config = Suite::Lemma1.default_config();
    config.tol = -1.0;
    assert!(matches!(
        run_suite(Suite::Lemma1, &config),
        Err(Error::InvalidConfig(_))
    ));
    let mut config = Suite::Lemma1.default_config();
    config.delta_grid = vec![2.0];
    assert!(matches!(
        run_suite(Suite::Lemma1, &config),
        Err(Error::Domain { .. })
    ));
}

#[test]
fn spec_suite_examples() {
    assert_eq!(run_named_suite("lemma1").unwrap().len(), 4);
    let rows = run_named_suite("oracle").unwrap();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r.abs_error < 1e-10));
    let rows = run_named_suite("theorem1").unwrap();
    assert!(rows
        .iter()
        .filter(|r| r.claim_id == "theorem1.equality")
        .all(|r| r.passed));
}
