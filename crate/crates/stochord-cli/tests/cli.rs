//! End-to-end tests of the binary: exit codes, output formats, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stochord"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_cdf_row() {
    let out = run(&[
        "eval",
        "--dist",
        "enh:1,1,1",
        "--what",
        "cdf",
        "--points",
        "0.6931471805599453",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("point,value"));
    let row = lines.next().unwrap();
    let mut cols = row.split(',');
    let x: f64 = cols.next().unwrap().parse().unwrap();
    let v: f64 = cols.next().unwrap().parse().unwrap();
    assert!((x - 0.6931471805599453).abs() < 1e-15);
    assert!((v - 0.5).abs() < 1e-15);
}

#[test]
fn eval_shape_record() {
    let out = run(&["eval", "--dist", "enh:0.5,1,0.5", "--what", "shape"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Decreasing"));
}

#[test]
fn eval_invalid_alpha_exits_2_naming_field() {
    let out = run(&[
        "eval",
        "--dist",
        "enh:-1,1,1",
        "--what",
        "cdf",
        "--points",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("alpha"), "{err}");
}

#[test]
fn check_order_exit_codes() {
    let out = run(&[
        "check-order",
        "--order",
        "st",
        "--dist-f",
        "exp:2",
        "--dist-g",
        "exp:1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"holds\":true"));

    let out = run(&[
        "check-order",
        "--order",
        "st",
        "--dist-f",
        "exp:1",
        "--dist-g",
        "exp:2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("\"holds\":false"));
    assert!(text.contains("witness"));

    let out = run(&[
        "check-order",
        "--order",
        "nope",
        "--dist-f",
        "exp:1",
        "--dist-g",
        "exp:2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_order_lr_theorem_instance() {
    // Max laws of common-shape samples with power sums 3 and 1.5.
    let out = run(&[
        "check-order",
        "--order",
        "lr",
        "--dist-f",
        "enh:1,1,1.5",
        "--dist-g",
        "enh:1,1,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_runs_config_and_is_deterministic() {
    let dir = std::env::temp_dir().join("stochord-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("small.json");
    std::fs::write(
        &cfg_path,
        r#"{
            "seed": 9,
            "scenarios": [
                { "theorem_id": "T3_2", "trials": 3 },
                { "theorem_id": "T3_8", "trials": 3 },
                { "theorem_id": "L3_1", "trials": 1 }
            ]
        }"#,
    )
    .unwrap();
    let a = run(&["verify", "--config", cfg_path.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["verify", "--config", cfg_path.to_str().unwrap()]);
    assert_eq!(
        a.stdout, b.stdout,
        "same config and seed must reproduce bytes"
    );
    assert_eq!(stdout(&a).lines().count(), 3);

    let bad = run(&[
        "verify",
        "--config",
        dir.join("absent.json").to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_seed_flag_overrides_config() {
    let dir = std::env::temp_dir().join("stochord-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("seeded.json");
    std::fs::write(
        &cfg_path,
        r#"{"seed": 1, "scenarios": [{"theorem_id": "T3_5", "trials": 4}]}"#,
    )
    .unwrap();
    let cfg = cfg_path.to_str().unwrap();
    let a = run(&["verify", "--config", cfg, "--seed", "7"]);
    let b = run(&["verify", "--config", cfg, "--seed", "7"]);
    let c = run(&["verify", "--config", cfg, "--seed", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(
        a.stdout, c.stdout,
        "different seeds must draw different trials"
    );
}

#[test]
fn verify_rejects_unknown_keys() {
    let dir = std::env::temp_dir().join("stochord-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("unknown-key.json");
    std::fs::write(&cfg_path, r#"{"scenarios": [], "extra": 1}"#).unwrap();
    let out = run(&["verify", "--config", cfg_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_reports_converse_violations_and_exits_zero() {
    let out = run(&[
        "scan",
        "--theorem",
        "T3_5",
        "--samples",
        "30",
        "--n",
        "2",
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("violations"));
    assert!(text.matches("\"sample\":").count() > 0, "{text}");
}

#[test]
fn plotdata_hazard_curves_match_classifier() {
    let out = run(&[
        "plotdata",
        "--kind",
        "hazard-curves",
        "--dist",
        "enh:1,1,1",
        "--dist",
        "enh:2,1,1",
        "--dist",
        "enh:0.5,1,0.5",
        "--dist",
        "enh:0.5,1,4",
        "--grid-points",
        "128",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("series,x_or_u,value"));
    // 4 series x 128 points.
    assert_eq!(text.lines().count(), 1 + 4 * 128);
    assert!(text.ends_with('\n'));

    // Monotone patterns match the shape classifier: the increasing exemplar
    // rises along its rows, the decreasing one falls.
    let values = |prefix: &str| -> Vec<f64> {
        text.lines()
            .skip(1)
            .filter(|l| l.starts_with(prefix))
            .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
            .collect()
    };
    let rising = values("enh:2,1,1,");
    assert_eq!(rising.len(), 128);
    assert!(rising.windows(2).all(|w| w[1] >= w[0]));
    let falling = values("enh:0.5,1,0.5,");
    assert!(falling.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn plotdata_lorenz_identical_specs() {
    let out = run(&[
        "plotdata",
        "--kind",
        "lorenz-curves",
        "--dist",
        "exp:1",
        "--dist",
        "exp:1",
        "--grid-points",
        "64",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    let (a, b) = rows.split_at(rows.len() / 2);
    for (ra, rb) in a.iter().zip(b.iter()) {
        let va = ra.splitn(2, ',').nth(1).unwrap();
        let vb = rb.splitn(2, ',').nth(1).unwrap();
        assert_eq!(va, vb);
    }
}

#[test]
fn plotdata_ordering_curves_dominate_for_t3_2_instance() {
    // Maxima of the shape-majorized sample pair: survival of the α-sample
    // max dominates the α*-sample max at every row.
    let out = run(&[
        "plotdata",
        "--kind",
        "ordering-curves",
        "--dist",
        "max:enh:1,1,1|enh:1.5,1,1",
        "--dist",
        "max:enh:0.5,1,1|enh:1.5,1,1",
        "--grid-points",
        "64",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    let (star_rows, big_rows) = rows.split_at(rows.len() / 2);
    for (s, b) in star_rows.iter().zip(big_rows.iter()) {
        let sv: f64 = s.rsplit(',').next().unwrap().parse().unwrap();
        let bv: f64 = b.rsplit(',').next().unwrap().parse().unwrap();
        assert!(bv >= sv - 1e-12, "{s} vs {b}");
    }
}
