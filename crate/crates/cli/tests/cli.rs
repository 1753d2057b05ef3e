//! End-to-end runs of the `dmm` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(format!("{name}.sys"))
}

fn dmm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmm")).args(args).output().expect("binary runs")
}

fn dmm_on(cmd: &str, name: &str, extra: &[&str]) -> Output {
    let path = corpus(name);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    dmm(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_first_row() {
    let o = dmm(&["table1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = text.lines().find(|l| l.trim_start().starts_with("2    5")).unwrap();
    assert!(row.contains("87 / 87 / +0"), "{row}");
    let v: serde_json::Value = serde_json::from_slice(&dmm(&["table1", "--format", "json"]).stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 15);
    assert_eq!(v[0]["column"], "DMMp");
    assert_eq!(v[0]["computed"], "87");
}

#[test]
fn univariate_bounds_use_the_single_polynomial_form() {
    for mode in ["zero-dim", "dense"] {
        let o = dmm_on("bounds", "univariate", &["--mode", mode, "--ell", "3"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.starts_with("name,direction,quantity,log2_value,exponent,citation"));
        assert!(text.lines().skip(1).all(|l| l.starts_with("dmm1-")), "{text}");
    }
    // ell beyond the number of pairs
    assert_eq!(dmm_on("bounds", "univariate", &["--ell", "4"]).status.code(), Some(3));
}

#[test]
fn bounds_modes_and_formats() {
    for (mode, prefix) in [("zero-dim", "dmm-"), ("excess", "excess-"), ("dense", "dense-"), ("mixedvol", "mv-")] {
        let o = dmm_on("bounds", "circle_line", &["--mode", mode, "--format", "json"]);
        assert!(o.status.success(), "{mode}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let rows = v.as_array().unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r["name"].as_str().unwrap().starts_with(prefix)), "{mode}");
    }
}

#[test]
fn isolate_reports_boxes_and_stats() {
    let o = dmm_on("isolate", "circle_line", &[]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let boxes = v["boxes"].as_array().unwrap();
    assert_eq!(boxes.len(), 2);
    assert!(boxes.iter().all(|b| b["count"] == 1 && b["x"][0].is_string()));
    let calls = v["stats"]["oracle_calls"].as_u64().unwrap();
    let bound: u64 = v["stats"]["bound_value"].as_str().unwrap().parse().unwrap();
    assert!(calls <= bound);
    let o = dmm_on("isolate", "circle_line", &["--box", "0,2,0,2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["boxes"].as_array().unwrap().len(), 1);
}

#[test]
fn steps_measured_within_bound() {
    let o = dmm_on("steps", "circle_line", &[]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("within the bound"), "{text}");
    let o = dmm_on("steps", "univariate", &[]);
    assert!(stdout(&o).contains("n = 1"));
}

#[test]
fn validate_and_oracle() {
    let o = dmm_on("validate", "two_circles", &[]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Pass"));
    let o = dmm_on("validate", "circle_line", &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["torus_roots"], 2);
    let o = dmm_on("oracle", "circle_line", &[]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["x"][0], "-1");
}

#[test]
fn eigen_command() {
    let o = dmm(&["eigen", "--n", "2", "--tau", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("2^-227"));
    assert!(text.contains("M = (4, 4, 2)"));
    assert_eq!(dmm(&["eigen", "--n", "0", "--tau", "1"]).status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("dmm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.sys");
    std::fs::write(&bad, "vars x y\n1:1,0;\n").unwrap();
    assert_eq!(dmm(&["bounds", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(dmm_on("isolate", "circle_line", &["--box", "1,0,0,1"]).status.code(), Some(3));
    assert_eq!(dmm_on("isolate", "circle_line", &["--box", "a,b"]).status.code(), Some(2));
    assert_eq!(dmm_on("validate", "posgrad_d2", &[]).status.code(), Some(3));
    assert_eq!(dmm_on("isolate", "eigen_2x2", &[]).status.code(), Some(3));
    assert_eq!(dmm(&["bounds", dir.join("missing.sys").to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for (cmd, name) in [("isolate", "cubic_pair"), ("validate", "four_points"), ("oracle", "two_circles")] {
        let a = dmm_on(cmd, name, &[]);
        let b = dmm_on(cmd, name, &[]);
        assert_eq!(a.stdout, b.stdout, "{cmd} {name}");
    }
    assert_eq!(dmm(&["table1"]).stdout, dmm(&["table1"]).stdout);
}
