//! End-to-end checks of the binary: exit codes, pinned outputs, and
//! insensitivity of the report bytes to the parallelism setting.

use std::io::Write;
use std::process::{Command, Output};

fn run_with(input: Option<&str>, args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut tmp = None;
    let mut full_args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    if let Some(text) = input {
        let mut f = tempfile();
        f.write_all(text.as_bytes()).unwrap();
        let path = f.path().to_string_lossy().into_owned();
        full_args.push("--in".into());
        full_args.push(path);
        tmp = Some(f);
    }
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monotor"));
    cmd.args(&full_args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    drop(tmp);
    out
}

fn run(input: Option<&str>, args: &[&str]) -> Output {
    run_with(input, args, &[])
}

fn tempfile() -> tempfile_lite::NamedFile {
    tempfile_lite::NamedFile::new()
}

/// Minimal named temporary file so the binary can read --in paths.
mod tempfile_lite {
    use std::io::Write;
    use std::path::{Path, PathBuf};
    use std::sync::atomic::{AtomicU64, Ordering};

    static COUNTER: AtomicU64 = AtomicU64::new(0);

    pub struct NamedFile {
        path: PathBuf,
        file: std::fs::File,
    }

    impl NamedFile {
        pub fn new() -> Self {
            let n = COUNTER.fetch_add(1, Ordering::Relaxed);
            let path = std::env::temp_dir()
                .join(format!("monotor-cli-test-{}-{n}.json", std::process::id()));
            let file = std::fs::File::create(&path).unwrap();
            NamedFile { path, file }
        }

        pub fn path(&self) -> &Path {
            &self.path
        }
    }

    impl Write for NamedFile {
        fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
            self.file.write(buf)
        }

        fn flush(&mut self) -> std::io::Result<()> {
            self.file.flush()
        }
    }

    impl Drop for NamedFile {
        fn drop(&mut self) {
            let _ = std::fs::remove_file(&self.path);
        }
    }
}

#[test]
fn gamma_eq_pinned_output() {
    let out = run(
        Some(
            r#"{"ring": {"variables": ["x0"]}, "ideal_a": {"gens": [[4]]}, "ideal_b": {"gens": [[2]]}}"#,
        ),
        &["gamma-eq"],
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["equal"], serde_json::json!(true));
    assert_eq!(v["floor"], serde_json::json!([[1]]));
}

#[test]
fn nil_index_pinned_output() {
    let out = run(
        Some(r#"{"base_ring": {"variant": "integers_mod", "modulus": 12}}"#),
        &["nil-index"],
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["nil_index"], serde_json::json!(2));
}

#[test]
fn unknown_field_is_schema_error() {
    let out = run(Some(r#"{"nonsense": 1}"#), &["gamma-eq"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn negative_exponent_is_schema_error() {
    let out = run(
        Some(r#"{"ring": {"variables": ["x"]}, "ideal": {"gens": [[-1]]}}"#),
        &["floor"],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn infinite_index_is_domain_error() {
    // subgroup generated by (1,0) inside Z^2 has infinite index
    let input = r#"{
        "ring": {"variables": ["x", "y"],
                 "grading": {"ambient_rank": 2, "relations": [],
                             "degrees": [[1, 0], [0, 1]]}},
        "subgroup": {"generators": [[1, 0]]},
        "ideal": {"gens": [[1, 0]]}
    }"#;
    let out = run(Some(input), &["restrict"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_is_schema_error() {
    let out = run(None, &["floor"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_window_is_schema_error() {
    let input = r#"{"fan": {"rank": 1, "rays": [[1], [-1]], "cones": [[0], [1]]}}"#;
    let out = run(Some(input), &["flat-report", "--window", "oops"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fan_cox_reports_ray_degrees() {
    let input = r#"{"fan": {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [0, 2]]}}"#;
    let out = run(Some(input), &["fan-cox"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["free_rank"], serde_json::json!(1));
    assert_eq!(v["invariant_factors"], serde_json::json!([0]));
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 1]));
}

#[test]
fn witness_pinned_output() {
    let out = run(
        Some(r#"{"family": {"c": 1, "d": 0}, "n": 3}"#),
        &["witness"],
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["truncation"], serde_json::json!(4));
    assert_eq!(v["witness"], serde_json::json!([0, 0, 0, 3]));
}

#[test]
fn bounded_family_is_domain_error() {
    let out = run(
        Some(r#"{"family": {"c": 0, "d": 1}, "n": 1}"#),
        &["witness"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parallelism_does_not_change_bytes() {
    let input = r#"{"fan": {"rank": 1, "rays": [[1], [-1]], "cones": [[0], [1]]}}"#;
    let args = ["flat-report", "--window", "-4,4", "--box", "6"];
    let one = run_with(Some(input), &args, &[("MONOTOR_THREADS", "1")]);
    let four = run_with(Some(input), &args, &[("MONOTOR_THREADS", "4")]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn floor_and_restrict_happy_paths() {
    let out = run(
        Some(
            r#"{"ring": {"variables": ["x", "y", "z"]}, "ideal": {"gens": [[2, 1, 0], [0, 0, 3]]}}"#,
        ),
        &["floor"],
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["floor"], serde_json::json!([[0, 0, 1], [1, 1, 0]]));

    let input = r#"{
        "ring": {"variables": ["x"],
                 "grading": {"ambient_rank": 1, "relations": [], "degrees": [[1]]}},
        "subgroup": {"generators": [[2]]},
        "ideal": {"gens": [[3]]}
    }"#;
    let out = run(Some(input), &["restrict"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["restricted"], serde_json::json!([[4]]));
}

#[test]
fn unverified_hypotheses_are_echoed() {
    let input = r#"{"fan": {"rank": 1, "rays": [[1], [-1]], "cones": [[0], [1]]}}"#;
    let out = run(Some(input), &["flat-report", "--window", "-2,2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["hypotheses"]["iti"],
        serde_json::json!("assumed-unverified")
    );
    assert_eq!(
        v["hypotheses"]["localized_flatness"],
        serde_json::json!("asserted-by-user")
    );
    assert_eq!(v["hypotheses"]["b_in_pic"], serde_json::json!(true));

    let out = run(Some(input), &["floor-identity"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["hypotheses"]["iti"],
        serde_json::json!("assumed-unverified")
    );
    assert_eq!(v["equal"], serde_json::json!(true));
}

#[test]
fn m_mu_pinned_output() {
    let input = r#"{
        "ring": {"variables": ["x"],
                 "grading": {"ambient_rank": 1, "relations": [], "degrees": [[1]]}},
        "subgroup": {"generators": [[2]]},
        "ideal": {"gens": [[4]]},
        "mu": [4]
    }"#;
    let out = run(Some(input), &["m-mu"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["m"], serde_json::json!(4));
}

#[test]
fn radical_power_pinned_output() {
    let input = r#"{
        "base_ring": {"variant": "integers_mod", "modulus": 12},
        "ring": {"variables": ["x"]},
        "ideal": {"gens": [[2]]}
    }"#;
    let out = run(Some(input), &["radical-power"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], serde_json::json!(3));
}

#[test]
fn fan_pic_weighted_plane() {
    let input = r#"{"fan": {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -2]], "cones": [[0, 1], [1, 2], [0, 2]]}}"#;
    let out = run(Some(input), &["fan-pic"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["index"], serde_json::json!(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("monotor-out-{}.json", std::process::id()));
    let out = run(
        Some(r#"{"base_ring": {"variant": "field", "characteristic": 0}}"#),
        &["nil-index", "--out", path.to_str().unwrap()],
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["nil_index"], serde_json::json!(1));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn cech_single_degree() {
    let input = r#"{
        "ring": {"variables": ["x"],
                 "grading": {"ambient_rank": 1, "relations": [], "degrees": [[1]]}},
        "module": {"quotient": []},
        "sequence": [[1]],
        "degree": [-1]
    }"#;
    let out = run(Some(input), &["cech", "--box", "6"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["groups"], serde_json::json!([{"rank": 0}, {"rank": 1}]));
    assert_eq!(v["stable"], serde_json::json!(true));
}
