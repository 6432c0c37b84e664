use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn job(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../jobs")
        .join(name)
}

fn icis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icis-index"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_job(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn text_report_for_the_first_example() {
    let o = icis(&["index", job("example1.job").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dim B       16"), "{out}");
    assert!(out.contains("9 \u{2212} 4 + 7 = 12"), "{out}");
}

#[test]
fn json_report() {
    let o = icis(&[
        "--format",
        "json",
        "index",
        job("cone.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["indexHom"], 2);
    assert_eq!(v["indexGSV"], 2);
    assert_eq!(v["formulaUsed"], "general");
}

#[test]
fn several_jobs_in_json_form_an_array() {
    let o = icis(&[
        "--format",
        "json",
        "index",
        job("line.job").to_str().unwrap(),
        job("cusp.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let indices: Vec<i64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["indexHom"].as_i64().unwrap())
        .collect();
    assert_eq!(indices, [1, -1]);
}

#[test]
fn cross_check_and_specialized_formula() {
    let o = icis(&[
        "index",
        "--cross-check",
        job("example2.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("cross-check codim2"), "{out}");
    assert!(!out.contains("DISAGREES"), "{out}");

    let o = icis(&[
        "index",
        "--formula",
        "surface",
        job("cone.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("formula     surface"));

    let o = icis(&[
        "index",
        "--formula",
        "curve",
        job("cone.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dump_matrices_writes_one_file_per_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("maps");
    let o = icis(&[
        "index",
        "--dump-matrices",
        out.to_str().unwrap(),
        job("example1.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["gamma_0.txt", "gamma_1.txt"]);
    assert!(!std::fs::read_to_string(out.join("gamma_1.txt"))
        .unwrap()
        .trim()
        .is_empty());
}

#[test]
fn auxiliary_subcommands() {
    let o = icis(&["dim", job("example1.job").to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "16");
    let o = icis(&["tau", job("example2.job").to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "8");
    let o = icis(&[
        "--format",
        "json",
        "tau",
        job("example1.job").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o).trim(), "{\"tauPrime\": 7}");
    let o = icis(&["tangency", job("example1.job").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("tangent: the supplied c"));
    let o = icis(&["tangency", job("axis.job").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("tangent: computed c"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let syntax = write_job(
        dir.path(),
        "syntax.job",
        "vars = x, y\nf = x +* y\nX = x; y\n",
    );
    let o = icis(&["index", &syntax]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error at 2:"));

    let shape = write_job(dir.path(), "shape.job", "vars = x, y\nf = x\nX = x\n");
    assert_eq!(icis(&["index", &shape]).status.code(), Some(2));

    let not_tangent = write_job(dir.path(), "nt.job", "vars = x, y\nf = x\nX = y; x\n");
    assert_eq!(icis(&["index", &not_tangent]).status.code(), Some(3));

    let infinite = write_job(dir.path(), "inf.job", "vars = x, y\nf = x\nX = x; 0\n");
    assert_eq!(icis(&["index", &infinite]).status.code(), Some(3));

    assert_eq!(
        icis(&["index", "/nonexistent/job.job"]).status.code(),
        Some(2)
    );
}

#[test]
fn degree_cap_is_reported() {
    let o = icis(&[
        "--max-degree",
        "2",
        "index",
        job("example1.job").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4));
}
