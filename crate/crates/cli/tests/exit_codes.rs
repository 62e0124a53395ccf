use std::path::{Path, PathBuf};
use std::process::Command;

use engelkit::ScalarRing;
use engelkit_cli::catalog_presentation;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_engelkit"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("exit-codes");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn sl2_file() -> PathBuf {
    let p = catalog_presentation("sl2", ScalarRing::RATIONALS, None, false).unwrap();
    write("sl2_q.json", &p.emit())
}

fn status(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn computed_verdicts_exit_zero() {
    let sl2 = sl2_file();
    let f = sl2.to_str().unwrap();
    for command in ["validate", "lcs", "nilpotent", "engel", "flag", "ascent"] {
        let (code, stdout, _) = status(&[command, f]);
        assert_eq!(code, 0, "{command}");
        assert!(stdout.contains("\"input_digest\": \"sha256:"));
    }
    let (code, stdout, _) = status(&["cartan", f, "--subalgebra", "H"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"equivalent\": true"));
    let (code, stdout, _) = status(&["flag", f]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"flag\": \"refuted\""));
    assert!(stdout.contains("\"nilpotent\": false"));
    let (code, _, _) = status(&["weights", f, "--subalgebra", "H", "--weight", "2", "--weight", "-2"]);
    assert_eq!(code, 0);
}

#[test]
fn nilpotent_heisenberg_reports_class_two() {
    let p = catalog_presentation("heisenberg", ScalarRing::RATIONALS, None, false).unwrap();
    let path = write("heisenberg.json", &p.emit());
    let (code, stdout, _) = status(&["nilpotent", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"class\": 2"));
    assert!(stdout.contains("\"kind\": \"terminating_chain\""));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let sl2 = sl2_file();
    let f = sl2.to_str().unwrap();
    assert_eq!(status(&[]).0, 1);
    assert_eq!(status(&["frobnicate", f]).0, 1);
    assert_eq!(status(&["lcs", "/nonexistent/file.json"]).0, 1);
    assert_eq!(status(&["lcs", f, "--ring", "GF(4)"]).0, 1);
    assert_eq!(status(&["flag", f, "--ring", "Z"]).0, 1);
    assert_eq!(status(&["cartan", f]).0, 1);
    assert_eq!(status(&["cartan", f, "--subalgebra", "nope"]).0, 1);
    // the Borel sub-algebra is not nilpotent
    assert_eq!(status(&["cartan", f, "--subalgebra", "borel"]).0, 1);

    let p4 = write("p4.json", r#"{"ring": "GF(4)", "algebra": {"rank": 1}}"#);
    let (code, _, stderr) = status(&["validate", p4.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("4 is not prime"), "{stderr}");

    let broken = write("broken.json", "{\"ring\": \"Q\",\n \"algebra\": [}");
    let (code, _, stderr) = status(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line 2"), "{stderr}");

    let (code, stdout, _) = status(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cartan"));
}

#[test]
fn validation_failures_exit_two() {
    // [e, h] = 2e instead of −2e
    let text = r#"{"ring": "Q", "algebra": {"rank": 3, "basis": ["e", "h", "f"],
        "brackets": [[0, 1, 0, "2"], [0, 2, 1, "1"], [1, 2, 2, "-2"]]}}"#;
    let bad = write("sl2_bad.json", text);
    let f = bad.to_str().unwrap();
    let (code, stdout, _) = status(&["validate", f]);
    assert_eq!(code, 2);
    assert!(stdout.contains("\"passed\": false"));
    assert!(stdout.contains("triple (0,1,2)"), "{stdout}");
    let (code, _, stderr) = status(&["lcs", f]);
    assert_eq!(code, 2);
    assert!(stderr.contains("(0,1,2)"), "{stderr}");

    let module = r#"{"ring": "Q", "algebra": {"rank": 2, "brackets": [[0, 1, 1, "1"]]},
        "module": {"rank": 1, "action": [[["0"]], [["1"]]]}}"#;
    let bad = write("module_bad.json", module);
    assert_eq!(status(&["nilpotent", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn catalog_exports_round_trip_through_files() {
    let out = scratch("exported.json");
    let (code, stdout, _) = status(&["catalog", "strictly_upper_triangular", "--size", "4", "--natural", "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    let (code, stdout, _) = status(&["nilpotent", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"class\": 4"));
    let (code, stdout, _) = status(&["catalog"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sl2_nilpotent_basis"));
    assert_eq!(status(&["catalog", "so3"]).0, 1);
    assert_eq!(status(&["catalog", "gl", "--size", "13"]).0, 1);
}

#[test]
fn output_flag_writes_the_report() {
    let sl2 = sl2_file();
    let out = scratch("report.json");
    let (code, stdout, _) = status(&["lcs", sl2.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(out).unwrap().contains("\"command\": \"lcs\""));
}
