//! Golden reports: every catalog example under every applicable command.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the stored files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use engelkit::ScalarRing;
use engelkit_cli::{catalog_presentation, mask_timings, run};

pub struct Example {
    pub label: &'static str,
    pub name: &'static str,
    pub size: Option<usize>,
    pub natural: bool,
}

pub const EXAMPLES: &[Example] = &[
    Example { label: "abelian2", name: "abelian", size: Some(2), natural: false },
    Example { label: "heisenberg", name: "heisenberg", size: None, natural: false },
    Example { label: "sut3", name: "strictly_upper_triangular", size: Some(3), natural: false },
    Example { label: "sut3_natural", name: "strictly_upper_triangular", size: Some(3), natural: true },
    Example { label: "sut4", name: "strictly_upper_triangular", size: Some(4), natural: false },
    Example { label: "ut2", name: "upper_triangular", size: Some(2), natural: false },
    Example { label: "sl2", name: "sl2", size: None, natural: false },
    Example { label: "sl2_natural", name: "sl2", size: None, natural: true },
    Example { label: "sl2_nilpotent_basis", name: "sl2_nilpotent_basis", size: None, natural: false },
    Example { label: "gl2", name: "gl", size: Some(2), natural: false },
];

pub fn rings() -> Vec<(&'static str, ScalarRing)> {
    vec![
        ("Q", ScalarRing::RATIONALS),
        ("Z", ScalarRing::INTEGERS),
        ("GF2", ScalarRing::prime_field(2).unwrap()),
        ("GF3", ScalarRing::prime_field(3).unwrap()),
    ]
}

pub struct Case {
    pub id: String,
    pub args: Vec<String>,
}

fn fixture_dir() -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("engelkit-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Writes one fixture per example and ring, and lists the command invocations on them.
pub fn cases() -> Vec<Case> {
    let dir = fixture_dir();
    let mut out = Vec::new();
    for ex in EXAMPLES {
        for (ring_label, ring) in rings() {
            let p = catalog_presentation(ex.name, ring, ex.size, ex.natural).unwrap();
            let path = dir.join(format!("{}__{}.json", ex.label, ring_label));
            std::fs::write(&path, p.emit()).unwrap();
            let file = path.to_string_lossy().into_owned();
            let mut commands = vec!["validate", "lcs", "nilpotent", "engel"];
            if ring.is_field() {
                commands.extend(["flag", "ascent"]);
            }
            for command in commands {
                out.push(Case {
                    id: format!("{}__{}__{}", ex.label, ring_label, command),
                    args: vec!["engelkit".into(), command.into(), file.clone()],
                });
            }
            for sub in p.subalgebras.keys() {
                for command in ["weights", "roots", "cartan"] {
                    out.push(Case {
                        id: format!("{}__{}__{}__{}", ex.label, ring_label, command, sub),
                        args: vec![
                            "engelkit".into(),
                            command.into(),
                            file.clone(),
                            "--subalgebra".into(),
                            sub.clone(),
                        ],
                    });
                }
            }
        }
    }
    out
}

/// Exit status, masked report and diagnostics of one case.
pub fn render(case: &Case) -> String {
    let outcome = run(&case.args);
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", outcome.code, mask_timings(&outcome.stdout), outcome.stderr)
}

/// Renders every case; returns (id, text) pairs in a fixed order.
pub fn render_all() -> Vec<(String, String)> {
    cases().iter().map(|c| (c.id.clone(), render(c))).collect()
}

/// Compares against the stored files (or rewrites them); returns the ids that differ.
pub fn check_against_golden(rendered: &[(String, String)]) -> Vec<String> {
    let dir = golden_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for (id, text) in rendered {
        let path = dir.join(format!("{id}.txt"));
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, text).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(stored) if stored.replace("\r\n", "\n") == *text => {}
            _ => mismatched.push(id.clone()),
        }
    }
    mismatched
}
