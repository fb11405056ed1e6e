use std::path::PathBuf;
use std::process::Command;

/// Demo invocations with a golden JSON transcript each.
pub const GOLDEN: [(&str, &[&str]); 16] = [
    ("two-origins", &["two-origins"]),
    ("branching-line", &["branching-line"]),
    ("feather-homogeneity", &["feather-homogeneity"]),
    ("feather-contraction", &["feather-contraction"]),
    ("feather-twins", &["feather-twins"]),
    ("doubled-line", &["doubled-line"]),
    ("involutorial", &["involutorial"]),
    ("fuks-rokhlin", &["fuks-rokhlin"]),
    ("lemma-zorn", &["lemma-zorn"]),
    ("theorem2-line", &["theorem2", "--space", "line"]),
    ("theorem2-doubled", &["theorem2", "--space", "doubled"]),
    ("theorem2-feather", &["theorem2", "--space", "feather"]),
    ("lindelof-failure", &["lindelof-failure"]),
    ("cofinite-not-baire", &["cofinite-not-baire"]),
    ("microcompact", &["microcompact"]),
    ("implications", &["implications"]),
];

pub fn twinline(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twinline")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Runs one demo and compares it with its transcript, rewriting the
/// transcript instead when `UPDATE_GOLDEN` is set.
pub fn check_golden(name: &str, demo: &[&str]) -> Result<(), String> {
    let mut args = vec!["--format", "json", "demo"];
    args.extend_from_slice(demo);
    let (code, out) = twinline(&args);
    let expected_code = if name == "theorem2-doubled" || name == "theorem2-feather" { 3 } else { 0 };
    if code != expected_code {
        return Err(format!("{name}: exit {code}, expected {expected_code}"));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != out {
        return Err(format!("{name}: output differs from {}", path.display()));
    }
    Ok(())
}
