use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mediahom"));
    cmd.env_remove("MEDIAHOM_JOBS");
    cmd
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn run_writes_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.csv");
    let out = bin()
        .args(["run", "--config"])
        .arg(config("swap_chain_homogenization.json"))
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("S_A,S_B,R,C12"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[2], "3");
    assert_eq!(*row.last().unwrap(), "ok");
    assert!(text.contains("# config_sha256: "));
}

#[test]
fn check_accepts_valid_and_rejects_invalid_configs() {
    let out = bin().args(["check", "--config"]).arg(config("two_bath_transport.json")).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("ok:"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"model": "swap", "n": 2, "t": 0.5, "baths": [{"site": 9, "state": "zero"}]}"#).unwrap();
    let out = bin().args(["check", "--config"]).arg(&bad).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("baths[0].site"));

    let out = bin().args(["check", "--config"]).arg(dir.path().join("missing.json")).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn sweep_uses_config_section_and_env_jobs() {
    let out = bin()
        .env("MEDIAHOM_JOBS", "2")
        .args(["sweep", "--values", "0.9,0.999", "--config"])
        .arg(config("entropy_ratio_xx_chain.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("p,S_A"));
    assert!(rows[1].starts_with("0.9,"));
    assert!(rows[2].starts_with("0.999,"));
    assert!(text.contains("# sweep_param: baths.0.state.mix.p"));
}

#[test]
fn sweep_with_explicit_param() {
    let out = bin()
        .args(["sweep", "--param", "t", "--values", "[0.3, 0.6]", "--jobs", "1", "--config"])
        .arg(config("swap_chain_homogenization.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("t,S_A"));
}

#[test]
fn sweep_without_values_fails() {
    let out = bin()
        .args(["sweep", "--config"])
        .arg(config("swap_chain_homogenization.json"))
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn spectrum_dumps_eigenvalues() {
    let out = bin()
        .args(["spectrum", "--config"])
        .arg(config("swap_chain_homogenization.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "index,re,im,modulus,status");
    assert_eq!(rows.len(), 1 + 64);
}

#[test]
fn seed_override_changes_random_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("random.json");
    std::fs::write(
        &cfg,
        r#"{"model": "swap", "n": 2, "t": 0.5, "baths": [{"site": 1, "state": {"random": {}}}]}"#,
    )
    .unwrap();
    let run = |seed: &str| {
        let out = bin().args(["run", "--seed", seed, "--config"]).arg(&cfg).output().unwrap();
        assert!(out.status.success());
        stdout(&out).lines().nth(1).unwrap().to_string()
    };
    assert_eq!(run("1"), run("1"));
    assert_ne!(run("1"), run("2"));
}
