use std::fs;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_coupled-layers");

const CONFIG: &str = r#"
N = 20
R_V_ohm = 2.0
R0_ohm = 200.0
V_volt = 1.0
lambda_min = 0.0005
p_err = 0.01
topology = "watts_strogatz"
ws_K = 4
ws_beta = 0.1
steps = 50
seed = 1
"#;

#[test]
fn run_subcommand_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, CONFIG).unwrap();
    let out = dir.path().join("out");
    let status = Command::new(BIN)
        .args(["run", cfg.to_str().unwrap(), "--quiet", "--out-dir", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    assert!(status.stdout.is_empty());
    for f in ["raster.txt", "summary.csv", "metrics.csv", "resolved_config.toml"] {
        assert!(out.join(f).is_file(), "{f}");
    }
}

#[test]
fn sweep_and_graph_export_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let body: String = CONFIG.lines().filter(|l| !l.starts_with("seed")).map(|l| format!("{l}\n")).collect();
    let sweep = dir.path().join("sweep.toml");
    fs::write(&sweep, format!("axis = \"lambda_min\"\nvalues = [0.0005, 0.005]\nseeds = [1, 2]\n\n[base]{body}")).unwrap();
    let out = dir.path().to_str().unwrap();
    let status = Command::new(BIN)
        .args(["sweep", sweep.to_str().unwrap(), "--parallelism", "2", "--quiet", "--out-dir", out])
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(fs::read_to_string(dir.path().join("sweep.csv")).unwrap().lines().count(), 1 + 4 + 2);

    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, CONFIG).unwrap();
    let status = Command::new(BIN)
        .args(["graph-export", cfg.to_str().unwrap(), "--quiet", "--out-dir", out])
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(fs::read_to_string(dir.path().join("graph.txt")).unwrap().lines().count(), 40);
}

#[test]
fn invalid_config_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, CONFIG.replace("ws_K = 4", "ws_K = 3")).unwrap();
    let output = Command::new(BIN).args(["run", cfg.to_str().unwrap(), "--out-dir"]).arg(dir.path()).output().unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("ws_K"));

    let output = Command::new(BIN).args(["run", "does-not-exist.toml"]).output().unwrap();
    assert!(!output.status.success());
}
