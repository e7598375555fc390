//! End-to-end tests of the `tensor-iso` binary: output formats, set-file
//! round trips, JSON reports, environment overrides, and the exit-code
//! contract (0 success, 1 failed verification, 2 bad input, 3 resource or
//! domain limits).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const EXE: &str = env!("CARGO_BIN_EXE_tensor-iso");

fn run(args: &[&str]) -> Output {
    Command::new(EXE)
        .args(args)
        .env_remove("ISO_CAP")
        .output()
        .expect("binary must launch")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(EXE)
        .args(args)
        .env_remove("ISO_CAP")
        .env(key, value)
        .output()
        .expect("binary must launch")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process must exit normally")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("temp paths are UTF-8")
}

/// `construct` into a fresh file inside `dir`, asserting success.
fn construct(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out_path = dir.path().join(name);
    let mut full: Vec<&str> = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path_str(&out_path)]);
    let out = run(&full);
    assert_eq!(code(&out), 0, "construct failed: {}", stderr(&out));
    out_path
}

#[test]
fn phi_prints_exact_value() {
    let out = run(&["phi", "--t", "3", "--nu", "5/9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "8/9 (exact)");
}

#[test]
fn phi_prints_enclosure_for_nonterminating_orbit() {
    let out = run(&["phi", "--t", "3", "--nu", "1/2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text.trim();
    assert!(line.starts_with('['), "expected an interval, got: {line}");
    assert!(line.ends_with("steps)"), "expected a step count, got: {line}");
}

#[test]
fn eta_prints_the_exponent() {
    let out = run(&["eta", "--t", "3"]);
    assert_eq!(code(&out), 0);
    let v: f64 = stdout(&out).trim().parse().expect("a decimal exponent");
    assert!((v - 2.709511291351455).abs() < 1e-12, "eta(3) = {v}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&[])), 2, "no subcommand");
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["phi", "--t", "3"])), 2, "missing --nu");
    let bad = run(&["phi", "--t", "3", "--nu", "five/9"]);
    assert_eq!(code(&bad), 2, "unparseable rational");
    assert!(stderr(&bad).contains("error"), "diagnostic on stderr");
    let zero_den = run(&["phi", "--t", "3", "--nu", "1/0"]);
    assert_eq!(code(&zero_den), 2, "zero denominator");
    let bad_suite = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code(&bad_suite), 2);
    assert!(
        stderr(&bad_suite).contains("core"),
        "unknown suite message should list the valid names"
    );
}

#[test]
fn empty_search_domain_exits_3() {
    // In [3]^1 every nonempty set has density >= 1/3 > 1/4.
    let out = run(&["oracle-eta", "--t", "3", "--n", "1", "--eps", "1/4"]);
    assert_eq!(code(&out), 3);
    assert!(!stderr(&out).is_empty(), "diagnostic on stderr");
}

#[test]
fn capacity_override_is_honored() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("set.txt");
    let args = [
        "construct",
        "--family",
        "dictator",
        "--t",
        "3",
        "--n",
        "3",
        "--k",
        "1",
        "--out",
        path_str(&out_path),
    ];
    let tight = run_env(&args, "ISO_CAP", "10");
    assert_eq!(code(&tight), 3, "27 vertices must exceed a cap of 10");
    assert!(stderr(&tight).contains("capacity"), "got: {}", stderr(&tight));
    let garbage = run_env(&args, "ISO_CAP", "not-a-number");
    assert_eq!(code(&garbage), 2, "malformed cap is an input error");
    let roomy = run_env(&args, "ISO_CAP", "1000");
    assert_eq!(code(&roomy), 0, "got: {}", stderr(&roomy));
}

#[test]
fn construct_and_boundary_round_trip() {
    let dir = TempDir::new().unwrap();
    let set_path = construct(&dir, "remark.txt", &["--family", "remark_counterexample"]);
    let text = std::fs::read_to_string(&set_path).unwrap();
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    assert_eq!(
        lines.next().map(str::trim),
        Some("3 2"),
        "header must carry t and n"
    );
    assert_eq!(lines.count(), 4, "four vertices follow the header");

    let boundary_path = dir.path().join("boundary.txt");
    let out = run(&[
        "boundary",
        "--in",
        path_str(&set_path),
        "--out",
        path_str(&boundary_path),
    ]);
    assert_eq!(code(&out), 0, "got: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "8 vertices");
}

#[test]
fn family_names_accept_underscores_and_kebab_aliases() {
    let dir = TempDir::new().unwrap();
    construct(
        &dir,
        "pt1.txt",
        &["--family", "phase_transition", "--t", "3", "--n", "3"],
    );
    construct(
        &dir,
        "pt2.txt",
        &["--family", "phase-transition", "--t", "3", "--n", "3"],
    );
    let out = construct(
        &dir,
        "slice.txt",
        &[
            "--family",
            "max_independent",
            "--t",
            "3",
            "--n",
            "2",
            "--i",
            "1",
            "--j",
            "2",
        ],
    );
    let text = std::fs::read_to_string(out).unwrap();
    let data_lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .count();
    assert_eq!(data_lines, 1 + 3, "header plus one line per slice vertex");
    let missing = run(&["construct", "--family", "dictator", "--t", "3", "--out", "/dev/null"]);
    assert_eq!(code(&missing), 2, "family-specific flags are required");
}

#[test]
fn appendix_family_prints_its_gaps() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("deep.txt");
    let out = run(&[
        "construct",
        "--family",
        "appendix_c",
        "--t",
        "3",
        "--n",
        "3",
        "--out",
        path_str(&out_path),
    ]);
    assert_eq!(code(&out), 0, "got: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("eps=2/9"), "got: {text}");
    assert!(text.contains("delta=2/27"), "got: {text}");
    assert!(text.contains("wrote 7 vertices of [3]^3"), "got: {text}");
}

#[test]
fn stability_report_as_json() {
    let dir = TempDir::new().unwrap();
    let set_path = construct(
        &dir,
        "max.txt",
        &[
            "--family",
            "max_independent",
            "--t",
            "3",
            "--n",
            "2",
            "--i",
            "1",
            "--j",
            "1",
        ],
    );
    let out = run(&["stability", "--in", path_str(&set_path), "--json"]);
    assert_eq!(code(&out), 0, "got: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v["t"], 3);
    assert_eq!(v["n"], 2);
    assert_eq!(v["size"], 3);
    assert_eq!(v["mu"], "1/3");
    assert_eq!(v["eps"], "0");
    assert_eq!(v["delta"], "0");
    assert_eq!(v["best_i"], 1);
    assert_eq!(v["best_j"], 1);
    assert_eq!(v["within_regime"], true);
    assert_eq!(v["bound_holds"], true);

    let plain = run(&["stability", "--in", path_str(&set_path)]);
    assert_eq!(code(&plain), 0);
    assert!(stdout(&plain).lines().any(|l| l == "mu=1/3"), "key=value lines");
}

#[test]
fn stability_rejects_dependent_sets() {
    let dir = TempDir::new().unwrap();
    let set_path = dir.path().join("adjacent.txt");
    // (1,1) and (2,2) differ in both coordinates, hence are adjacent.
    std::fs::write(&set_path, "3 2\n1 1\n2 2\n").unwrap();
    let out = run(&["stability", "--in", path_str(&set_path)]);
    assert_eq!(code(&out), 2, "a dependent set is invalid input");
}

#[test]
fn malformed_set_files_exit_2() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [
        ("short-header.txt", "3\n1 1\n"),
        ("out-of-range.txt", "3 2\n1 4\n"),
        ("wrong-arity.txt", "3 2\n1 1 1\n"),
        ("duplicate.txt", "3 2\n1 1\n1 1\n"),
        ("not-numbers.txt", "3 2\none one\n"),
    ] {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        let out = run(&["boundary", "--in", path_str(&p), "--out", "/dev/null"]);
        assert_eq!(code(&out), 2, "{name} must be rejected: {}", stderr(&out));
    }
    let missing = run(&["boundary", "--in", "/no/such/file", "--out", "/dev/null"]);
    assert_eq!(code(&missing), 2, "missing input file is an I/O error");
}

#[test]
fn compress_reports_sizes_and_boundary_change() {
    let dir = TempDir::new().unwrap();
    let set_path = construct(&dir, "remark.txt", &["--family", "remark_counterexample"]);
    let out_path = dir.path().join("compressed.txt");
    let full = run(&[
        "compress",
        "--in",
        path_str(&set_path),
        "--out",
        path_str(&out_path),
    ]);
    assert_eq!(code(&full), 0, "got: {}", stderr(&full));
    assert!(
        stdout(&full).trim().starts_with("wrote 4 vertices, boundary 8 -> "),
        "got: {}",
        stdout(&full)
    );
    let one = run(&[
        "compress",
        "--in",
        path_str(&set_path),
        "--out",
        path_str(&out_path),
        "--coord",
        "1",
    ]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one).trim(), "wrote 4 vertices, boundary 8 -> 8");
    let conflict = run(&[
        "compress",
        "--in",
        path_str(&set_path),
        "--out",
        path_str(&out_path),
        "--coord",
        "1",
        "--full",
    ]);
    assert_eq!(code(&conflict), 2, "--coord conflicts with --full");
}

#[test]
fn oracle_phi_prints_minimum_and_witness() {
    let out = run(&["oracle-phi", "--t", "3", "--n", "2", "--m", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("min_boundary=6"), "got: {text}");
    assert!(text.contains("witness_size=3"), "got: {text}");
    assert!(text.contains("instances_scanned=20"), "got: {text}");
}

#[test]
fn profile_grid_writes_csv() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("grid.csv");
    let out = run(&[
        "profile-grid",
        "--t",
        "3",
        "--points",
        "27",
        "--bits",
        "40",
        "--out",
        path_str(&csv_path),
    ]);
    assert_eq!(code(&out), 0, "got: {}", stderr(&out));
    assert!(stdout(&out).contains("wrote 28 rows"), "got: {}", stdout(&out));
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("nu,phi_lo,phi_hi,phi_exact,power_lower"),
        "CSV header"
    );
    assert_eq!(lines.count(), 28, "one row per grid point");
    assert!(text.contains("1/3,2/3,2/3,true,"), "exact row at nu = 1/3");
}

#[test]
fn verify_suite_passes_and_rejects_unknown_names() {
    let out = run(&["verify", "--suite", "core"]);
    assert_eq!(code(&out), 0, "got: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("[PASS] core/")), "got: {text}");
    assert!(!text.contains("[FAIL]"), "got: {text}");
    assert!(text.contains("checks passed"), "got: {text}");
}

#[test]
fn verify_node_guard_override_exits_3() {
    let out = run(&[
        "verify",
        "--suite",
        "stability",
        "--max-nodes",
        "3",
    ]);
    assert_eq!(code(&out), 3, "a tiny node budget must trip the guard");
    assert!(!stderr(&out).is_empty(), "diagnostic on stderr");
}
