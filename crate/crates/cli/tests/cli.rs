use std::path::PathBuf;
use std::process::{Command, Output};

use paritydeg::format::{Problem, ProblemFile};
use paritydeg::verify::{Campaign, CheckName, Report};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paritydeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn run_file(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn chi_examples() {
    let o = run_file("chi", "normalizer.json", &["--at", "0", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi=1, agree\n"), "{}", stdout(&o));

    let o = run_file("chi", "invertible.json", &["--method", "det"]);
    assert_eq!(stdout(&o), "chi=0\n");

    let o = run_file("chi", "singular.json", &["--method", "det"]);
    assert_eq!(stdout(&o), "chi=INFINITE\n");

    let o = run_file("chi", "normalizer-squared.json", &["--method", "smith"]);
    assert!(stdout(&o).contains("partial multiplicities: [0, 2]"));

    let o = run_file("chi", "normalizer.json", &["--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chi"], 1);
    assert_eq!(v["agree"], true);
}

#[test]
fn chi_precondition_and_usage_codes() {
    // An identically singular path is never transversal.
    let o = run_file("chi", "singular.json", &["--method", "transversal"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_file("chi", "normalizer.json", &["--at", "one"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run_file("chi", "identity-tern.json", &[]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["chi", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parity_examples() {
    let o = run_file("parity", "normalizer.json", &["-1", "1"]);
    assert!(stdout(&o).starts_with("sigma=-1\n"));
    let o = run_file("parity", "invertible.json", &[]);
    assert!(stdout(&o).starts_with("sigma=+1\n"));
    let o = run_file("parity", "normalizer-squared.json", &[]);
    assert!(stdout(&o).starts_with("sigma=+1\n"));
    assert!(stdout(&o).contains("lambda=0 chi=2"));
    let o = run_file("parity", "normalizer.json", &["--local", "0"]);
    assert!(stdout(&o).starts_with("sigma=-1\n"));
    let o = run_file("parity", "homotopy.json", &[]);
    assert!(stdout(&o).contains("agree"));

    let o = run_file("parity", "normalizer.json", &["0", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("det L(0) = 0"));
}

#[test]
fn degree_examples() {
    let o = run_file("degree", "identity-tern.json", &[]);
    assert!(stdout(&o).starts_with("degree=1\n"));

    let o = run_file("degree", "quadratic-tern.json", &["--method", "regular"]);
    let s = stdout(&o);
    assert!(s.starts_with("degree=0\n"));
    assert!(s.contains("(-1) eps=-1") && s.contains("(1) eps=+1"), "{s}");

    let o = run_file("degree", "complex-square.json", &["--method", "chi"]);
    assert!(stdout(&o).starts_with("degree=2\n"));

    let o = run_file("degree", "negative-identity.json", &["--method", "ls"]);
    assert!(stdout(&o).starts_with("degree=1\n"));

    let o = run_file("degree", "critical-square.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--method perturbed"));
    let o = run_file("degree", "critical-square.json", &["--method", "perturbed"]);
    assert!(stdout(&o).starts_with("degree=0\n"));
}

#[test]
fn verify_exit_codes_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "--seed",
        "5",
        "--n",
        "4",
        "--checks",
        "parity-split,chi-agreement",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: all checks passed"));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.checks.len(), 2);
    assert_eq!(report.summary(CheckName::ParitySplit).unwrap().passed, 4);

    // A single-instance campaign file replays one instance of the run above.
    let replay = report.campaign.replay_of(CheckName::ChiAgreement, 2);
    let file = dir.path().join("replay.json");
    std::fs::write(
        &file,
        ProblemFile::new(Problem::Campaign(replay.clone())).to_json(),
    )
    .unwrap();
    let o = run(&["--json", "verify", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let again: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(again.campaign, replay);
    assert_eq!(again.checks[0].passed, 1);

    let args: Vec<String> = replay
        .command()
        .split(' ')
        .skip(1)
        .map(String::from)
        .collect();
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", replay.command());

    let o = run(&["verify", "--n", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify", "--dims", "1..9", "--checks", "ls-formula"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sample_files_parse_and_round_trip() {
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let file = ProblemFile::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(ProblemFile::parse(&file.to_json()).unwrap(), file);
    }
    let c: Campaign = serde_json::from_str(r#"{"seed": 1, "checks": ["ls-formula"]}"#).unwrap();
    assert_eq!(c.instances, 50);
}
