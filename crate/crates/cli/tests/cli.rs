use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fcp-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn fcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn single() -> String {
    fixture("single.txt", "p 1in3 3 1\n1 2 3\n")
        .display()
        .to_string()
}

fn empty2() -> String {
    fixture("empty2.txt", "p 1in3 2 0\n").display().to_string()
}

#[test]
fn solve_yes_and_no() {
    let path = single();
    let yes = fcp(&["solve", "--instance", &path, "--k", "1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("decision: YES"));
    assert!(stdout(&yes).contains("witness: 1__"));

    let no = fcp(&["solve", "--instance", &path, "--k", "0"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("decision: NO"));
}

#[test]
fn solve_json_fields() {
    let o = fcp(&[
        "solve",
        "--instance",
        &single(),
        "--k",
        "1",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["format"], "fcp-solve-report");
    assert_eq!(v["decision"], true);
    assert_eq!(v["witness"], "1__");
    assert_eq!(v["solutions_found"], 3);
}

#[test]
fn minclue_reports() {
    let o = fcp(&["minclue", "--instance", &single(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["min_clue"], 1);

    let unique = fixture("unique.txt", "p 1in3 1 1\n1 1 -1\n");
    let o = fcp(&["minclue", "--instance", unique.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("min_clue: 0\n"));

    let unsat = fixture("unsat.txt", "p 1in3 1 1\n1 1 1\n");
    let o = fcp(&["minclue", "--instance", unsat.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "no solutions\n");
    let o = fcp(&["solve", "--instance", unsat.to_str().unwrap(), "--k", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_reduction_statuses() {
    let o = fcp(&[
        "check-reduction",
        "--instance",
        &single(),
        "--reduction",
        "dup-pad",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: pass"));

    let path = empty2();
    let o = fcp(&[
        "check-reduction",
        "--instance",
        &path,
        "--reduction",
        "parity",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["mode"], "infer");
    assert_eq!(v["status"], "fail");
    assert_eq!(v["parsimony"]["source_count"], 4);
    assert_eq!(v["parsimony"]["target_count"], 4);
    assert_eq!(v["violations"][0]["target_index"], 2);

    let o = fcp(&[
        "check-reduction",
        "--instance",
        &path,
        "--reduction",
        "parity",
        "--cap-solutions",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("status: inconclusive"));

    let o = fcp(&[
        "check-reduction",
        "--instance",
        &path,
        "--reduction",
        "parity",
        "--mode",
        "declared",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn transfer_both_directions() {
    let path = empty2();
    let o = fcp(&[
        "transfer",
        "--instance",
        &path,
        "--direction",
        "forward",
        "--clue",
        "1_",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("output: 1_____ (size 1)"));

    let o = fcp(&[
        "transfer",
        "--instance",
        &path,
        "--direction",
        "backward",
        "--clue",
        "_1____",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("output: _1 (size 1)"));

    let clue = fixture("clue.txt", "__1_0_\n");
    let o = fcp(&[
        "transfer",
        "--instance",
        &path,
        "--direction",
        "backward",
        "--clue-file",
        clue.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["output"], "1_");

    // a and b copies of the same variable disagree
    let o = fcp(&[
        "transfer",
        "--instance",
        &path,
        "--direction",
        "backward",
        "--clue",
        "1_0___",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = fcp(&[
        "transfer",
        "--instance",
        &path,
        "--reduction",
        "parity",
        "--direction",
        "forward",
        "--clue",
        "1_",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_instance_names_line() {
    let bad = fixture("bad.txt", "c comment\np 1in3 2 1\n1 2\n");
    let o = fcp(&["minclue", "--instance", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = fcp(&["minclue", "--instance", "/nonexistent/instance.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn experiment_runs_and_is_deterministic() {
    let args = [
        "experiment",
        "--seed",
        "42",
        "--trials",
        "50",
        "--format",
        "json",
    ];
    let a = fcp(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let v = json(&a);
    assert_eq!(v["passes"], 50);
    assert_eq!(v["trials"], 50);
    assert_eq!(a.stdout, fcp(&args).stdout);

    let o = fcp(&["experiment", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_round_trips_through_solver() {
    let o = fcp(&["generate", "--vars", "3", "--clauses", "1", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p 1in3 3 1\n1 1 -3\n");

    let o = fcp(&["generate", "--vars", "2", "--clauses", "0", "--parity"]);
    let path = fixture("gen-parity.txt", &stdout(&o));
    let o = fcp(&[
        "minclue",
        "--instance",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(json(&o)["solutions"], 4);
    assert_eq!(json(&o)["kind"], "parity1in3");
}
