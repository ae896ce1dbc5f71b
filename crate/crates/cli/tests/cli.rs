use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sharpbound"));
    cmd.args(args)
        .env_remove("SHARPBOUND_MAX_ENUM")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn invariants_of_each_kind() {
    let cases = [
        (r#"{"n":2,"arcs":[[0,1]]}"#, "v=2 c=1 s=2 c̄=2 c̲=2 s̄=1 s̲=1"),
        (r#"{"father":[0,0,2,0,3,3]}"#, "n=7 ℓ=4 d̲=1 d̄=3"),
        (r#"{"values":[1,1,1,1,1,1,2,2,3,3,4]}"#, "n=11 nval=4 m̲=1 m̄=6 m̲̄=5"),
    ];
    for (input, want) in cases {
        let o = run(&["invariants"], input);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want);
    }
}

#[test]
fn invariants_from_text_and_file() {
    let o = run(&["invariants", "--kind", "digraph"], "n=2\n# one arc\n0 1\n");
    assert_eq!(stdout(&o).trim(), "v=2 c=1 s=2 c̄=2 c̲=2 s̄=1 s̲=1");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.txt");
    std::fs::write(&path, "father=0 0 2 0 3 3\n").unwrap();
    let o = run(&["invariants", path.to_str().unwrap(), "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["characteristics"]["leaves"], 4);
}

#[test]
fn invariant_errors_exit_two() {
    let o = run(&["invariants"], "n=2\n0 x\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 3"), "{}", stderr(&o));

    let o = run(&["invariants"], r#"{"n":3,"arcs":[[0,1]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not in class"), "{}", stderr(&o));
}

#[test]
fn bound_examples() {
    let cases: [(&[&str], &str); 4] = [
        (&["bound", "conj1", "v=9", "ccmax=3", "sccmin=2"], "bound=4 case=①∧¬②∧¬③"),
        (&["bound", "conj5", "n=1", "dmin=0", "dmax=0"], "ℓ ∈ [1, 1]"),
        (&["bound", "conj4", "v=3", "c=2", "ccmin=1", "sccmax=1"], "bound=2 case=¬⑥∧¬⑦"),
        (&["bound", "conj1", "v=14", "cc_max=5", "scc_min=3"], "bound=4 case=¬①∧¬②∧¬③"),
    ];
    for (args, want) in cases {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want);
    }
}

#[test]
fn bound_json_and_errors() {
    let o = run(&["bound", "pu", "np=7", "mmin=2", "mdiff=1", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"], 3);
    assert_eq!(v["relation"], "<=");

    let o = run(&["bound", "conj1", "v=3", "ccmax=1", "sccmin=2"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("scc_min <= cc_max"));

    let o = run(&["bound", "conj1", "v=3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witnesses_list_every_row() {
    for (conj, rows) in [("1", 7), ("3", 2), ("4", 3)] {
        let o = run(&["witnesses", "--conj", conj, "--format", "json"], "");
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let list = v["witnesses"].as_array().unwrap();
        assert_eq!(list.len(), rows);
        assert!(list.iter().all(|w| w["equality"] == true));
    }
    assert_eq!(run(&["witnesses", "--conj", "2"], "").status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    for args in [
        ["verify", "--conj", "1", "--max-n", "4", "--mode", "validity"],
        ["verify", "--conj", "5", "--max-n", "7", "--mode", "validity"],
    ] {
        let o = run(&args, "");
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
        assert_eq!(v["verdict"], "pass");
    }
}

#[test]
fn caps_exit_two_unless_forced() {
    let o = run(&["verify", "--conj", "1", "--max-n", "6"], "");
    assert_eq!(o.status.code(), Some(2));

    let o = run_env(&["verify", "--conj", "1", "--max-n", "4"], "", &[("SHARPBOUND_MAX_ENUM", "3")]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["verify", "--conj", "pl", "--max-n", "25", "--force-cap", "--format", "table"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn out_files_are_identical_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("r{jobs}.json"));
        let o = run(
            &["verify", "--conj", "4", "--max-n", "3", "--mode", "cases", "--jobs", jobs, "--out", path.to_str().unwrap()],
            "",
        );
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        bodies.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn tree_partition_mode() {
    let o = run(&["verify", "--mode", "tree-partition", "--max-n", "6", "--format", "table"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("verdict        PASS"));
}

#[test]
fn dot_export() {
    let o = run(&["dot"], "n=2\n0 1\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph G {"));
    assert!(text.contains("0 -> 1;"));
}
