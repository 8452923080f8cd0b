use std::process::{Command, Output};

fn fermat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fermat"))
        .args(args)
        .output()
        .expect("spawn fermat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn classify_golden() {
    let o = fermat(&["classify", "3", "4", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"a\":3,\"b\":4,\"c\":5,\"m\":1,\"p\":1,\"q\":2,\"orientation\":\"odd_first\"}\n"
    );

    let o = fermat(&["--format", "json", "classify", "4", "3", "5"]);
    assert_eq!(json_lines(&o)[0]["orientation"], "even_first");
}

#[test]
fn classify_rejects_non_triple() {
    let o = fermat(&["classify", "1", "2", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("not a Pythagorean triple"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["classify", "3", "4"],
        &["classify", "-3", "4", "5"],
        &["verify", "dio20"],
        &["verify", "nope", "--bound", "3"],
        &["verify", "flt4", "--bound", "10", "--jobs", "0"],
        &["props", "--trials", "5"],
        &["triples", "--max-c", "10", "--format", "xml"],
    ] {
        let o = fermat(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
    assert_eq!(fermat(&["--help"]).status.code(), Some(0));
    assert_eq!(fermat(&["--version"]).status.code(), Some(0));
}

#[test]
fn overflow_exits_3() {
    let o = fermat(&["verify", "flt4", "--bound", "70000"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("overflow"));
    let o = fermat(&["circle", "4294967296", "4294967297"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn domain_errors_exit_4() {
    assert_eq!(fermat(&["circle", "3", "2"]).status.code(), Some(4));
    assert_eq!(fermat(&["circle", "1", "0"]).status.code(), Some(4));
    assert_eq!(fermat(&["descend", "2", "4"]).status.code(), Some(4));
    assert_eq!(fermat(&["descend", "0", "1"]).status.code(), Some(4));
}

#[test]
fn triples_listing() {
    let o = fermat(&["triples", "--max-c", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 4 5\n6 8 10\n5 12 13\n");

    let o = fermat(&[
        "triples",
        "--max-c",
        "13",
        "--primitive",
        "--format",
        "json",
    ]);
    let rows: Vec<_> = json_lines(&o)
        .iter()
        .map(|v| {
            (
                v["a"].as_u64().unwrap(),
                v["b"].as_u64().unwrap(),
                v["c"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows, [(3, 4, 5), (5, 12, 13)]);

    let o = fermat(&["triples", "--max-c", "2", "--include-degenerate"]);
    assert_eq!(stdout(&o), "0 0 0\n1 0 1\n2 0 2\n");
}

#[test]
fn circle_point_output() {
    let o = fermat(&["circle", "2", "4", "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"r_num\":1,\"r_den\":2,\"x_num\":3,\"x_den\":5,\"y_num\":4,\"y_den\":5}\n"
    );
}

#[test]
fn descend_trace() {
    let o = fermat(&["descend", "9", "16", "--trace", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 2);
    let record = &lines[0]["record"];
    assert_eq!(
        (
            record["m"].as_u64(),
            record["n"].as_u64(),
            record["u"].as_u64()
        ),
        (Some(4), Some(3), Some(5))
    );
    assert_eq!(lines[1]["stage"], "DiffNotSquare");
    assert_eq!(lines[1]["trace_valid"], true);

    let o = fermat(&["descend", "1", "2"]);
    assert_eq!(
        stdout(&o),
        "(1, 2) refuted at QNotSquare after 1 step(s); trace valid\n"
    );
}

#[test]
fn verify_report_shape() {
    let o = fermat(&[
        "verify", "dio20", "--bound", "1000", "--jobs", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    let r = &lines[0];
    assert_eq!(r["task"], "dio20");
    assert_eq!(r["bound"], 1000);
    assert_eq!(r["jobs"], 4);
    assert_eq!(r["counterexamples"], serde_json::json!([]));
    let keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 6);
}

#[test]
fn text_and_json_counts_agree() {
    for task in ["dio20", "flt4", "pq-square", "right-triangle"] {
        let j = fermat(&[
            "verify", task, "--bound", "90", "--jobs", "3", "--format", "json",
        ]);
        let t = fermat(&["verify", task, "--bound", "90", "--jobs", "3"]);
        let report = &json_lines(&j)[0];
        let text = stdout(&t);
        let checked = format!("states_checked={}", report["states_checked"]);
        assert!(text.contains(&checked), "{task}: {text}");
        assert!(text.contains("counterexamples=0"), "{task}: {text}");
    }
}

#[test]
fn props_output() {
    let o = fermat(&[
        "props", "--trials", "300", "--seed", "9", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 8);
    for l in &lines {
        assert_eq!(l["failures"], 0, "{l}");
        assert_eq!(l["seed"], 9);
    }
}
