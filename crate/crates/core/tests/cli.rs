use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid-tc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn bounds_for_mixed_5_3() {
    let v = json(&["bounds", "--n", "8", "--mixed", "5,3", "--m", "2"]);
    assert_eq!(v["lower"], 12);
    assert_eq!(v["upper"], 13);
    assert_eq!(v["cd"], 7);
    assert_eq!(v["exact"], false);
    let tags: Vec<&str> = v["provenance"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["tag"].as_str().unwrap())
        .collect();
    assert_eq!(tags, ["lower/disjoint-subgroups(k=3)", "upper/centre-quotient(k=3)"]);
}

#[test]
fn bounds_group_flavours() {
    let pure = json(&["bounds", "--n", "6", "--pure"]);
    assert_eq!((pure["lower"].as_i64(), pure["upper"].as_i64()), (Some(9), Some(9)));
    let full = json(&["bounds", "--n", "6", "--full", "--m", "3"]);
    assert_eq!((full["lower"].as_i64(), full["upper"].as_i64()), (Some(5), Some(15)));
    let gens = json(&["bounds", "--n", "5", "--gens", "(1 2 3)", "--m", "4"]);
    assert_eq!(gens["upper"], 15);
    assert_eq!(gens["exact"], true);
}

#[test]
fn bounds_defaults_to_m_2_and_pure() {
    let v = json(&["bounds", "--n", "4"]);
    assert_eq!((v["m"].as_i64(), v["lower"].as_i64()), (Some(2), Some(5)));
}

#[test]
fn mismatched_mixed_sizes_are_domain_errors() {
    let out = run(&["bounds", "--n", "7", "--mixed", "5,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: invalid-argument:"));
}

#[test]
fn table_csv_has_one_row_per_group_and_m() {
    let out = run(&["table", "--n", "6..8", "--k", "2..3", "--m", "2..3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,n,m,cd,lower,upper,exact"));
    assert_eq!(lines.count(), 3 * 2 * 2);
    assert!(text.contains("\"mixed(5,3)\",8,2,7,12,13,false"));
}

#[test]
fn table_json_rows() {
    let v = json(&["table", "--n", "3,5", "--pure", "--m", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["group"], "pure(5)");
    assert_eq!(rows[1]["lower"], 7);
}

#[test]
fn torsion_text_output() {
    let out = run(&["torsion", "--n", "4", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("torsion: yes (gcd(4,2)=2)"), "{text}");
    assert!(text.contains("witness: "));

    let out = run(&["torsion", "--n", "8", "--k", "3"]);
    assert!(stdout(&out).starts_with("torsion: no"));
}

#[test]
fn witness_is_validated_by_word_check() {
    let v = json(&["witness", "--n", "4", "--k", "2"]);
    let w = &v["witness"];
    assert_eq!(w["source"], "delta-power");
    assert_eq!((w["order"]["m"].as_u64(), w["order"]["l"].as_u64()), (Some(2), Some(2)));
    let word = w["word"].as_str().unwrap();
    let squared = format!("{word} {word}");
    let out = run(&["braid", "equal", "--n", "4", &squared, "1 2 3 1 2 1 1 2 3 1 2 1"]);
    assert_eq!(stdout(&out).trim(), "equal");
}

#[test]
fn witness_on_torsion_free_input_fails() {
    let out = run(&["witness", "--n", "8", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: torsion-free:"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn braid_equal_and_unequal() {
    let out = run(&["braid", "equal", "--n", "3", "1 2 1", "2 1 2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "equal");
    let out = run(&["braid", "equal", "--n", "3", "1 2", "2 1"]);
    assert_eq!(stdout(&out).trim(), "not equal");
    let v = json(&["braid", "equal", "--n", "3", "-1 -2 -1", "-2 -1 -2"]);
    assert_eq!(v["equal"], true);
}

#[test]
fn braid_word_operations() {
    let out = run(&["braid", "multiply", "--n", "3", "1 2", "-2"]);
    assert_eq!(stdout(&out).trim(), "1 2 -2");
    let out = run(&["braid", "invert", "--n", "3", "1 -2"]);
    assert_eq!(stdout(&out).trim(), "2 -1");
    let out = run(&["braid", "perm", "--n", "4", "1 2 3"]);
    assert_eq!(stdout(&out).trim(), "(1 2 3 4)");
    let out = run(&["braid", "is-pure", "--n", "3", "1 1 2 2"]);
    assert_eq!(stdout(&out).trim(), "pure");
}

#[test]
fn braid_linking_json() {
    let v = json(&["braid", "linking", "--n", "3", "1 1 2 2"]);
    assert_eq!(v["components"], serde_json::json!([[1], [2], [3]]));
    assert_eq!(v["matrix"], serde_json::json!([[0, 1, 0], [1, 0, 1], [0, 1, 0]]));
}

#[test]
fn normal_form_round_trips() {
    let v = json(&["braid", "normal-form", "--n", "4", "1 -2 3 2 -1"]);
    let word = v["word"].as_str().unwrap();
    let out = run(&["braid", "equal", "--n", "4", word, "1 -2 3 2 -1"]);
    assert_eq!(stdout(&out).trim(), "equal");
}

#[test]
fn bad_generator_is_a_domain_error() {
    let out = run(&["braid", "perm", "--n", "3", "1 3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: generator-out-of-range:"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["bounds"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--n", "4", "--pure", "--full"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--n", "9..4"]).status.code(), Some(2));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "center"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim_end().ends_with("PASS"));
    let v = json(&["verify", "--suite", "bounds", "--seed", "3"]);
    assert_eq!(v["criterion"], "A6");
    assert_eq!(v["seed"], 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "congruence", "--format", "json"][..],
        &["table", "--n", "4..9", "--k", "1..4", "--m", "2..4"][..],
        &["witness", "--n", "9", "--k", "3", "--format", "csv"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}
