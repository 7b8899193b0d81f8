use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name).to_string_lossy().into_owned()
}

fn sccheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sccheck")).args(args).env_remove("SCCHECK_SWEEP_BUDGET").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_plurality() {
    let out = sccheck(&["eval", "--rule", "plurality", "--profile", &fixture("fig2-left.prof")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "{a,c}");
}

#[test]
fn margins_table_and_json() {
    let out = sccheck(&["margins", "--profile", &fixture("fig1.prof")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next().unwrap().split_whitespace().collect::<Vec<_>>(), ["0", "0", "-2", "2", "4"]);

    let json = sccheck(&["margins", "--json", "--profile", &fixture("fig1.prof")]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["m"], 5);
    assert_eq!(doc["margins"][0][4], 4);
}

#[test]
fn top_cycle_of_profile_and_graph() {
    let out = sccheck(&["tc", "--profile", &fixture("fig1.prof")]);
    let text = stdout(&out);
    assert!(text.contains("top cycle: {a,b,c}"), "{text}");
    assert!(text.contains("dominant chain: {a,b,c} < {a,b,c,d,e}"), "{text}");

    let dir = std::env::temp_dir().join(format!("sccheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("cycle.json");
    std::fs::write(&graph, r#"{"m": 3, "margins": [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]}"#).unwrap();
    let out = sccheck(&["tc", "--graph", graph.to_str().unwrap()]);
    assert!(stdout(&out).contains("top cycle: {a,b,c}"));

    let realized = sccheck(&["mcgarvey", "--graph", graph.to_str().unwrap()]);
    assert_eq!(realized.status.code(), Some(0));
    let profile = dir.join("realized.prof");
    std::fs::write(&profile, realized.stdout).unwrap();
    let margins = sccheck(&["margins", "--json", "--profile", profile.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&margins)).unwrap();
    assert_eq!(doc["margins"], serde_json::json!([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn manipulation_exit_codes() {
    let found = sccheck(&["manipulate", "--rule", "plurality", "--profile", &fixture("fig2-left.prof")]);
    assert_eq!(found.status.code(), Some(1));
    let text = stdout(&found);
    assert!(text.starts_with("voter 5 (b c a) reports c b a: {a,c} -> {c}"), "{text}");
    assert!(text.contains("c b a\n"));

    let none = sccheck(&["manipulate", "--rule", "tc", "--profile", &fixture("fig2-left.prof")]);
    assert_eq!(none.status.code(), Some(0));
    assert_eq!(stdout(&none).trim(), "no manipulation");

    let group = sccheck(&["manipulate", "--rule", "tc", "--group", "2", "--profile", &fixture("fig1.prof")]);
    assert_eq!(group.status.code(), Some(0));
}

#[test]
fn axioms_report() {
    let holds = sccheck(&["axioms", "--rule", "tc", "--m", "3", "--n", "2", "--axiom", "sp,pairwise,cos"]);
    assert_eq!(holds.status.code(), Some(0));
    let text = stdout(&holds);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| !l.contains("violated")));

    let violated = sccheck(&["axioms", "--rule", "borda", "--m", "3", "--n", "3", "--axiom", "sp", "--json"]);
    assert_eq!(violated.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&violated)).unwrap();
    assert_eq!(doc["verdicts"][0]["outcome"], "violated-with-witness");
    assert_eq!(doc["verdicts"][0]["witness"]["kind"], "manipulation");
}

#[test]
fn usage_errors_exit_2() {
    let missing = sccheck(&["eval", "--rule", "tc", "--profile", "/nonexistent/profile.prof"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));

    let bad_rule = sccheck(&["eval", "--rule", "no-such-rule", "--profile", &fixture("fig1.prof")]);
    assert_eq!(bad_rule.status.code(), Some(2));

    let too_big = sccheck(&["manipulate", "--rule", "plurality", "--group", "9", "--profile", &fixture("fig2-left.prof")]);
    assert_eq!(too_big.status.code(), Some(2));
}

#[test]
fn budget_from_flag_and_environment() {
    let args = ["axioms", "--rule", "tc", "--m", "3", "--n", "3", "--axiom", "sp"];
    let flag = sccheck(&[&["--budget", "5"], &args[..]].concat());
    assert_eq!(flag.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&flag.stderr).contains("budget"));

    let env = Command::new(env!("CARGO_BIN_EXE_sccheck")).args(args).env("SCCHECK_SWEEP_BUDGET", "5").output().unwrap();
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn randomized_search() {
    let out = sccheck(&["search", "--rule", "borda", "--m", "3", "--n", "3", "--seed", "1", "--evaluations", "100000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("voter "));
}
