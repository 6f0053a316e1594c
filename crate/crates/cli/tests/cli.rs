use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;
use zchelp::chartab::{fixtures, parse_table};
use zchelp::engine::Report;

fn zchelp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zchelp"))
        .args(args)
        .env("HELP_NO_COLOR", "1")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn gen(dir: &TempDir, args: &[&str], name: &str) -> String {
    let path = dir.path().join(name);
    let path = path.to_str().unwrap().to_string();
    let mut all = vec!["gen-psl2"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--output", &path]);
    let o = zchelp(&all);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

fn read_table(path: &str) -> zchelp::CharacterTable {
    parse_table(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_s5_fixture() {
    let o = zchelp(&["verify", "--fixture", "s5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict: ZC verified"), "{out}");
    assert!(out.contains("order   6: trivial_only (1 tower, 1 trivial)"), "{out}");
    assert!(!out.contains('\x1b'));
}

#[test]
fn verify_generated_psl2_7_with_report() {
    let dir = TempDir::new().unwrap();
    let table = gen(&dir, &["7", "--brauer"], "psl2_7.json");
    let report_path = dir.path().join("report.json");
    let o = zchelp(&["verify", &table, "--report", report_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);

    let json = std::fs::read_to_string(&report_path).unwrap();
    let report: Report = serde_json::from_str(&json).unwrap();
    assert!(report.is_verified());
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);
    for order in &report.orders {
        let line = format!("order {:>3}: {} (", order.n, order.status.as_str());
        assert!(text.contains(&line), "missing {line:?} in\n{text}");
    }

    let o = zchelp(&["verify", &table, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let printed: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(printed, report);
}

#[test]
fn partial_scans_exit_with_two() {
    let o = zchelp(&["verify", "--fixture", "s5", "--orders", "2,4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("verdict: undecided"));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"name\": \"broken\"").unwrap();
    let o = zchelp(&["verify", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: "));

    let o = zchelp(&["verify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let o = zchelp(&["verify", "--fixture", "s5", "--orders", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn inconsistent_table_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(fixtures::S5_JSON).unwrap();
    v["power_maps"]["2"]["4a"] = serde_json::json!("2b");
    let path = dir.path().join("wrong.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = zchelp(&["verify", path.to_str().unwrap(), "--orders", "2,4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: inconsistent"));
}

#[test]
fn gen_psl2_tables() {
    let dir = TempDir::new().unwrap();
    let t = read_table(&gen(&dir, &["7", "--brauer"], "a.json"));
    assert_eq!(t.classes.len(), 6);
    let mut degrees: Vec<u64> = t.brauer[0].characters.iter().map(|c| c.degree()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, [1, 3, 5, 7]);

    let t = read_table(&gen(&dir, &["5"], "b.json"));
    let mut degrees: Vec<u64> = t.ordinary.iter().map(|c| c.degree()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, [1, 3, 3, 4, 5]);
    assert!(t.brauer.is_empty());

    let t = read_table(&gen(&dir, &["3", "2", "--symmetric-powers"], "c.json"));
    assert_eq!(t.order, 360);
    assert_eq!(t.brauer[0].characters.len(), 2);
}

#[test]
fn gen_psl2_to_stdout() {
    let o = zchelp(&["gen-psl2", "5"]);
    assert!(o.status.success());
    assert_eq!(parse_table(&stdout(&o)).unwrap().order, 60);
}

#[test]
fn gen_psl2_refusals() {
    let o = zchelp(&["gen-psl2", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = zchelp(&["gen-psl2", "3", "2", "--brauer"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--brauer needs q = p"), "{}", stderr(&o));
}

#[test]
fn tuples_of_order_six() {
    let o = zchelp(&["tuples", "--fixture", "s5", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("order 6: 1 admissible tower\n"), "{out}");
    assert!(out.contains("[6] 6a=1 "), "{out}");

    let o = zchelp(&["tuples", "--fixture", "s5", "--order", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let towers = v["towers"].as_array().unwrap();
    assert_eq!(towers.len(), 1);
    assert_eq!(towers[0]["tuples"]["6"], serde_json::json!({ "6a": 1 }));
    assert_eq!(towers[0]["multiplicities"]["1b"], serde_json::json!([0, 0, 0, 1, 0, 0]));
}

#[test]
fn tuples_of_an_impossible_order() {
    let o = zchelp(&["tuples", "--fixture", "s5", "--order", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "order 8: infeasible\n");
}

#[test]
fn tuples_of_prime_order_in_psl2_7() {
    let dir = TempDir::new().unwrap();
    let table = gen(&dir, &["7"], "psl2_7.json");
    let o = zchelp(&["tuples", &table, "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with("order 3: 1 admissible tower\ntower 1 (trivial): "),
        "{out}"
    );
}

#[test]
fn validate_from_stdin_with_audit() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zchelp"))
        .args(["validate", "-", "--audit"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(fixtures::S5_JSON.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(
        out.contains("mod 5: 6 Brauer characters, decomposition matrix checked"),
        "{out}"
    );
    assert!(out.ends_with("ok\n"));
    assert!(stderr(&o).contains("audit: 72 (character, class) pairs checked"));
}

#[test]
fn input_is_required() {
    let o = zchelp(&["verify"]);
    assert_eq!(o.status.code(), Some(1));
    let o = zchelp(&["validate", "--fixture", "a5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(zchelp(&["--help"]).status.code(), Some(0));
}
