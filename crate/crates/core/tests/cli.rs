use std::path::PathBuf;
use std::process::{Command, Output};

fn sgx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgx"))
        .args(args)
        .output()
        .expect("sgx runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn graph_dot_matches_golden() {
    let o = sgx(&["graph", "--order", "1,2", "--format", "dot"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("graph_12.dot"));
}

#[test]
fn graph_json_matches_golden() {
    let o = sgx(&["graph", "--order", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("graph_1.json"));
}

#[test]
fn polytope_json_matches_golden() {
    let o = sgx(&["polytope", "--order", "2,1", "--coeffs", "2,1", "--variant", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("polytope_21.json"));
}

#[test]
fn zset_csv() {
    let o = sgx(&["zset", "--order", "2,1", "--coeffs", "2,1", "--format", "csv"]);
    assert_eq!(stdout(&o), "x1,x2\n0,0\n0,1\n1,0\n2,1\n");
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("g.dot");
    let o = sgx(&["graph", "--order", "1,2", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("graph_12.dot"));
}

#[test]
fn tableau_commands() {
    let o = sgx(&["tableau", "eval", "--heights", "3,2,1,3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"], "c1; c1+c2-c3; c1");
    assert_eq!(v["agree"], true);

    let o = sgx(&["tableau", "reconstruct", "--function", "c1-c2; 0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["log"][0], serde_json::json!({"k": 2, "j": 0, "parity": "even"}));
    assert_eq!(v["rebuild"]["status"], "complete");

    let o = sgx(&["tableau", "reconstruct", "--function", "c1; c1+c2"]);
    assert_eq!(o.status.code(), Some(1));

    let o = sgx(&["tableau", "reconstruct", "--function", "c1; c1+c2-c3; c1", "--max-steps", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("boundExhausted"));
}

#[test]
fn count_command() {
    let o = sgx(&["count", "--n", "2,4"]);
    assert_eq!(stdout(&o), "n=2 functions=5 graphs=2\nn=4 functions=42 graphs=14\n");
}

#[test]
fn exit_codes() {
    assert_eq!(sgx(&["verify", "theorem", "--n", "1,2"]).status.code(), Some(0));
    assert_eq!(sgx(&["graph", "--order", "1,1"]).status.code(), Some(2));
    assert_eq!(sgx(&["polytope", "--order", "1,3,2", "--coeffs", "3,4,2"]).status.code(), Some(2));
    assert_eq!(sgx(&["sweep", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(sgx(&["count", "--n", "7"]).status.code(), Some(2));
    assert_eq!(sgx(&["bogus"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    for path in [&a, &b] {
        let o = sgx(&["sweep", "--n", "1,2,3", "--trials", "2", "--seed", "42", "--report", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stdout(&o));
    }
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let v: serde_json::Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(v["config"]["seed"], 42);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}
