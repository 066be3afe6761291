use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lefsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefsig")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_owned()
}

#[test]
fn signature_of_sample_documents() {
    let o = lefsig(&["signature", &data("ozbagci.json")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "signature: 1\n");

    let o = lefsig(&["signature", &data("ozbagci.json"), "--trace"]);
    let text = stdout(&o);
    assert!(text.starts_with("k  class"));
    assert_eq!(text.lines().count(), 1 + 3 + 2);
}

#[test]
fn null_homologous_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "zero.json", r#"{"genus": 2, "boundary": 0, "cycles": [{"vector": [0, 0, 0, 0]}]}"#);
    assert_eq!(last_line(&lefsig(&["signature", p.to_str().unwrap()])), "signature: -1");
    let p = write(&dir, "left.json", r#"{"genus": 1, "boundary": 0, "cycles": [{"vector": [0, 0], "chirality": -1}]}"#);
    assert_eq!(last_line(&lefsig(&["signature", p.to_str().unwrap()])), "signature: 1");
}

#[test]
fn json_trace_is_deterministic() {
    let a = lefsig(&["signature", &data("matsumoto.json"), "--json"]);
    let b = lefsig(&["signature", &data("matsumoto.json"), "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["signature"], 0);
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);
}

#[test]
fn power_reports_corrections() {
    let o = lefsig(&["power", &data("matsumoto.json"), "--n", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let corrections: Vec<&str> =
        text.lines().skip_while(|l| !l.starts_with("m ")).skip(1).take(4).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(corrections, ["4", "4", "0", "4"]);
    assert_eq!(last_line(&o), "signature: -12");

    for (n, expected) in [("1", 0), ("2", -4), ("4", -8), ("10", -24)] {
        let o = lefsig(&["power", &data("matsumoto.json"), "--n", n, "--json"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["signature"], expected, "n = {n}");
    }
    assert_eq!(last_line(&lefsig(&["power", &data("chain.json"), "--n", "4"])), "signature: -7");
    assert_eq!(last_line(&lefsig(&["power", &data("ozbagci.json"), "--n", "1"])), "signature: 1");
    assert_eq!(lefsig(&["power", &data("ozbagci.json"), "--n", "0"]).status.code(), Some(2));
}

#[test]
fn maslov_and_meyer() {
    let o = lefsig(&["maslov", &data("normalization.json")]);
    assert_eq!(last_line(&o), "maslov index: -1");
    let o = lefsig(&["maslov", &data("normalization.json"), "--check-axioms"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches(" pass").count(), 5);

    let dir = tempfile::tempdir().unwrap();
    let same = write(&dir, "same.json", r#"{"dimension": 4, "matrices": [[[1,0,0,0],[0,0,"2/3",0]], [[1,0,0,0],[0,0,1,0]], [[2,0,0,0],[0,0,1,0]]]}"#);
    assert_eq!(last_line(&lefsig(&["maslov", same.to_str().unwrap()])), "maslov index: 0");

    let rank = write(&dir, "rank.json", r#"{"dimension": 4, "matrices": [[[1,0,0,0],[2,0,0,0]], [[1,0,0,0],[0,0,1,0]], [[1,0,0,0],[0,0,1,0]]]}"#);
    let o = lefsig(&["maslov", rank.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrices[0]") && stderr(&o).contains("rank"), "{}", stderr(&o));

    let iso = write(&dir, "iso.json", r#"{"dimension": 2, "matrices": [[[1,0],[0,1]], [[1,0]], [[0,1]]]}"#);
    let o = lefsig(&["maslov", iso.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("isotropy"), "{}", stderr(&o));

    assert_eq!(last_line(&lefsig(&["meyer", &data("boundary-twists.json")])), "meyer cocycle: -1");
    let bad = write(&dir, "bad.json", r#"{"dimension": 2, "matrices": [[[2,0],[0,1]], [[1,0],[0,1]]]}"#);
    let o = lefsig(&["meyer", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrices[0]"));
}

#[test]
fn generate_round_trips_through_signature() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("family.json");
    let o = lefsig(&["generate", "--genus", "1", "--boundary", "1", "--n", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(last_line(&o), "signature: 3");
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["cycles"].as_array().unwrap().len(), 9);
    assert_eq!(last_line(&lefsig(&["signature", out.to_str().unwrap()])), "signature: 3");

    let o = lefsig(&["generate", "--genus", "2", "--boundary", "0", "--n", "1"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["cycles"].as_array().unwrap().iter().all(|c| c["vector"].as_array().unwrap().len() == 4));
    let p = write(&dir, "g2.json", &stdout(&o));
    assert_eq!(last_line(&lefsig(&["signature", p.to_str().unwrap()])), "signature: 1");

    let o = lefsig(&["generate", "--genus", "0", "--boundary", "2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("g >= 1"));
}

#[test]
fn input_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"genus": 1, "boundary": 1, "cycles": [{"vector": [1, 0, 0]}]}"#, "expected 2 entries"),
        (r#"{"genus": 1, "boundary": 1, "cycles": [{"vector": [1, 0], "chirality": 3}]}"#, "cycles[0].chirality"),
        (r#"{"genus": 1, "boundary": 1, "cycles": [{"vector": [1, "a"]}]}"#, "cycles[0].vector[1]"),
        (r#"{"genus": 1, "cycles": []}"#, "boundary"),
        (r#"{"genus": 1, "boundary": 1, "cycles": [], "weight": 2}"#, "weight"),
        ("not json", "expected"),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let p = write(&dir, &format!("case{i}.json"), text);
        let o = lefsig(&["signature", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "case {i}");
        assert!(stderr(&o).contains(needle), "case {i}: {}", stderr(&o));
    }
    let o = lefsig(&["signature", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
