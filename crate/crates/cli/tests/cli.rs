use std::process::{Command, Output};

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn enumerate_counts_double_factorial() {
    for (n, count) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
        let o = brauer(&["enumerate", "--n", &n.to_string()]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), count);
    }
}

#[test]
fn compose_counts_a_loop() {
    let v = json(&brauer(&["compose", "(1,2)(1',2')", "(1,2)(1',2')"]));
    assert_eq!(v["diagram"], "(1,2)(1',2')");
    assert_eq!(v["loops"], 1);
}

#[test]
fn generic_and_specialized_traces() {
    let o = brauer(&["trace", "--n", "3", "--element", "p12"]);
    assert_eq!(stdout(&o).trim(), "1/m");
    let o = brauer(&["trace", "--n", "2", "--element", "s12", "--m", "4"]);
    assert_eq!(stdout(&o).trim(), "1/4");
    let o = brauer(&["trace", "--n", "2", "--element", "p13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gram_reports_failing_pivot_only_when_degenerate() {
    let v = json(&brauer(&["gram", "--n", "3", "--m", "13/2"]));
    assert_eq!(v["dim"], 15);
    assert_eq!(v["positive_definite"], true);
    assert!(v.get("failing_pivot_index").is_none());

    let v = json(&brauer(&["gram", "--n", "3", "--m", "1"]));
    assert_eq!(v["positive_definite"], false);
    assert!(v["failing_pivot_index"].is_u64());
}

#[test]
fn gram_writes_to_file() {
    let dir = std::env::temp_dir().join(format!("brauer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gram.json");
    let o = brauer(&["gram", "--n", "2", "--m", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn representations() {
    let v = json(&brauer(&["rep", "--group", "sym", "--lambda", "2,1"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);

    let v = json(&brauer(&["rep", "--algebra", "brauer", "--n", "3", "--lambda", "1", "--m", "5"]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    // one permutation and one contraction per adjacent pair
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);

    let o = brauer(&["rep", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lie_closure_of_the_reflection_cell() {
    let v = json(&brauer(&["lie-closure", "--n", "3", "--lambda", "1"]));
    assert_eq!(v["ambient_dim"], 9);
    assert_eq!(v["closure_dim"], 8);
    assert_eq!(v["type"], "sl3");
}

#[test]
fn bratteli_csv_and_dot() {
    let o = brauer(&["bratteli", "--n", "3", "--csv"]);
    let text = stdout(&o);
    let rank3: Vec<&str> = text.lines().filter(|l| l.starts_with("3,")).collect();
    assert_eq!(rank3.len(), 4);
    assert!(text.contains("3,\"[1]\",3"));

    let path = std::env::temp_dir().join(format!("brauer-bratteli-{}.dot", std::process::id()));
    let o = brauer(&["bratteli", "--n", "2", "--dot", path.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    std::fs::remove_file(path).ok();
}

#[test]
fn bmw_rank_three() {
    let v = json(&brauer(&["bmw", "--n", "3", "--s", "2", "--alpha", "7"]));
    assert_eq!(v["dim"], 15);
    assert_eq!(v["convention"], "kauffman");
    // 1 + (7 - 1/7) / (2 - 1/2)
    assert_eq!(v["delta"], "39/7");
    assert_eq!(v["generator_matrices"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_exit_status_tracks_failures() {
    let o = brauer(&["verify", "diagrams", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));

    let o = brauer(&["verify", "exceptional"]);
    assert_eq!(o.status.code(), Some(1));

    let o = brauer(&["verify", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_is_a_report() {
    let v = json(&brauer(&["verify", "cubic", "--n", "3", "--lambda", "3", "--K", "7", "--json"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["checks"][0]["verdict"], "pass");
    assert_eq!(v["checks"][0]["parameters"]["K"], "7");
}
