use std::process::{Command, Output};

fn h6(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h6"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn outer_apply() {
    for (input, expected) in [
        ("(1,2)", "(1,2)(3,6)(4,5)"),
        ("id", "id"),
        ("(1,2,3,4,5,6)", "(1,2,6)(3,5)"),
    ] {
        let o = h6(&["outer", "apply", input]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected);
    }
    assert_eq!(h6(&["outer", "apply", "(1,9)"]).status.code(), Some(2));
    assert_eq!(h6(&["outer", "apply", "(1,2"]).status.code(), Some(2));
}

#[test]
fn outer_table_json() {
    let o = h6(&["outer", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generator_images"]["(1,2)"], "(1,2)(3,6)(4,5)");
    assert_eq!(v["table"].as_array().unwrap().len(), 720);
}

#[test]
fn orders() {
    for (group, order) in [
        ("autstar", "2160"),
        ("Y", "720"),
        ("N", "59049"),
        ("X", "85030560"),
    ] {
        let o = h6(&["order", "--group", group]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), order);
    }
    assert_eq!(h6(&["order", "--group", "Q"]).status.code(), Some(2));
}

#[test]
fn verify_json_schema() {
    let o = h6(&["verify", "--only", "prop1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    let clause = v["clauses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "order_X")
        .unwrap();
    assert_eq!(clause["expected"], "85030560");
    for key in ["id", "claim", "expected", "computed", "pass"] {
        assert!(clause.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_everything() {
    let o = h6(&["verify", "--text", "--seed", "17"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: PASS"));
}

#[test]
fn usage_errors() {
    assert_eq!(h6(&["verify", "--only", "bogus"]).status.code(), Some(2));
    assert_eq!(h6(&["verify", "--json", "--text"]).status.code(), Some(2));
    assert_eq!(h6(&[]).status.code(), Some(2));
}

#[test]
fn hexacode_json() {
    let o = h6(&["hexacode"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["min_distance"], 4);
    assert_eq!(
        v["weight_distribution"],
        serde_json::json!([1, 0, 0, 0, 45, 0, 18])
    );
    for p in v["punctured"].as_array().unwrap() {
        assert_eq!(
            (
                p["length"].clone(),
                p["dimension"].clone(),
                p["min_distance"].clone()
            ),
            (5.into(), 3.into(), 3.into())
        );
    }
}
