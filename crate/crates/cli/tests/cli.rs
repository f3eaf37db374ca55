use std::process::{Command, Output};

fn liegen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liegen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = liegen(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn envelope_fields() {
    let v = json(&["pi1", "C", "4", "4"]);
    for key in ["command", "inputs", "results", "paperAgreement", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["results"]["group"], "Z");
    assert_eq!(v["inputs"]["node"], 4);
}

#[test]
fn classify_examples() {
    let a3 = json(&["classify", "A", "3"]);
    assert_eq!(a3["results"]["orbits"][0]["passes"], true);
    assert_eq!(a3["paperAgreement"]["agrees"], true);

    let c4 = json(&["classify", "C", "4"]);
    let orbits = c4["results"]["orbits"].as_array().unwrap();
    assert_eq!(orbits[0]["length"], "Long");
    assert_eq!(orbits[0]["passes"], true);
    assert_eq!(orbits[1]["passes"], false);

    let g2 = json(&["classify", "G", "2"]);
    assert_eq!(g2["paperAgreement"]["agrees"], false);
    assert_eq!(
        g2["results"]["orbits"][1]["paperAgreement"]["agrees"],
        false
    );
}

#[test]
fn homotopy_table_examples() {
    let a4 = json(&["homotopy-table", "A", "4"]);
    let row = &a4["results"]["rows"][0]["cells"];
    assert!(row.as_array().unwrap().iter().all(|c| c["parity"] == "Odd"));

    let f4 = json(&["homotopy-table", "F", "4"]);
    let rows = f4["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert!(r["cells"]
            .as_array()
            .unwrap()
            .iter()
            .any(|c| c["parity"] == "Even"));
    }

    let b4 = json(&["homotopy-table", "B", "4"]);
    let first = b4["results"]["rows"][0]["cells"].as_array().unwrap();
    assert!(first.iter().any(|c| c["parity"] == "Even"));
}

#[test]
fn sl2_examples() {
    assert_eq!(json(&["sl2", "5"])["results"]["defining"]["degree"], 5);
    assert_eq!(json(&["sl2", "1"])["results"]["defining"]["degree"], 1);
    let ext = json(&["sl2", "3", "--k", "2"]);
    assert_eq!(ext["results"]["exterior"]["exteriorDegree"], 4);
    assert_eq!(ext["results"]["exterior"]["induced"]["degree"], 4);
}

#[test]
fn sp_example_passes() {
    let v = json(&["sp-example", "2", "--samples", "200"]);
    assert_eq!(v["results"]["passes"], true);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| liegen(args).status.code().unwrap();
    assert_eq!(code(&["sp-example", "0"]), 2);
    assert_eq!(code(&["pi1", "B", "3", "4"]), 2);
    assert_eq!(code(&["pi1", "B", "3", "0"]), 2);
    assert_eq!(code(&["classify", "E", "5"]), 2);
    assert_eq!(code(&["classify", "X", "3"]), 2);
    assert_eq!(code(&["sl2", "0"]), 2);
    assert_eq!(code(&["sl2", "3", "--k", "4"]), 2);
    assert_eq!(code(&["sl2", "4", "--samples", "16"]), 3);
    assert_eq!(code(&["--format", "yaml", "sl2", "2"]), 2);
    assert_eq!(code(&["sl2", "2"]), 0);
}

#[test]
fn errors_go_to_stderr() {
    let out = liegen(&["--format", "json", "pi1", "A", "2", "5"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn text_is_default() {
    let out = liegen(&["pi1", "A", "1", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("pi1(F) for A1"));
}
