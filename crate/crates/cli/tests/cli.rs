use std::process::{Command, Output};

use serde_json::Value;

fn numsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = numsg(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    serde_json::from_str(&stdout(&args)).unwrap()
}

#[test]
fn poly_prints_sparse_form() {
    assert_eq!(stdout(&["poly", "--gens", "5,6,7,8"]), "x^10-x^9+x^5-x+1");
    assert_eq!(
        stdout(&["poly", "--gens", "5", "6", "7", "8"]),
        "x^10-x^9+x^5-x+1"
    );
    assert_eq!(json(&["poly", "--gens", "2,3"])["polynomial"], "x^2-x+1");
}

#[test]
fn cyclotomic_json() {
    assert_eq!(
        stdout(&["cyclotomic", "--gens", "2,3", "--json"]),
        r#"{"cyclotomic":true,"factors":{"6":1}}"#
    );
    assert_eq!(
        json(&["cyclotomic", "--gens", "5,6,7,8"])["cyclotomic"],
        false
    );
    assert_eq!(
        stdout(&["cyclotomic", "--gens", "2,3"]),
        "cyclotomic: true\nfactors: Phi6"
    );
}

#[test]
fn info_of_naturals() {
    let text = stdout(&["info", "--gens", "1"]);
    assert!(text.lines().any(|l| l == "F=-1"));
    assert!(text.lines().any(|l| l == "genus=0"));
}

#[test]
fn info_json_round_trips_to_descriptors() {
    for gens in ["1", "2,3", "4,6,9", "5,6,7,8", "6,7,10,11"] {
        let v = json(&["info", "--gens", gens]);
        let d: numsg::SemigroupDescriptors = serde_json::from_value(v.clone()).unwrap();
        let list: Vec<u64> = gens.split(',').map(|x| x.parse().unwrap()).collect();
        let s = numsg::NumericalSemigroup::from_generators(&list).unwrap();
        assert_eq!(d, s.descriptors());
        // text mode carries the same values
        let text = stdout(&["info", "--gens", gens]);
        assert!(text.contains(&format!("F={}", d.frobenius)));
        assert!(text.contains(&format!("genus={}", d.genus)));
        assert_eq!(
            v["symmetry"],
            serde_json::to_value(s.symmetry_type()).unwrap()
        );
    }
}

#[test]
fn duplicates_warn() {
    let out = numsg(&["info", "--gens", "4,6,6,9"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn domain_errors_exit_65_with_name() {
    let cases: &[(&[&str], &str)] = &[
        (&["info", "--gens", "4,6"], "NotCoprime"),
        (&["poly", "--gens", "0,1"], "NonPositiveGenerator"),
        (&["poly", "--gens", "2,x"], "Parse"),
        (&["depth-height", "--gens", "5,6,7,8"], "NotCyclotomic"),
        (
            &["family", "--name", "sym1", "--params", "4,1"],
            "ParameterOutOfRange",
        ),
        (
            &["family", "--name", "binomial", "--params", "2,4,2"],
            "NotCoprime",
        ),
        (&["kronecker", "--poly", "2x+1"], "NotMonic"),
        (&["classify-height1", "--depth", "7"], "ParameterOutOfRange"),
    ];
    for (args, name) in cases {
        let out = numsg(args);
        assert_eq!(out.status.code(), Some(65), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with(name),
            "{args:?}"
        );
    }
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["bogus"][..],
        &["poly"],
        &["apery", "--gens", "3,5", "-m", "0"],
        &["family", "--name", "sym3", "--params", "1,2"],
        &["exponents", "--gens", "2,3", "--limit", "x"],
    ] {
        assert_eq!(numsg(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn structure_commands() {
    let ci = json(&["ci", "--gens", "4,6,9"]);
    assert_eq!(ci["complete_intersection"], true);
    assert_eq!(
        ci["tree"].to_string(),
        r#"{"a1":4,"a2":3,"left":"N","right":{"a1":2,"a2":3,"left":"N","right":"N"}}"#
    );
    assert_eq!(
        json(&["ci", "--gens", "5,6,7,8"])["complete_intersection"],
        false
    );

    let free = json(&["free", "--gens", "4,6,9"]);
    assert_eq!(free["free"], true);
    assert_eq!(free["frobenius"], 11);
    assert_eq!(json(&["free", "--gens", "5,6,7,8"])["free"], false);
    assert_eq!(
        json(&["free", "--gens", "4,6,9", "--arrangement", "9,6,4"])["ratios"],
        serde_json::json!([3, 3])
    );
    assert_eq!(
        numsg(&["free", "--gens", "4,6,9", "--arrangement", "4,6,11"])
            .status
            .code(),
        Some(65)
    );

    assert_eq!(
        json(&["betti", "--gens", "4,6,9"])["betti"],
        serde_json::json!([12, 18])
    );
    assert_eq!(stdout(&["apery", "--gens", "3,5", "-m", "3"]), "0,5,10");
    assert_eq!(stdout(&["pseudo-frobenius", "--gens", "3,5,7"]), "2,4");
    assert_eq!(stdout(&["denumerant", "--gens", "2,3", "-n", "12"]), "3");
}

#[test]
fn cyclotomy_commands() {
    assert_eq!(
        stdout(&["depth-height", "--gens", "2,3"]),
        "depth=6 height=1"
    );
    let e = json(&["exponents", "--gens", "2,3", "--limit", "8"]);
    assert_eq!(e["prefix"], serde_json::json!([1, -1, -1, 0, 0, 1, 0, 0]));
    assert_eq!(e["finite"], true);
    assert_eq!(
        json(&["kronecker", "--poly", "x^10-x^9+x^5-x+1"])["kronecker"],
        false
    );
    assert_eq!(
        stdout(&["hilbert", "--gens", "2,3", "--terms", "4"])
            .lines()
            .next(),
        Some("series: x^4+x^3+x^2+1")
    );
}

#[test]
fn relations_and_families() {
    let r = json(&["related", "--source", "2,3", "--target", "3,8"]);
    let ws: Vec<u64> = r["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["w"].as_u64().unwrap())
        .collect();
    assert_eq!(ws, vec![1, 2, 4]);
    assert!(r["relations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["feen"]["constant_term"] == true));

    let f = json(&["family", "--name", "sym1", "--params", "6,1"]);
    assert_eq!(f["generators"], serde_json::json!([6, 7, 10, 11]));
    assert_eq!(f["polynomial"], "x^16-x^15+x^10-x^8+x^6-x+1");
    let b = json(&["family", "--name", "binomial", "--params", "2,3,2"]);
    assert_eq!(b["generators"], serde_json::json!([4, 6, 9]));
    assert_eq!(b["frobenius_formula"], 11);
    assert_eq!(b["depth_audit"]["computed_depth"], 36);
    assert_eq!(b["depth_audit"]["next_power_depth"], 216);
}

#[test]
fn classify_height1() {
    let r = json(&["classify-height1", "--depth", "30", "--genus-bound", "20"]);
    assert_eq!(r["found"], serde_json::json!([[2, 15], [3, 10], [5, 6]]));
    assert_eq!(r["matches_prediction"], true);
}

#[test]
fn survey_writes_rows_and_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.jsonl");
    let path = out.to_str().unwrap();
    let summary = json(&["survey", "--max-frobenius", "11", "--out", path]);
    assert_eq!(summary["summary"]["disagreements"], 0);
    let rows = std::fs::read_to_string(&out).unwrap();
    assert_eq!(
        rows.lines().count() as u64,
        summary["summary"]["total"].as_u64().unwrap()
    );
    assert!(dir.path().join("rows.jsonl.checkpoint").exists());

    let again = json(&["survey", "--max-frobenius", "11", "--out", path]);
    assert_eq!(again["summary"], summary["summary"]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), rows);

    let bad = numsg(&[
        "survey",
        "--max-frobenius",
        "11",
        "--out",
        "/nonexistent/dir/rows.jsonl",
    ]);
    assert_eq!(bad.status.code(), Some(74));
}
