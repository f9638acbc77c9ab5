use std::process::Command;

use gorenstein::cli::{self, BUNDLED};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gorenstein").chain(args.iter().copied());
    let status = cli::run(argv, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn error_json(err: &str) -> Value {
    serde_json::from_str(err.lines().last().expect("an error line")).unwrap()
}

#[test]
fn bundled_scenarios_round_trip() {
    for b in BUNDLED {
        let (status, out, _) = run(&["run", b.name]);
        assert_eq!(status, 0, "{}", b.name);
        assert_eq!(
            out, b.expected,
            "{} drifted from its recorded report",
            b.name
        );
    }
}

#[test]
fn bundled_listing_is_sorted_and_filterable() {
    let names: Vec<&str> = BUNDLED.iter().map(|b| b.name).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    for required in [
        "triple_point",
        "node_cubic",
        "cusp_cubic",
        "smooth_hyperflex",
    ] {
        assert!(names.contains(&required));
    }
    assert_eq!(cli::list_bundled(None).len(), BUNDLED.len());
    assert_eq!(cli::list_bundled(Some("")).len(), BUNDLED.len());

    let (status, out, _) = run(&["list"]);
    assert_eq!(status, 0);
    assert_eq!(out.lines().count(), BUNDLED.len());
    assert!(out.lines().all(|l| l.split_whitespace().count() > 1));

    let (_, out, _) = run(&["list", "node"]);
    assert!(out.starts_with("node_cubic"));
}

#[test]
fn reports_match_worked_values() {
    let (_, out, _) = run(&["run", "triple_point", "node_cubic"]);
    let docs: Vec<Value> = serde_json::Deserializer::from_str(&out)
        .into_iter()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["total_weight"], 22);
    assert_eq!(docs[0]["extraweight"], 4);
    assert_eq!(docs[1]["total_weight"], 6);
    assert_eq!(docs[1]["per_branch_orders"], serde_json::json!([3, 3]));
}

#[test]
fn inline_sw_class() {
    let dir = std::env::temp_dir().join(format!("gorenstein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g3.json");
    std::fs::write(&path, r#"{"kind":"sw-class","g":3}"#).unwrap();
    let (status, out, _) = run(&["run", path.to_str().unwrap()]);
    assert_eq!(status, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda"], 452);
    assert_eq!(v["a0"], 48);
    assert_eq!(v["b"], serde_json::json!([124]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn precision_exhaustion_names_branch() {
    let (status, out, err) = run(&["run", "node_cubic", "--precision", "3"]);
    assert_eq!(status, 3);
    assert!(out.is_empty());
    let e = error_json(&err);
    assert_eq!(e["code"], "precision-exhausted");
    assert!(e["branch"] == "Q1" || e["branch"] == "Q2");
    assert!(e["suggested_precision"].as_u64().unwrap() > 3);
}

#[test]
fn suggested_precision_is_enough() {
    let (_, _, err) = run(&["run", "triple_point", "--precision", "10"]);
    let suggested = error_json(&err)["suggested_precision"]
        .as_u64()
        .unwrap()
        .to_string();
    let (status, out, _) = run(&["run", "triple_point", "--precision", &suggested]);
    assert_eq!(status, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total_weight"], 22);
}

#[test]
fn invalid_inputs_exit_2() {
    let dir = std::env::temp_dir().join(format!("gorenstein-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        (
            "schema",
            r#"{"kind":"singularity","r":2}"#,
            "invalid-schema",
        ),
        ("kind", r#"{"kind":"surface"}"#, "invalid-schema"),
        (
            "count",
            r#"{"kind":"singularity","r":2,"branches":[{"name":"P","multiplier":"t^2","sections":["1","t^2"]}]}"#,
            "invalid-input",
        ),
        (
            "syntax",
            r#"{"kind":"singularity","r":1,"branches":[{"name":"P","multiplier":"t^2","sections":["1","t^^2"]}]}"#,
            "invalid-input",
        ),
        (
            "constants",
            r#"{"kind":"singularity","r":1,"branches":[
                {"name":"A","variable":"z","multiplier":"z","sections":["1","z"]},
                {"name":"B","variable":"w","multiplier":"w","sections":["2","w"]}]}"#,
            "invalid-input",
        ),
        (
            "dependent",
            r#"{"kind":"singularity","r":1,"branches":[{"name":"P","multiplier":"t^2","sections":["t","2*t"]}]}"#,
            "rank-deficient",
        ),
        (
            "coprime",
            r#"{"kind":"semigroup","generators":[4,6]}"#,
            "invalid-input",
        ),
    ];
    for (name, text, code) in cases {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, text).unwrap();
        let (status, out, err) = run(&["run", path.to_str().unwrap()]);
        assert_eq!(status, 2, "{name}: {err}");
        assert!(out.is_empty(), "{name}");
        assert_eq!(error_json(&err)["code"], code, "{name}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn odd_conductor_exits_4() {
    let dir = std::env::temp_dir().join(format!("gorenstein-odd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("odd.json");
    std::fs::write(
        &path,
        r#"{"kind":"singularity","r":1,"branches":[{"name":"P","multiplier":"t^3","sections":["1","t^3"]}]}"#,
    )
    .unwrap();
    let (status, _, err) = run(&["run", path.to_str().unwrap(), "triple_point"]);
    assert_eq!(status, 4);
    assert_eq!(error_json(&err)["code"], "non-gorenstein");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn default_precision_is_raised_with_notice() {
    let dir = std::env::temp_dir().join(format!("gorenstein-raise-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("deep.json");
    std::fs::write(
        &path,
        r#"{"kind":"singularity","r":2,"branches":[{"name":"P","multiplier":"t^20","sections":["1","t^30","t^31"]}]}"#,
    )
    .unwrap();
    let (status, out, err) = run(&["run", path.to_str().unwrap()]);
    assert_eq!(status, 0);
    assert!(err.contains("notice"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["precision"].as_u64().unwrap() > 64);
    assert_eq!(v["total_weight"], v["lower_bound"].as_u64().unwrap() + 58);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn text_format() {
    let (status, out, _) = run(&["run", "cusp_cubic", "--format", "text"]);
    assert_eq!(status, 0);
    assert!(out.lines().any(|l| l == "total_weight: 8"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gorenstein");
    let ok = Command::new(bin)
        .args(["run", "sw_class_g3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        cli::bundled("sw_class_g3").unwrap().expected
    );

    let missing = Command::new(bin)
        .args(["run", "no_such_scenario"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&missing.stderr).unwrap();
    assert_eq!(e["code"], "io");

    let short = Command::new(bin)
        .args(["run", "triple_point", "--precision", "8"])
        .output()
        .unwrap();
    assert_eq!(short.status.code(), Some(3));
}
