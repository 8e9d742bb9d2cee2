use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn presentation(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".txt").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn check_on_the_labeled_example_passes() {
    let o = run(&["check", "--fixture", "ex-labeled"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("hom_dim(a7^-1 a8, a8 a6^-1) = 2"));
}

#[test]
fn three_arrows_out_of_a_vertex_fail_validation() {
    let f = presentation("vertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n");
    let o = run(&["validate", "-i", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("S1"));
}

#[test]
fn syntax_errors_exit_with_four() {
    let f = presentation("vertices 1\narow a: 1 -> 1\n");
    let o = run(&["validate", "-i", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn missing_files_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("absent.txt");
    let o = run(&["validate", "-i", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn geometric_verification_on_g1() {
    let o = run(&["sttilt", "--fixture", "g1", "--verify-geometric"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["geometric"]["agree"], true);
    assert_eq!(v["geometric"]["algebraic"], v["geometric"]["geometric"]);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 12);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["surface", "--fixture", "ex-labeled"][..],
        &["sttilt", "--fixture", "a3"][..],
        &["arcs", "--fixture", "ex-labeled", "a1 a2"][..],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)));
    }
}

#[test]
fn hom_and_crossings_of_the_labeled_example() {
    let o = run(&["hom", "--fixture", "ex-labeled", "a8 a6^-1", "a7^-1 a8"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["cross", "--fixture", "ex-labeled", "a7^-1 a8", "a8 a6^-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["cForward"].as_u64(), v["cBackward"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn signs_round_trip_through_a_file() {
    let o = run(&["signs", "--fixture", "ex-labeled"]);
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(&o.stdout).unwrap();
    let a = run(&[
        "split",
        "--fixture",
        "ex-labeled",
        "--signs",
        f.path().to_str().unwrap(),
    ]);
    let b = run(&["split", "--fixture", "ex-labeled"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_presentations_are_accepted() {
    let o = run(&["surface", "--fixture", "g1"]);
    assert_eq!(o.status.code(), Some(0));
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(br#"{"vertices":["1","2"],"arrows":[{"name":"a","source":"1","target":"2"}],"relations":[]}"#)
        .unwrap();
    let o = run(&["strings", "-i", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn unknown_flags_are_rejected() {
    let o = run(&["strings", "--fixture", "g1", "--bogus"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["strings", "--fixture", "g1", "--max-string-length", "0"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn format_flag_overrides_the_extension() {
    let mut f = tempfile::Builder::new().suffix(".txt").tempfile().unwrap();
    f.write_all(br#"{"vertices":["1"],"arrows":[],"relations":[]}"#)
        .unwrap();
    let path = f.path().to_str().unwrap();
    assert_eq!(run(&["validate", "-i", path]).status.code(), Some(4));
    assert_eq!(
        run(&["validate", "-i", path, "--format", "json"]).status.code(),
        Some(0)
    );
}

#[test]
fn validate_draws_the_quiver() {
    let o = run(&["validate", "--fixture", "g1", "--emit", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("digraph quiver"));
}

#[test]
fn help_succeeds() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sttilt"));
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/../../docs/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn emitted_documents_match_their_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("classification", &["validate", "--fixture", "ex-labeled"]),
        ("signs", &["signs", "--fixture", "ex-labeled"]),
        ("split", &["split", "--fixture", "ex-labeled"]),
        ("surface", &["surface", "--fixture", "ex-labeled"]),
        ("surface", &["surface", "--fixture", "g2"]),
        ("arc", &["arcs", "--fixture", "ex-labeled", "a1 a2"]),
        ("arc", &["arcs", "--fixture", "g1", "e(1)+", "--kind", "r"]),
        (
            "crossings",
            &[
                "cross",
                "--fixture",
                "ex-labeled",
                "a7^-1 a8",
                "a8 a6^-1",
                "--kind",
                "r",
            ],
        ),
        ("ar", &["ar", "--fixture", "not-commutative", "b c d^-1 e^-1"]),
        ("sttilt", &["sttilt", "--fixture", "g2", "--verify-geometric"]),
        (
            "sttilt",
            &["sttilt", "--fixture", "ex-labeled", "--max-string-length", "4"],
        ),
        ("check", &["check", "--fixture", "g1", "--emit", "json"]),
    ];
    for (name, args) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let v = schema(name);
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn presentation_schema_accepts_the_json_grammar() {
    let doc = serde_json::json!({
        "vertices": ["1", "2"],
        "arrows": [{"name": "a", "source": "1", "target": "2"}],
        "relations": []
    });
    assert!(schema("presentation").is_valid(&doc));
    let f = presentation("vertices 1\n");
    let o = run(&["validate", "-i", f.path().to_str().unwrap()]);
    assert!(schema("classification").is_valid(&serde_json::from_str(&stdout(&o)).unwrap()));
}
