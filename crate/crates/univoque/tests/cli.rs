use std::process::{Command, Output};

use serde_json::Value;

fn univoque(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_univoque"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = univoque(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_owned).collect()
}

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/response.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = univoque(&full);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let errors: Vec<String> = schema().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}\n{v}");
    (v, out.status.code().unwrap())
}

#[test]
fn expand_golden_ratio() {
    assert_eq!(lines(&["expand", "--x", "1", "--base", "(10)", "--digits", "6", "--quasi"]), ["101010"]);
    assert_eq!(lines(&["expand", "--x", "1", "--base", "G", "--digits", "6"]), ["110000"]);
    assert_eq!(
        lines(&["expand", "--x", "q^(-1)+q^(-2)+q^(-3)", "--base", "[-1,-1,1]", "--digits", "6", "--quasi"]),
        ["110101"]
    );
}

#[test]
fn smallest_univoque_prefixes() {
    assert_eq!(lines(&["smallest-univoque", "--n", "2", "--digits", "8"])[0], "21020121");
    let out = lines(&["smallest-univoque", "--n", "1", "--digits", "8"]);
    assert_eq!(out[0], "11010011");
    assert!(out[1].starts_with("[1.787"), "{out:?}");
}

#[test]
fn forbidden_blocks_one_per_line() {
    assert_eq!(lines(&["sft", "--q", "(1100)"]), ["011", "100"]);
    assert_eq!(lines(&["sft-member", "--c", "(10)", "--q", "(1100)"]), ["true"]);
    assert_eq!(lines(&["sft-member", "--c", "0(1100)", "--q", "(1100)"]), ["false"]);
}

#[test]
fn classification() {
    assert_eq!(lines(&["classify-base", "--alpha", "(1110)"]), ["ClosureOnly alpha=(1110)"]);
    assert_eq!(lines(&["classify-base", "--alpha", "(10)"]), ["VOnly alpha=(10) k=1"]);
    assert!(lines(&["classify-base", "--value", "9/5"])[0].starts_with("OutsideV"));
    assert_eq!(lines(&["classify-base", "--value", "2"]), ["Univoque alpha=(1) integer"]);
    let (v, _) = json(&["classify-point", "--a", "(10)", "--alpha", "(110)"]);
    assert_eq!(v["result"]["count"], "One");
}

#[test]
fn components_and_endpoints() {
    assert_eq!(lines(&["endpoints", "--left", "G"]), ["((10), (1100)]"]);
    assert_eq!(lines(&["endpoints", "--right", "(11010010)"]), ["((1100), (11010010)]"]);
    assert_eq!(lines(&["endpoints", "--left", "2"]), ["(2, (20)]"]);
    assert_eq!(lines(&["stability", "--q", "(1110)"]), ["{(1110)}"]);
    assert_eq!(lines(&["stability", "--q", "1.7"]), ["((10), (1100)]"]);
    let d = lines(&["double", "--seed", "1", "--k", "3"]);
    assert_eq!(d, ["1101001100101101", "(1100)", "(11010010)", "(1101001100101100)"]);
}

#[test]
fn cardinality_and_topology() {
    assert_eq!(lines(&["cardinality", "--q", "3/2"]), ["EndpointsOnly"]);
    assert_eq!(lines(&["cardinality", "--q", "5/2"]), ["CountablyInfinite"]);
    assert_eq!(lines(&["cardinality", "--q", "1.9"]), ["Continuum"]);
    assert_eq!(lines(&["topology", "--q", "(1100)", "--point", "(10)"]), ["base: IsolatedDense", "point: Isolated"]);
}

#[test]
fn oracle_leaves() {
    let leaves = lines(&["oracle", "--x", "1", "--base", "G", "--depth", "6"]);
    assert_eq!(leaves, ["011111", "100111", "101001", "101010", "101011", "101100", "110000"]);
    assert_eq!(lines(&["oracle", "--x", "1", "--base", "G", "--depth", "6", "--count-only"]), ["7"]);
}

#[test]
fn printed_sequences_parse_back() {
    for s in lines(&["double", "--seed", "2", "--k", "2"]).iter().skip(1) {
        let again = lines(&["classify-base", "--alpha", s]);
        assert!(again[0].starts_with("VOnly"), "{s}: {again:?}");
        assert!(again[0].contains(s.as_str()));
    }
    let fam = lines(&["expansions-of-one", "--alpha", "(110)", "--materialize", "1"]);
    for m in fam.iter().filter(|l| l.contains('(') && !l.starts_with("alpha") && !l.starts_with("family")) {
        let r = univoque(&["sft-member", "--c", m, "--q", "(110)"]);
        assert_ne!(r.status.code(), Some(2), "{m} did not parse");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(univoque(&["expand", "--x", "5", "--base", "G"]).status.code(), Some(1));
    assert_eq!(univoque(&["expand", "--x", "1", "--base", "(1x)"]).status.code(), Some(2));
    assert_eq!(univoque(&["no-such-command"]).status.code(), Some(2));
    // no finite forbidden set at a base of closure(U)
    assert_eq!(univoque(&["sft", "--q", "(1110)"]).status.code(), Some(1));
    assert_eq!(univoque(&["sft", "--q", "(1100)"]).status.code(), Some(0));
    let (v, code) = json(&["expand", "--x", "5", "--base", "G"]);
    assert_eq!((v["error"]["code"].as_str(), code), (Some("OutOfRange"), 1));
    // well formed but not an expansion of 1: a domain error
    let (v, code) = json(&["classify-base", "--alpha", "(01)"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("domain"), 1));
    let (v, code) = json(&["classify-base", "--alpha", "(0a)"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("parse"), 2));
}

#[test]
fn json_matches_schema() {
    let runs: &[&[&str]] = &[
        &["expand", "--x", "1", "--base", "(10)", "--digits", "6", "--quasi"],
        &["classify-base", "--alpha", "(11010010)"],
        &["classify-base", "--value", "9/5"],
        &["classify-point", "--a", "(10)", "--alpha", "(1100)"],
        &["expansions-of-one", "--alpha", "(10)", "--materialize", "2"],
        &["endpoints", "--left", "G"],
        &["stability", "--q", "(1110)"],
        &["stability", "--q", "1.7"],
        &["component", "--q", "1.85", "--closure"],
        &["double", "--seed", "1", "--k", "2"],
        &["smallest-univoque", "--n", "1", "--digits", "8", "--depth", "2"],
        &["sft", "--q", "(1100)"],
        &["sft-member", "--c", "0110", "--q", "1.8"],
        &["topology", "--q", "(1100)", "--point", "(10)"],
        &["cardinality", "--q", "5/2"],
        &["oracle", "--x", "1", "--base", "G", "--depth", "4"],
        &["constants", "--depth", "2"],
        &["expand", "--x", "1", "--base", "q'"],
    ];
    for args in runs {
        let (v, _) = json(args);
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn batch_mode() {
    let dir = std::env::temp_dir().join(format!("univoque-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cmds.txt");
    std::fs::write(
        &file,
        "# comment\nexpand --x 1 --base \"(10)\" --digits 6 --quasi\n\nsft --q '(1100)'\n",
    )
    .unwrap();
    let path = file.to_str().unwrap();
    assert_eq!(lines(&["--batch", path]), ["101010", "011", "100"]);
    let out = univoque(&["--json", "--batch", path]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(v.len(), 2);
    assert!(v.iter().all(|x| schema().is_valid(x)));
    std::fs::write(&file, "expand --x 9 --base G\nbogus\n").unwrap();
    assert_eq!(univoque(&["--batch", path]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
