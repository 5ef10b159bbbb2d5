use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, None)
}

fn run_env(args: &[&str], max_terms: Option<&str>) -> (i32, String, String) {
    let mut argv = vec!["cp2q"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cp2q::run(argv, max_terms.map(String::from), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dirac_table_example() {
    let (code, out, _) = run(&["spectrum", "dirac", "--n-max", "2", "--q", "1/2"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.starts_with("A+") && l.split_whitespace().nth(1) == Some("1")).unwrap();
    assert!(row.contains("sqrt(2*[1]*[3]/[2])"), "{row}");
    assert!(row.contains("2.04939015319"));
    assert_eq!(row.split_whitespace().last(), Some("8"));
    let minus = out.lines().find(|l| l.starts_with("A-") && l.split_whitespace().nth(1) == Some("1")).unwrap();
    assert!(minus.contains("-sqrt(2*[1]*[3]/[2])"));
}

#[test]
fn golden_files() {
    for (args, file) in [
        (&["spectrum", "dirac", "--n-max", "2", "--q", "1/2"][..], "spectrum_dirac_n2.json"),
        (&["pairing", "matrix"][..], "pairing_matrix.json"),
    ] {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let (code, out, _) = run(&a);
        assert_eq!(code, 0);
        let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
        assert_eq!(out, std::fs::read_to_string(path).unwrap(), "{file}");
    }
}

#[test]
fn pairing_matrix_and_inverse() {
    let v = json(&["pairing", "matrix"]);
    assert_eq!(v["matrix"], serde_json::json!([[1, 1, 1], [0, -1, 1], [0, 0, 1]]));
    assert_eq!(v["inverse"], serde_json::json!([[1, 1, -2], [0, -1, 1], [0, 0, 1]]));
    assert_eq!(v["determinant"], -1);
}

#[test]
fn equivariant_pairing_is_a_power_of_q() {
    let (code, out, _) = run(&["pairing", "equivariant", "-N", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "value: q^-4"), "{out}");
    let v = json(&["pairing", "equivariant", "-N", "-1"]);
    assert_eq!(v["value"], "q^2");
    assert_eq!(v["matches_expected"], true);
}

#[test]
fn pairing_records() {
    let c = json(&["pairing", "charge", "-N", "-1", "--q", "3/10"]);
    for key in ["pairing", "N", "q0", "cutoff", "raw", "nearest_integer", "residual", "certified"] {
        assert!(c.get(key).is_some(), "missing {key}");
    }
    assert_eq!(c["nearest_integer"], -1);
    assert_eq!(c["certified"], true);
    assert_eq!(c["q0"], "3/10");
    let r = json(&["pairing", "rank", "-N", "2"]);
    assert_eq!((r["raw"].as_f64(), r["certified"].as_bool()), (Some(1.0), Some(true)));
    let i = json(&["pairing", "instanton-ref", "-N", "2", "--cutoff", "8"]);
    assert_eq!(i["reference"], 3);
    assert_eq!(i["certified"], false);
}

#[test]
fn uncertified_cutoff_is_a_verification_failure() {
    let (code, out, err) = run(&["pairing", "charge", "-N", "1", "--cutoff", "6"]);
    assert_eq!(code, cp2q::EXIT_VERIFICATION);
    assert!(out.contains("false") && err.contains("verification failed"));
    assert_eq!(run(&["pairing", "charge", "-N", "1", "--cutoff", "80"]).0, 0);
}

#[test]
fn every_subcommand_has_versioned_json() {
    let cases: &[&[&str]] = &[
        &["relations", "verify", "--max-degree", "3", "--samples", "2"],
        &["projection", "build", "-N", "-1"],
        &["projection", "verify", "-N", "1"],
        &["projection", "dump", "-N", "1"],
        &["haar", "--expr", "p[3][3]"],
        &["spectrum", "dirac", "--n-max", "1"],
        &["spectrum", "laplacian", "-N", "2", "--n-max", "2"],
        &["spectrum", "asymmetry", "-N", "2"],
        &["spectrum", "summability", "--epsilon", "1"],
        &["pairing", "rank", "-N", "0"],
        &["pairing", "charge", "-N", "1"],
        &["pairing", "matrix"],
        &["pairing", "equivariant", "-N", "1"],
        &["pairing", "instanton-ref", "-N", "1", "--cutoff", "6"],
        &["chern", "q2", "-N", "3"],
        &["chern", "q4", "-N", "-2"],
        &["calculus", "dbar", "--expr", "p[1][1]"],
        &["calculus", "del", "--expr", "p[1][1]"],
        &["calculus", "decompose", "--expr", "p[1][3]"],
        &["calculus", "j-check", "--expr", "p[2][1]"],
    ];
    for args in cases {
        let v = json(args);
        let schema = v["schema"].as_str().unwrap();
        assert!(schema.starts_with("cp2q."), "{args:?}");
        assert_eq!(v["schema_version"], cp2q::output::SCHEMA_VERSION, "{args:?}");
        assert_eq!(v["passed"], true, "{args:?}");
    }
}

#[test]
fn form_tags() {
    let v = json(&["calculus", "dbar", "--expr", "p[2][3]"]);
    let tags: Vec<&str> = v["forms"].as_array().unwrap().iter().map(|f| f["tag"].as_str().unwrap()).collect();
    assert_eq!(tags, ["deg00", "deg01+", "deg01-", "deg02"]);
    assert_eq!(v["dbar_squared_zero"], true);
    assert_eq!(v["forms"][3]["components"][0], "0");
}

#[test]
fn spectrum_columns_and_csv() {
    let (code, out, _) = run(&["spectrum", "laplacian", "-N", "1", "--n-max", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["family", "n", "closed_form", "eigenvalue_exact", "eigenvalue_at_q0", "multiplicity"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][5], "null");
    // λ_{0,1} = [2][1] = q + q^-1 at q = 1/2
    assert_eq!(&rows[0][4], "2.5");
    let v = json(&["spectrum", "dirac", "--n-max", "1"]);
    assert_eq!(v["entries"][0]["multiplicity"], 1);
    assert_eq!(v["entries"][1]["multiplicity"], 8);
    assert_eq!(v["entries"][3]["multiplicity"], 10);
}

#[test]
fn exact_values_parse_back() {
    use cp2q_core::qscalar::text::parse_scalar;
    let v = json(&["haar", "--expr", "p[3][3]"]);
    let x = parse_scalar(v["value_exact"].as_str().unwrap()).unwrap();
    assert_eq!(x, parse_scalar("1/(1 + q^2 + q^4)").unwrap());
    let d = json(&["spectrum", "dirac", "--n-max", "2"]);
    for e in d["entries"].as_array().unwrap() {
        let a = parse_scalar(e["eigenvalue_exact"].as_str().unwrap()).unwrap();
        let b = parse_scalar(e["closed_form"].as_str().unwrap()).unwrap();
        assert!(a.compare(&b).holds(), "{e}");
    }
}

#[test]
fn parse_errors_carry_spans() {
    let (code, out, err) = run(&["haar", "--expr", "p[1][2] u[4][1]"]);
    assert_eq!(code, cp2q::EXIT_PARSE);
    assert!(out.is_empty());
    let caret = err.lines().last().unwrap();
    let col = caret.find('^').unwrap() - "  | ".len();
    assert_eq!(&"p[1][2] u[4][1]"[col..col + 1], "4", "{err}");
    assert_eq!(run(&["pairing", "rank"]).0, cp2q::EXIT_PARSE);
    assert_eq!(run(&["pairing", "charge", "-N", "1", "--q", "5/4"]).0, cp2q::EXIT_PARSE);
    assert_eq!(run(&["pairing", "charge", "-N", "1", "--tol", "0"]).0, cp2q::EXIT_PARSE);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn resource_ceiling() {
    let (code, _, err) = run_env(&["projection", "verify", "-N", "2"], Some("3"));
    assert_eq!(code, cp2q::EXIT_RESOURCE, "{err}");
    assert_eq!(run_env(&["pairing", "rank", "-N", "1"], Some("lots")).0, cp2q::EXIT_PARSE);
}

#[test]
fn output_is_deterministic() {
    let args = ["relations", "verify", "--max-degree", "3", "--seed", "17", "--format", "json"];
    assert_eq!(run(&args).1, run(&args).1);
    let a = run(&["relations", "verify", "--max-degree", "3", "--seed", "1", "--format", "json"]).1;
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 1);
    assert_eq!(v["overlaps_unresolved"], 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cp2q");
    let ok = Command::new(bin).args(["chern", "q4", "-N", "2", "--format", "json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["matches_closed_form"], true);
    let limited = Command::new(bin)
        .args(["projection", "verify", "-N", "1"])
        .env(cp2q::MAX_TERMS_VAR, "2")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(cp2q::EXIT_RESOURCE));
    let bad = Command::new(bin).args(["calculus", "del", "--expr", "u[1]["]).output().unwrap();
    assert_eq!(bad.status.code(), Some(cp2q::EXIT_PARSE));
}
