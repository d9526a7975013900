use std::fs;
use std::process::{Command, Output};

use schubert_ic::decomposition::{ih_recursion, stalk_table};
use schubert_ic::geometry::validate;
use schubert_ic::LaurentPoly;
use schubert_ic_cli::report::poly_from_json;
use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env_remove("SCHUBERT_ENUM_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = schubert(&["validate", "2", "5", "4", "8"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("r = 2, c = 3, non-small"));

    let bad = schubert(&["validate", "1", "3", "3", "5"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("r < c violated"));

    let zero = schubert(&["validate", "0", "5", "4", "8"]);
    assert_eq!(code(&zero), 2);
    assert!(String::from_utf8_lossy(&zero.stderr).contains("0 < i violated"));

    assert_eq!(code(&schubert(&["validate", "2", "5", "4"])), 2);
    assert_eq!(code(&schubert(&["validate", "x", "5", "4", "8"])), 2);
    assert_eq!(code(&schubert(&["validate", "(2,5,4,8)"])), 0);
}

#[test]
fn extracts() {
    assert_eq!(stdout(&schubert(&["ih", "(2,5,4,8)", "-p", "1"])), "1 + t^2 + t^4 + t^6 + t^8\n");
    assert_eq!(stdout(&schubert(&["stalks", "2", "5", "4", "8", "-p", "3", "-q", "2"])), "1 + t^2\n");
    let perverse = stdout(&schubert(&["perverse", "3", "5", "5", "8"]));
    assert_eq!(perverse.lines().count(), 3);
    assert!(perverse.lines().next().unwrap().contains("i = -1"));
    let summands = schubert(&["summands", "3", "5", "5", "8", "-p", "3"]);
    assert_eq!(code(&summands), 0);
    assert!(stdout(&summands).contains("q = 2, delta = 1: x1 at -1, x1 at 1"));
}

#[test]
fn bad_selectors_exit_2() {
    assert_eq!(code(&schubert(&["ih", "2", "5", "4", "8", "-p", "4"])), 2);
    assert_eq!(code(&schubert(&["ih", "2", "5", "4", "8", "-p", "0"])), 2);
    assert_eq!(code(&schubert(&["stalks", "2", "5", "4", "8", "-p", "2", "-q", "2"])), 2);
    assert_eq!(code(&schubert(&["stalks", "2", "5", "4", "8", "-q", "9"])), 2);
    assert_eq!(code(&schubert(&["summands", "2", "5", "4", "8", "-p", "7"])), 2);
}

#[test]
fn ring_products() {
    let run = |a: &str, b: &str| schubert(&["ring", "--rows", "2", "--cols", "2", "mult", a, b]);
    assert_eq!(stdout(&run("1", "1")), "σ_(2) + σ_(1,1)\n");
    assert_eq!(stdout(&run("2,2", "1")), "0\n");
    assert_eq!(code(&run("3", "1")), 2);
    assert_eq!(code(&run("1,2", "1")), 2);
    assert_eq!(code(&run("a", "1")), 2);
    let pieri = schubert(&["ring", "--rows", "2", "--cols", "3", "pieri-row", "1", "2"]);
    assert_eq!(stdout(&pieri), "σ_(3) + σ_(2,1)\n");
    let col = schubert(&["ring", "--rows", "3", "--cols", "1", "pieri-col", "1", "2"]);
    assert_eq!(stdout(&col), "σ_(1,1,1)\n");
}

#[test]
fn analyze_json_matches_engine() {
    let out = schubert(&["analyze", "2", "5", "4", "8", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["schema", "input", "strata", "pairs", "h", "ih", "summands", "perverse", "stalks", "checks"]
    );
    assert_eq!(v["input"]["regime"], "non-small");

    let expected: Value = serde_json::from_str(
        "[[0,1],[2,2],[4,4],[6,5],[8,7],[10,7],[12,7],[14,5],[16,4],[18,2],[20,1]]",
    )
    .unwrap();
    assert_eq!(v["ih"]["2"], expected);

    // round trip against the engine
    let s = validate(2, 5, 4, 8).unwrap();
    let table = ih_recursion(&s);
    for p in 1..=s.strata() {
        let key = p.to_string();
        assert_eq!(&poly_from_json(&v["ih"][&key]).unwrap(), table.ih(p));
        assert_eq!(&poly_from_json(&v["h"][&key]).unwrap(), table.h(p));
        for q in 1..p {
            let stalk: LaurentPoly = poly_from_json(&v["stalks"][format!("{p},{q}")]).unwrap();
            assert_eq!(stalk, stalk_table(&s, p, q).unwrap());
        }
    }
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == "pass"));
}

#[test]
fn analyze_negative_perverse_shifts() {
    let out = schubert(&["analyze", "3", "5", "5", "8", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v["perverse"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["-1", "0", "1"]);
    assert_eq!(v["perverse"]["0"][0][0], "IC_S");
    assert_eq!(v["summands"]["3"][1]["mults"]["-1"], 1);
}

#[test]
fn analyze_formats_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.tex");
    let out = schubert(&["analyze", "2", "5", "4", "8", "--format", "latex", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let tex = fs::read_to_string(&path).unwrap();
    let ih_block = tex.split("% intersection cohomology").nth(1).unwrap();
    let body = ih_block.split("\\hline").nth(1).unwrap().split("\\end{tabular}").next().unwrap();
    assert_eq!(body.trim().lines().count(), 3);
    assert_eq!(tex.matches("\\begin{tabular}").count(), tex.matches("\\end{tabular}").count());

    let text = stdout(&schubert(&["analyze", "2", "5", "4", "8"]));
    assert!(text.contains("I_2 = 1 + 2*t^2 + 4*t^4"));

    let unwritable = dir.path().join("missing").join("x.json");
    let out = schubert(&["analyze", "2", "5", "4", "8", "--out", unwritable.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
    assert_eq!(code(&schubert(&["analyze", "1", "3", "3", "5"])), 2);
}

#[test]
fn verify_small_sweeps() {
    let eight = schubert(&["verify", "--max-l", "8"]);
    assert_eq!(code(&eight), 0);
    assert!(stdout(&eight).contains("inputs with l <= 8: 46 (16 non-small, 30 all-small)"));

    let four = schubert(&["verify", "--max-l", "4"]);
    assert_eq!(code(&four), 0);
    assert!(stdout(&four).contains("note: no non-small inputs exist with l <= 4"));
}

#[test]
fn verify_csv_and_fault() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("log.csv");
    let p = path.to_str().unwrap();
    let out = schubert(&["verify", "--max-l", "8", "--csv", p, "--inject-fault", "gaussian-recurrence"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("FAIL kernel gaussian_vs_enumeration"));

    let mut rdr = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["i", "j", "k", "l", "check", "status", "detail"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert!(rows.iter().any(|r| &r[5] == "fail" && &r[4] == "gaussian_factors" && &r[0] == "1"));
    // input rows come in (l, k, j, i) order
    let keys: Vec<(i64, i64, i64, i64)> = rows
        .iter()
        .filter(|r| !r[0].is_empty())
        .map(|r| (r[3].parse().unwrap(), r[2].parse().unwrap(), r[1].parse().unwrap(), r[0].parse().unwrap()))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));

    let missing = dir.path().join("nope").join("log.csv");
    assert_eq!(code(&schubert(&["verify", "--max-l", "5", "--csv", missing.to_str().unwrap()])), 4);
}

#[test]
fn enum_limit_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["verify", "--max-l", "6"])
        .env("SCHUBERT_ENUM_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).contains(" 0 skipped"));

    let bad = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["verify", "--max-l", "6"])
        .env("SCHUBERT_ENUM_LIMIT", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 2);
}
