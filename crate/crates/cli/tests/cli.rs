use std::process::{Command, Output};

use hartmann_core::QuasiPolynomial;
use serde_json::Value;

fn hartmann(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hartmann"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn spectrum_rows_and_order() {
    let doc = json(&hartmann(&["spectrum", "--eta", "1", "--sigma", "1", "--max-excitation", "1"]));
    assert_eq!(doc["command"], "spectrum");
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(f(&rows[0]["N"]), 2.0);
    assert_eq!(f(&rows[0]["E_internal"]), -0.125);
    for row in &rows[1..] {
        assert_eq!(f(&row["N"]), 3.0);
        assert!((f(&row["E_internal"]) + 1.0 / 18.0).abs() < 1e-15);
    }
}

#[test]
fn spectrum_csv_header() {
    let out = hartmann(&["spectrum", "--eta", "1", "--sigma", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("m,nu_prime,n_prime,M_abs,L,N,E_internal,E_over_eps0"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn epsilon0_units() {
    let doc = json(&hartmann(&["spectrum", "--eta", "2", "--sigma", "1.5", "--units", "epsilon0"]));
    let row = &doc["results"][0];
    // E/ε0 = -η²σ⁴/N²
    let n = f(&row["N"]);
    let expect = -(4.0 * 1.5f64.powi(4)) / (n * n);
    assert!((f(&row["energy"]) - expect).abs() <= 1e-14 * expect.abs());
    assert_eq!(row["energy"], row["E_over_eps0"]);
}

#[test]
fn invalid_flags_exit_two_and_name_flag() {
    for (args, flag) in [
        (vec!["spectrum", "--eta", "-1", "--sigma", "1"], "--eta"),
        (vec!["spectrum", "--eta", "1", "--sigma", "0"], "--sigma"),
        (vec!["spectrum", "--eta", "1", "--sigma", "1", "--max-excitation", "-2"], "--max-excitation"),
        (vec!["wavefunction", "--eta", "1", "--sigma", "1", "--nu", "-1"], "--nu"),
        (vec!["potential", "--eta", "1", "--sigma", "1", "--theta", "3.14159265358979"], "--theta"),
        (vec!["validate", "--eta", "1", "--sigma", "1", "--grid-n", "3"], "--grid-n"),
    ] {
        let out = hartmann(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains(flag), "{err}");
    }
    assert_eq!(hartmann(&["spectrum", "--eta", "1"]).status.code(), Some(2));
    assert_eq!(hartmann(&["spectrum", "--eta", "x", "--sigma", "1"]).status.code(), Some(2));
}

#[test]
fn wavefunction_ground_state_symbolic() {
    let doc = json(&hartmann(&["wavefunction", "--eta", "1", "--sigma", "1"]));
    let u = &doc["results"][0]["u"];
    assert_eq!(f(&u["alpha"]), 2.0);
    assert_eq!(f(&u["kappa"]), 0.5);
    let coeffs = u["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert!((f(&coeffs[0][1]) - 1.0 / 24f64.sqrt()).abs() < 1e-15);
}

#[test]
fn first_excited_has_two_terms_one_node() {
    let doc = json(&hartmann(&["wavefunction", "--eta", "1", "--sigma", "1", "--nprime", "1"]));
    let u: QuasiPolynomial = serde_json::from_value(doc["results"][0]["u"].clone()).unwrap();
    assert_eq!(u.term_count(), 2);
    assert_eq!(u.positive_roots().len(), 1);
}

#[test]
fn radial_function_vanishes_at_origin_for_l_one() {
    let doc = json(&hartmann(&[
        "wavefunction", "--eta", "1", "--sigma", "1", "--emit", "samples", "--samples", "5",
    ]));
    let samples = doc["results"][0]["samples"].as_array().unwrap();
    assert_eq!(f(&samples[0]["r"]), 0.0);
    assert_eq!(f(&samples[0]["R"]), 0.0);
    assert!(f(&samples[1]["R"]) > 0.0);
}

#[test]
fn symbolic_round_trip_matches_samples() {
    for args in [
        ["--m", "0", "--nu", "0", "--nprime", "2"],
        ["--m", "3", "--nu", "1", "--nprime", "1"],
    ] {
        let mut full = vec!["wavefunction", "--eta", "1.3", "--sigma", "0.8", "--emit", "both"];
        full.extend_from_slice(&args);
        let doc = json(&hartmann(&full));
        let state = &doc["results"][0];
        let u: QuasiPolynomial = serde_json::from_value(state["u"].clone()).unwrap();
        let r_fn: QuasiPolynomial = serde_json::from_value(state["R"].clone()).unwrap();
        for s in state["samples"].as_array().unwrap() {
            let r = f(&s["r"]);
            for (poly, key) in [(&u, "u"), (&r_fn, "R")] {
                let a = poly.evaluate(r).unwrap();
                let b = f(&s[key]);
                assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()), "r={r} {key}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn symbolic_csv_lists_terms() {
    let out = hartmann(&["wavefunction", "--eta", "1", "--sigma", "1", "--nprime", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "function,k,power,coefficient,kappa");
    assert_eq!(lines.len(), 5);
    let both = hartmann(&["wavefunction", "--eta", "1", "--sigma", "1", "--emit", "both", "--format", "csv"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn potential_matches_reference_point() {
    let doc = json(&hartmann(&["potential", "--eta", "1", "--sigma", "1", "--r-max", "2", "--samples", "2"]));
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(f(&rows[1]["r"]), 2.0);
    assert!((f(&rows[1]["V"]) + 0.375).abs() < 1e-15);
}

#[test]
fn potential_tail_is_coulombic() {
    let doc = json(&hartmann(&["potential", "--eta", "1", "--sigma", "1", "--r-max", "4000", "--samples", "2"]));
    let rows = doc["results"].as_array().unwrap();
    let (r1, v1) = (f(&rows[0]["r"]), f(&rows[0]["V"]));
    let (r2, v2) = (f(&rows[1]["r"]), f(&rows[1]["V"]));
    assert!(((v1 * r1) / (v2 * r2) - 1.0).abs() < 1e-3);
}

#[test]
fn outputs_are_deterministic() {
    let runs = [
        vec!["spectrum", "--eta", "0.7", "--sigma", "1.9", "--m-min", "-2", "--m-max", "2", "--max-excitation", "3"],
        vec!["wavefunction", "--eta", "1", "--sigma", "1", "--m", "2", "--nprime", "3", "--emit", "both"],
        vec!["potential", "--eta", "1", "--sigma", "1", "--format", "csv"],
    ];
    for args in runs {
        assert_eq!(hartmann(&args).stdout, hartmann(&args).stdout, "{args:?}");
    }
}

#[test]
fn meta_header_is_separate() {
    let plain = json(&hartmann(&["spectrum", "--eta", "1", "--sigma", "1"]));
    let meta = json(&hartmann(&["spectrum", "--eta", "1", "--sigma", "1", "--meta"]));
    assert!(plain.get("meta").is_none());
    assert_eq!(meta["meta"]["tool"], "hartmann-cli");
    assert_eq!(plain["results"], meta["results"]);
    let csv = hartmann(&["spectrum", "--eta", "1", "--sigma", "1", "--meta", "--format", "csv"]);
    assert!(String::from_utf8(csv.stdout).unwrap().starts_with("# tool=hartmann-cli"));
}

#[test]
fn validate_algebra_and_sabotage() {
    let ok = hartmann(&["validate", "--eta", "1", "--sigma", "1", "--m", "0", "--max-n", "3", "--suite", "algebra"]);
    let doc = json(&ok);
    let names: Vec<&str> = doc["results"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().all(|n| !n.starts_with("fd_") && !n.starts_with("isospectrality")));
    assert!(names.iter().any(|n| n.starts_with("riccati")));

    let bad = hartmann(&[
        "validate", "--eta", "1", "--sigma", "1", "--m", "0", "--max-n", "3", "--suite", "algebra", "--inject-error",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert!(doc["results"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn validate_reference_run() {
    let out = hartmann(&["validate", "--eta", "1", "--sigma", "1", "--m", "0", "--max-n", "4", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["params"]["all_passed"], true);
}
