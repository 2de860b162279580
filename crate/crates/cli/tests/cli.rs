use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use dircyc::approximant::ApproximantResult;
use dircyc::classify::ClassificationReport;
use dircyc::prooflab::QExperimentReport;
use dircyc_cli::{FactorReport, ZerosReport};
use serde_json::Value;
use tempfile::tempdir;

fn dircyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dircyc"))
        .args(args)
        .output()
        .expect("failed to run dircyc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(path).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = dircyc(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

/// Parses `text` into `T` and checks that re-serializing gives the same JSON.
fn round_trip<T>(text: &str) -> T
where
    T: serde::de::DeserializeOwned + serde::Serialize,
{
    let typed: T = serde_json::from_str(text).unwrap();
    let again: Value = serde_json::to_value(&typed).unwrap();
    assert_eq!(again, serde_json::from_str::<Value>(text).unwrap());
    typed
}

#[test]
fn norm_matches_golden() {
    assert_eq!(
        ok(&["norm", "-p", "2 - z1 - z2", "--alpha", "2,-1"]),
        golden("norm_model.txt")
    );
}

#[test]
fn leading_minus_is_an_expression_not_a_flag() {
    assert_eq!(
        ok(&["norm", "-p", "-z1^2", "--alpha", "0"]),
        "alpha 0\niso 1\naniso 1\niso2x 1\n"
    );
}

#[test]
fn scan_matches_golden() {
    assert_eq!(
        ok(&["scan", "-p", "1 - z1", "--alpha", "1,0", "--nmax", "5"]),
        golden("scan_one_minus_z1.csv")
    );
}

#[test]
fn recurrence_matches_golden() {
    assert_eq!(
        ok(&["recurrence", "-p", "1", "--kmax", "1", "--lmax", "2"]),
        golden("recurrence_one.csv")
    );
}

#[test]
fn scan_rows_are_sorted_and_non_increasing() {
    let text = ok(&[
        "scan",
        "-p",
        "3 + z1*z2 - z2",
        "--alpha",
        "2.5,-1,0.5,1",
        "--nmax",
        "12",
    ]);
    let rows: Vec<(f64, usize, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            (c[0].parse().unwrap(), c[1].parse().unwrap(), c[4].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 4 * 13);
    for w in rows.windows(2) {
        assert!((w[0].0, w[0].1) < (w[1].0, w[1].1));
        if w[0].0 == w[1].0 {
            assert!(w[1].2 <= w[0].2, "{w:?}");
        }
    }
}

#[test]
fn polynomial_json_input_matches_expression() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(
        &path,
        r#"{"bidegree":[1,1],"coeffs":[{"k":0,"l":0,"re":2,"im":0},{"k":1,"l":0,"re":-1,"im":0},{"k":0,"l":1,"re":-1,"im":0}]}"#,
    )
    .unwrap();
    let a = ok(&["norm", "--poly-json", path.to_str().unwrap(), "--alpha", "2,-1"]);
    assert_eq!(a, golden("norm_model.txt"));
}

#[test]
fn opa_solves_the_one_by_one_system() {
    let text = ok(&["opa", "-p", "2 - z1 - z2", "--alpha", "0", "--basis", "total:0"]);
    let r: ApproximantResult = round_trip(&text);
    assert!((r.distance_sq - 1.0 / 3.0).abs() <= 1e-12);
    assert!((r.p.coeff(0, 0).re - 1.0 / 3.0).abs() <= 1e-12);
    let text = ok(&["opa", "-p", "1 - z1*z2", "--alpha", "1.5", "--basis", "bidegree:3,3"]);
    let _: ApproximantResult = round_trip(&text);
}

#[test]
fn zeros_reports_reflection_witness() {
    let text = ok(&["zeros", "-p", "1 - z1*z2"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["torus"], "infinite");
    assert_eq!(v["witness"], "proportional_reflection");
    let r: ZerosReport = round_trip(&text);
    assert!(!r.bidisk_check.zero_found());

    let text = ok(&["zeros", "-p", "2 - z1 - z2"]);
    let r: ZerosReport = round_trip(&text);
    let pts = r.torus.unwrap().points().to_vec();
    assert_eq!(pts.len(), 1);
    assert!((pts[0].0.re - 1.0).abs() < 1e-6 && (pts[0].1.re - 1.0).abs() < 1e-6);

    let v: Value = serde_json::from_str(&ok(&["zeros", "-p", "z1 - 0.5"])).unwrap();
    assert_eq!(v["bidisk_check"]["bidisk"], "zero_found");
}

#[test]
fn classify_reports_the_certificate() {
    let text = ok(&["classify", "-p", "2 - z1 - z2", "--alpha", "3", "--nmax", "40"]);
    let r: ClassificationReport = round_trip(&text);
    assert_eq!(r.predicted.label(), "not_cyclic");
    assert!((r.certificate.unwrap() - 0.779697).abs() < 1e-6);
    assert_eq!(r.consistent, Some(true));
    r.check().unwrap();
}

#[test]
fn classify_lists_one_report_per_alpha() {
    let text = ok(&["classify", "-p", "z1 - 2", "--alpha", "0.5,3", "--nmax", "10"]);
    let rs: Vec<ClassificationReport> = round_trip(&text);
    assert_eq!(rs.len(), 2);
    assert!(rs.iter().all(|r| r.predicted.label() == "cyclic"));
}

#[test]
fn classify_applies_the_product_rule_to_factors() {
    let text = ok(&[
        "classify",
        "--factor",
        "z1 - 2",
        "--factor",
        "2 - z1 - z2",
        "--alpha",
        "3",
        "--nmax",
        "12",
    ]);
    let r: FactorReport = round_trip(&text);
    assert_eq!(r.factors.len(), 2);
    assert_eq!(r.predicted.label(), "not_cyclic");
    let text = ok(&[
        "classify", "--factor", "z1 - 2", "--factor", "3 - z2", "--alpha", "3", "--nmax", "12",
    ]);
    let r: FactorReport = round_trip(&text);
    assert_eq!(r.predicted.label(), "cyclic");
}

#[test]
fn qsmooth_writes_report_and_coefficients() {
    let dir = tempdir().unwrap();
    let qhat = dir.path().join("qhat.csv");
    let text = ok(&[
        "qsmooth",
        "-p",
        "3 - z1 - z2",
        "--exponent",
        "1",
        "--grid",
        "64",
        "--qhat",
        qhat.to_str().unwrap(),
    ]);
    let r: QExperimentReport = round_trip(&text);
    assert!(r.torus_zeros.is_empty());
    assert!(r.neg_freq_energy_fraction < 1e-10);
    let csv = fs::read_to_string(&qhat).unwrap();
    assert_eq!(csv.lines().next(), Some("k,l,modulus"));
    assert_eq!(csv.lines().count(), 1 + 32 * 32);

    let text = ok(&[
        "qsmooth",
        "-p",
        "2 - z1 - z2",
        "--zero",
        "1,1",
        "--exponent",
        "2",
        "--grid",
        "64",
    ]);
    let r: QExperimentReport = round_trip(&text);
    assert_eq!(r.torus_zeros.len(), 1);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("norm.txt");
    let o = dircyc(&[
        "norm",
        "-p",
        "2 - z1 - z2",
        "--alpha",
        "2,-1",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(out).unwrap(), golden("norm_model.txt"));
}

#[test]
fn config_overrides_tolerances() {
    let dir = tempdir().unwrap();
    let cfg = dir.path().join("tol.toml");
    fs::write(&cfg, "bidisk.delta = 0.01\ntorus.circle_tol = 1e-7\n").unwrap();
    let v: Value = serde_json::from_str(&ok(&["zeros", "-p", "1 - z1*z2", "--config", cfg.to_str().unwrap()])).unwrap();
    assert_eq!(v["bidisk_check"]["grid"]["delta"], 0.01);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "classify",
        "-p",
        "3 + z1*z2 - z2",
        "--alpha",
        "0.5,1.5,2.5",
        "--nmax",
        "15",
    ];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| dircyc(args).status.code();
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["norm", "--help"]), Some(0));
    assert_eq!(code(&["norm", "-p", "z1"]), Some(1));
    assert_eq!(
        code(&["opa", "-p", "z1", "--alpha", "1", "--basis", "square:3"]),
        Some(1)
    );
    assert_eq!(code(&["norm", "-p", "2 - z1 +", "--alpha", "1"]), Some(2));
    assert_eq!(code(&["qsmooth", "-p", "2 - z1 - z2", "--zero", "1"]), Some(2));

    let dir = tempdir().unwrap();
    let bad_json = dir.path().join("bad.json");
    fs::write(&bad_json, "{\"bidegree\":[0,0]").unwrap();
    assert_eq!(
        code(&["norm", "--poly-json", bad_json.to_str().unwrap(), "--alpha", "1"]),
        Some(2)
    );
    let bad_cfg = dir.path().join("bad.toml");
    fs::write(&bad_cfg, "torus.no_such_key = 1\n").unwrap();
    assert_eq!(
        code(&["zeros", "-p", "z1", "--config", bad_cfg.to_str().unwrap()]),
        Some(2)
    );

    // Infinitely many torus zeros: no quotient to sample.
    assert_eq!(code(&["qsmooth", "-p", "1 - z1*z2", "--grid", "64"]), Some(3));
    assert_eq!(code(&["qsmooth", "-p", "3 - z1 - z2", "--grid", "100"]), Some(3));
    assert_eq!(code(&["classify", "-p", "0", "--alpha", "1"]), Some(3));
}

#[test]
fn inconclusive_classification_still_writes_the_report() {
    // The root sits 1e-7 outside the searched disk: too close to exclude a
    // zero, too far to certify one.
    let dir = tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = dircyc(&[
        "classify",
        "-p",
        "z1 - 0.9990001",
        "--alpha",
        "1",
        "--nmax",
        "8",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
    let r: ClassificationReport = round_trip(&fs::read_to_string(out).unwrap());
    assert_eq!(r.predicted.label(), "not_applicable");
    assert_eq!(r.consistent, None);
}
