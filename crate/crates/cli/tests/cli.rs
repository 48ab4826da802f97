use std::process::{Command, Output};

fn bwma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwma"))
        .args(args)
        .env_remove("BWMA_TOL")
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn as_f64(v: &serde_json::Value) -> f64 {
    v.to_string().parse().unwrap()
}

#[test]
fn verify_passes_at_generic_point() {
    let out = bwma(&["verify", "--q", "2", "--phi-nu", "0.3", "--phi-ml", "0.7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mode"], "numeric");
    assert_eq!(v["all_pass"], true);
    let names: Vec<&str> = v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"braid.yang_baxter"));
    assert!(names.contains(&"spectral.cubic_annihilator"));
}

#[test]
fn usage_errors_exit_2() {
    let out = bwma(&["verify", "--q", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("q must be positive"));
    let out = bwma(&["verify", "--levels", "+1,+1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a permutation"));
    assert_eq!(bwma(&["negativity", "--steps", "1"]).status.code(), Some(2));
    assert_eq!(
        bwma(&["negativity", "--q-min", "3", "--q-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bwma(&["verify", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(bwma(&["basis", "--phi-ml", "0.2"]).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_bwma"))
        .args(["verify", "--q", "1.5"])
        .env("BWMA_TOL", "1e-30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["tolerance"].to_string(), "1.00000000000e-30");
}

#[test]
fn exact_verify_other_levels() {
    let out = bwma(&["exact-verify", "--levels", "0,+1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for r in v["relations"].as_array().unwrap() {
        assert_eq!(r["residual_terms"], 0, "{r}");
        assert!(r["residual"].as_array().unwrap().is_empty());
    }
}

#[test]
fn negativity_csv_rows() {
    let out = bwma(&[
        "negativity",
        "--q-min",
        "0.1",
        "--q-max",
        "10",
        "--steps",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("q,negativity_numeric,negativity_closed_form")
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 100);
    let peak = rows.iter().max_by(|a, b| a[1].total_cmp(&b[1])).unwrap();
    let nearest = rows
        .iter()
        .min_by(|a, b| (a[0] - 1.0).abs().total_cmp(&(b[0] - 1.0).abs()))
        .unwrap();
    assert_eq!(peak[0], nearest[0]);

    let out = bwma(&[
        "negativity",
        "--q-min",
        "0.5",
        "--q-max",
        "1.5",
        "--steps",
        "3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().nth(2),
        Some("1.000000000000,1.000000000000,1.000000000000")
    );
}

#[test]
fn basis_reports_closed_forms() {
    let v = json(&bwma(&["basis", "--q", "2"]));
    assert_eq!(v["all_pass"], true);
    let a = &v["reduced"]["computed"]["a"]["re"];
    for (i, want) in [2.0, 0.25, -0.5].into_iter().enumerate() {
        assert!((as_f64(&a[i][i]) - want).abs() < 1e-10);
    }
    assert_eq!(
        v["reduced"]["closed_form"]["a"]["re"][1][1].to_string(),
        "0.250000000000"
    );
    assert!(as_f64(&v["similarity"]["computed"]["involution_residual"]) > 0.1);

    let v = json(&bwma(&["basis", "--q", "1"]));
    let ea = &v["reduced"]["computed"]["e_a"]["re"];
    assert!((as_f64(&ea[1][1]) - 3.0).abs() < 1e-10);
    assert!(as_f64(&ea[0][0]).abs() < 1e-10 && as_f64(&ea[2][2]).abs() < 1e-10);
}

#[test]
fn singlet_norms() {
    let out = bwma(&["singlet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["params"]["levels"], "+1,-1,0");
    for key in ["s_squared_norms", "sz_norms"] {
        let norms = v[key].as_array().unwrap();
        assert_eq!(norms.len(), 3);
        assert!(norms.iter().all(|n| as_f64(n) < 1e-10));
    }
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.csv");
    let out = bwma(&[
        "negativity",
        "--steps",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read(&path).unwrap(),
        bwma(&["negativity", "--steps", "5"]).stdout
    );
}
