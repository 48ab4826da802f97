//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fail.

use std::f64::consts::PI;
use std::process::Command;

use bwma_core::entanglement::{cup_negativity, negativity, sweep_negativity, BipartiteState, Grid};
use bwma_core::relations::{
    check_cubic_annihilator_numeric, check_spectrum, check_tla, exact_suite, numeric_suite,
    quasirandom_samples,
};
use bwma_core::reps::{build_e4, build_psi, build_s9};
use bwma_core::topo::{
    build_e_basis, check_reduced_bwma, closed_form_reduced, reduced_operators, s23_e3_closed_form,
    s23_e3_expansion, similarity_residuals, singlet_check, ReducedOperators, BASIS_GAUGE,
};
use bwma_core::{ComplexVector, Levels, RepParams};
use num_complex::Complex64;

const TOL: f64 = 1e-10;
const SPECTRAL_TOL: f64 = 1e-9;
const BASIS_Q: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
const BASIS_PHI_NU: [f64; 3] = [0.0, 1.1, PI];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn worst(acc: &mut f64, x: f64) {
    if x.is_nan() || x > *acc {
        *acc = x;
    }
}

fn tla_spin_half() -> Outcome {
    let mut max = 0.0;
    for q in [0.5, 1.0, 2.0, 5.0] {
        for eta in [0.0, PI / 3.0] {
            let e = build_e4(q, eta).map_err(|e| e.to_string())?;
            let d = Complex64::new(q + 1.0 / q, 0.0);
            for r in check_tla(&e, &d, 2, TOL).map_err(|e| e.to_string())? {
                worst(&mut max, r.deviation);
                if !r.pass {
                    return Err(format!("{} at q={q}, eta={eta}: {:e}", r.name, r.deviation));
                }
            }
        }
    }
    Ok(format!("8 points, max deviation {max:.2e}"))
}

fn bwma_suite() -> Outcome {
    let mut max = 0.0;
    let mut count = 0;
    for levels in Levels::all() {
        for (q, pn, pm) in quasirandom_samples(32) {
            let p = RepParams::new(q, pn, pm, levels).map_err(|e| e.to_string())?;
            for r in numeric_suite(&p, TOL).map_err(|e| e.to_string())? {
                if r.name.starts_with("spectral.") {
                    continue;
                }
                count += 1;
                worst(&mut max, r.deviation);
                if !r.pass {
                    return Err(format!(
                        "{} at levels {levels}, q={q}: {:e}",
                        r.name, r.deviation
                    ));
                }
            }
        }
        for r in exact_suite(levels).map_err(|e| e.to_string())? {
            if !r.pass || r.deviation != 0.0 {
                return Err(format!(
                    "exact {} at levels {levels}: {:?}",
                    r.name, r.residual
                ));
            }
        }
    }
    Ok(format!("{count} numeric checks over 32 samples x 6 permutations, max deviation {max:.2e}; exact residuals all zero"))
}

fn negativity_checks() -> Outcome {
    let pts = sweep_negativity(0.1, 10.0, 100, Grid::Linear).map_err(|e| e.to_string())?;
    let sweep = pts
        .iter()
        .map(|p| (p.negativity_numeric - p.negativity_closed_form).abs())
        .fold(0.0, f64::max);
    if pts.len() != 100 || sweep >= 1e-10 {
        return Err(format!(
            "sweep deviation {sweep:e} over {} points",
            pts.len()
        ));
    }
    let n1 = cup_negativity(1.0).map_err(|e| e.to_string())?;
    if (n1 - 1.0).abs() >= 1e-12 {
        return Err(format!("N(1) = {n1}"));
    }
    let mut phase = 0.0;
    for q in [0.3, 1.0, 2.0, 7.5] {
        let base = build_psi(
            &RepParams::new(q, 0.0, 0.0, Levels::standard()).unwrap(),
            true,
        );
        let n0 = negativity(BipartiteState::Pure(&base), 3, 3).map_err(|e| e.to_string())?;
        for (pn, pm) in [(0.4, 0.0), (0.0, 2.2), (PI, 5.0), (3.9, 1.3)] {
            let psi = build_psi(
                &RepParams::new(q, pn, pm, Levels::standard()).unwrap(),
                true,
            );
            let n = negativity(BipartiteState::Pure(&psi), 3, 3).map_err(|e| e.to_string())?;
            worst(&mut phase, (n - n0).abs());
        }
    }
    if phase >= 1e-12 {
        return Err(format!("phase dependence {phase:e}"));
    }
    let mut product = 0.0;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let a = ComplexVector::new(vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)]);
    let b = ComplexVector::new(vec![c(0.5, 0.5), c(0.5, 0.0), c(0.0, -0.5)]);
    for (x, y) in [(&a, &b), (&b, &a), (&ComplexVector::basis(3, 1), &b)] {
        let n = negativity(BipartiteState::Pure(&x.kron(y)), 3, 3).map_err(|e| e.to_string())?;
        worst(&mut product, n.abs());
    }
    if product >= 1e-12 {
        return Err(format!("product-state negativity {product:e}"));
    }
    Ok(format!(
        "sweep {sweep:.2e}, |N(1)-1| {:.2e}, phase {phase:.2e}, product {product:.2e}",
        (n1 - 1.0).abs()
    ))
}

fn basis_params() -> impl Iterator<Item = RepParams> {
    BASIS_Q.into_iter().flat_map(|q| {
        BASIS_PHI_NU
            .into_iter()
            .map(move |pn| RepParams::new(q, pn, 0.0, Levels::standard()).unwrap())
    })
}

fn gram() -> Outcome {
    let mut max = 0.0;
    for p in basis_params() {
        let b = build_e_basis(&p).map_err(|e| e.to_string())?;
        worst(
            &mut max,
            b.gram()
                .max_abs_diff(&bwma_core::ComplexMatrix::identity(3))
                .unwrap(),
        );
    }
    if max < TOL {
        Ok(format!("12 points, max |G - I| {max:.2e}"))
    } else {
        Err(format!("max |G - I| {max:e}"))
    }
}

fn reduced_closed_forms() -> Outcome {
    let mut max = 0.0;
    for p in basis_params() {
        let b = build_e_basis(&p).map_err(|e| e.to_string())?;
        let r = reduced_operators(&b).map_err(|e| e.to_string())?;
        let cf = closed_form_reduced(p.q()).map_err(|e| e.to_string())?;
        for (x, y) in [
            (&r.e_a, &cf.e_a),
            (&r.e_b, &cf.e_b),
            (&r.a, &cf.a),
            (&r.b, &cf.b),
        ] {
            worst(&mut max, x.max_abs_diff(y).unwrap());
        }
        let got = s23_e3_expansion(&b).map_err(|e| e.to_string())?;
        for (z, w) in got.iter().zip(s23_e3_closed_form(p.q())) {
            worst(&mut max, (z - w).norm());
        }
    }
    if max < TOL {
        Ok(format!(
            "E_A, E_B, A, B and S23|e3> expansion, max deviation {max:.2e}, gauge {BASIS_GAUGE:?}"
        ))
    } else {
        Err(format!("max deviation {max:e}"))
    }
}

fn similarity() -> Outcome {
    let mut max = 0.0;
    for p in basis_params() {
        let b = build_e_basis(&p).map_err(|e| e.to_string())?;
        let r = reduced_operators(&b).map_err(|e| e.to_string())?;
        let cf = closed_form_reduced(p.q()).map_err(|e| e.to_string())?;
        for ops in [r, ReducedOperators::from(&cf)] {
            let s = similarity_residuals(&cf.u, &ops).map_err(|e| e.to_string())?;
            worst(&mut max, s.b_u_minus_u_a);
            worst(&mut max, s.eb_u_minus_u_ea);
        }
    }
    if max < TOL {
        Ok(format!("BU = UA and E_B U = U E_A, max residual {max:.2e}"))
    } else {
        Err(format!("max residual {max:e}"))
    }
}

fn reduced_bwma() -> Outcome {
    let mut max = 0.0;
    let mut count = 0;
    for p in basis_params() {
        let b = build_e_basis(&p).map_err(|e| e.to_string())?;
        let computed = reduced_operators(&b).map_err(|e| e.to_string())?;
        let closed =
            ReducedOperators::from(&closed_form_reduced(p.q()).map_err(|e| e.to_string())?);
        for (route, ops) in [("computed", computed), ("closed form", closed)] {
            for r in check_reduced_bwma(&ops, p.q(), TOL).map_err(|e| e.to_string())? {
                count += 1;
                worst(&mut max, r.deviation);
                if !r.pass {
                    return Err(format!(
                        "{} ({route}) at q={}: {:e}",
                        r.name,
                        p.q(),
                        r.deviation
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{count} checks on both routes, max deviation {max:.2e}"
    ))
}

fn singlet() -> Outcome {
    let b = build_e_basis(&RepParams::singlet_point()).map_err(|e| e.to_string())?;
    let r = singlet_check(&b, TOL).map_err(|e| e.to_string())?;
    let max = r
        .s_squared_norms
        .iter()
        .chain(&r.sz_norms)
        .fold(0.0f64, |a, &x| a.max(x));
    if r.pass == Some(true) && max < TOL {
        Ok(format!("six norms, max {max:.2e}"))
    } else {
        Err(format!(
            "norms S^2 {:?}, Sz {:?}",
            r.s_squared_norms, r.sz_norms
        ))
    }
}

fn spectral() -> Outcome {
    let mut max = 0.0;
    for levels in Levels::all() {
        for (q, pn, pm) in quasirandom_samples(32) {
            let p = RepParams::new(q, pn, pm, levels).unwrap();
            let s = build_s9(&p);
            for r in [
                check_cubic_annihilator_numeric(&s, q, SPECTRAL_TOL).map_err(|e| e.to_string())?,
                check_spectrum(&s, q, SPECTRAL_TOL).map_err(|e| e.to_string())?,
            ] {
                worst(&mut max, r.deviation);
                if !r.pass {
                    return Err(format!(
                        "{} at levels {levels}, q={q}: {:e}",
                        r.name, r.deviation
                    ));
                }
            }
        }
    }
    Ok(format!(
        "cubic annihilator and eigenvalue containment, max deviation {max:.2e}"
    ))
}

fn run_cli(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bwma"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs: [&[&str]; 6] = [
        &["verify", "--q", "2", "--phi-nu", "0.3", "--phi-ml", "0.7"],
        &[
            "verify", "--q", "1.3", "--levels", "0,+1,-1", "--format", "csv",
        ],
        &["exact-verify", "--levels", "-1,0,+1"],
        &[
            "negativity",
            "--q-min",
            "0.1",
            "--q-max",
            "10",
            "--steps",
            "100",
        ],
        &["basis", "--q", "2", "--phi-nu", "pi"],
        &["singlet"],
    ];
    for args in runs {
        let (a, code_a) = run_cli(args)?;
        let (b, code_b) = run_cli(args)?;
        if code_a != 0 || a.is_empty() || a != b || code_a != code_b {
            return Err(format!(
                "{args:?}: exit {code_a}/{code_b}, identical {}",
                a == b
            ));
        }
    }
    let files: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.json")))
        .collect();
    for f in &files {
        let (_, code) = run_cli(&["basis", "--q", "1.5", "--output", f.to_str().unwrap()])?;
        if code != 0 {
            return Err(format!("basis --output exit {code}"));
        }
    }
    let (a, b) = (
        std::fs::read(&files[0]).unwrap(),
        std::fs::read(&files[1]).unwrap(),
    );
    if a != b {
        return Err("basis --output files differ".into());
    }
    Ok("7 commands run twice, byte-identical stdout and files".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("tla_spin_half", tla_spin_half),
        ("bwma_full_suite", bwma_suite),
        ("negativity", negativity_checks),
        ("basis_gram", gram),
        ("reduced_closed_forms", reduced_closed_forms),
        ("similarity", similarity),
        ("reduced_bwma", reduced_bwma),
        ("singlet_point", singlet),
        ("spectral", spectral),
        ("cli_determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
