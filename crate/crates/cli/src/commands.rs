use bwma_core::entanglement::{sweep_negativity, Grid, NegativityPoint};
use bwma_core::relations::{exact_suite, numeric_suite, RelationReport};
use bwma_core::topo::{
    build_e_basis, check_reduced_bwma, closed_form_reduced, reduced_operators, s23_e3_closed_form,
    s23_e3_expansion, similarity_residuals, singlet_check, ReducedOperators, SimilarityReport,
    BASIS_GAUGE,
};
use bwma_core::{ComplexMatrix, RepParams};
use serde_json::{json, Map, Value};

use crate::args::{
    BasisArgs, ExactArgs, Format, NegativityArgs, PointArgs, SingletArgs, VerifyArgs,
};
use crate::error::CliError;
use crate::format::{cell, complex, matrix, num, nums};

/// Rendered report and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub pass: bool,
}

fn params_json(p: &RepParams) -> Value {
    json!({
        "q": num(p.q()),
        "phi_nu": num(p.phi_nu()),
        "phi_mu_lambda": num(p.phi_mu_lambda()),
        "levels": p.levels().to_string(),
    })
}

fn to_params(point: &PointArgs) -> Result<RepParams, CliError> {
    Ok(RepParams::new(
        point.q,
        point.phi_nu,
        point.phi_mu_lambda,
        point.levels,
    )?)
}

fn numeric_report(r: &RelationReport) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), r.name.clone().into());
    m.insert("max_abs_deviation".into(), num(r.deviation));
    m.insert("pass".into(), r.pass.into());
    if let Some(note) = &r.note {
        m.insert("note".into(), note.clone().into());
    }
    Value::Object(m)
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let params = to_params(&args.point)?;
    let reports = numeric_suite(&params, args.out.tol)?;
    let pass = reports.iter().all(|r| r.pass);
    let body = match args.format {
        Format::Json => render_json(&json!({
            "params": params_json(&params),
            "mode": "numeric",
            "tolerance": num(args.out.tol),
            "relations": reports.iter().map(numeric_report).collect::<Vec<_>>(),
            "all_pass": pass,
        })),
        Format::Csv => {
            let mut s = String::from("name,max_abs_deviation,pass\n");
            for r in &reports {
                s.push_str(&format!("{},{},{}\n", r.name, cell(r.deviation), r.pass));
            }
            s
        }
    };
    Ok(Outcome { body, pass })
}

pub fn exact_verify(args: &ExactArgs) -> Result<Outcome, CliError> {
    let reports = exact_suite(args.levels)?;
    let pass = reports.iter().all(|r| r.pass);
    let relations: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("name".into(), r.name.clone().into());
            m.insert("residual_terms".into(), (r.deviation as u64).into());
            m.insert("pass".into(), r.pass.into());
            if let Some(note) = &r.note {
                m.insert("note".into(), note.clone().into());
            }
            m.insert("residual".into(), r.residual.clone().into());
            Value::Object(m)
        })
        .collect();
    let body = render_json(&json!({
        "params": { "levels": args.levels.to_string() },
        "mode": "exact",
        "relations": relations,
        "all_pass": pass,
    }));
    Ok(Outcome { body, pass })
}

pub fn negativity(args: &NegativityArgs) -> Result<Outcome, CliError> {
    let grid = if args.log_grid {
        Grid::Log
    } else {
        Grid::Linear
    };
    let points = sweep_negativity(args.q_min, args.q_max, args.steps, grid)?;
    let tol = args.out.tol;
    let pass = points
        .iter()
        .all(|p| (p.negativity_numeric - p.negativity_closed_form).abs() < tol);
    let body = match args.format {
        Format::Csv => {
            let mut s = String::from("q,negativity_numeric,negativity_closed_form\n");
            for p in &points {
                s.push_str(&format!(
                    "{},{},{}\n",
                    cell(p.q),
                    cell(p.negativity_numeric),
                    cell(p.negativity_closed_form)
                ));
            }
            s
        }
        Format::Json => {
            let row = |p: &NegativityPoint| {
                json!({
                    "q": num(p.q),
                    "negativity_numeric": num(p.negativity_numeric),
                    "negativity_closed_form": num(p.negativity_closed_form),
                })
            };
            render_json(&json!({
                "q_min": num(args.q_min),
                "q_max": num(args.q_max),
                "steps": args.steps,
                "grid": if args.log_grid { "log" } else { "linear" },
                "tolerance": num(tol),
                "points": points.iter().map(row).collect::<Vec<_>>(),
                "all_pass": pass,
            }))
        }
    };
    Ok(Outcome { body, pass })
}

fn operators_json(ops: &ReducedOperators, u: Option<&ComplexMatrix>) -> Value {
    let mut m = Map::new();
    m.insert("e_a".into(), matrix(&ops.e_a));
    m.insert("e_b".into(), matrix(&ops.e_b));
    m.insert("a".into(), matrix(&ops.a));
    m.insert("b".into(), matrix(&ops.b));
    if let Some(u) = u {
        m.insert("u".into(), matrix(u));
    }
    Value::Object(m)
}

fn similarity_json(s: &SimilarityReport, tol: f64) -> (Value, bool) {
    let pass = s.b_u_minus_u_a < tol && s.eb_u_minus_u_ea < tol;
    let v = json!({
        "b_u_minus_u_a": num(s.b_u_minus_u_a),
        "eb_u_minus_u_ea": num(s.eb_u_minus_u_ea),
        "unitarity_residual": num(s.unitarity_residual),
        "involution_residual": num(s.involution_residual),
        "inverse_residual": s.inverse_residual.map_or(Value::Null, num),
        "pass": pass,
    });
    (v, pass)
}

pub fn basis(args: &BasisArgs) -> Result<Outcome, CliError> {
    let params = to_params(&args.point)?;
    let tol = args.out.tol;
    let q = params.q();
    let basis = build_e_basis(&params)?;
    let gram = basis.gram();
    let gram_deviation = gram.max_abs_diff(&ComplexMatrix::identity(3))?;

    let computed = reduced_operators(&basis)?;
    let closed = closed_form_reduced(q)?;
    let closed_ops = ReducedOperators::from(&closed);
    let deviations = [
        ("e_a", computed.e_a.max_abs_diff(&closed.e_a)?),
        ("e_b", computed.e_b.max_abs_diff(&closed.e_b)?),
        ("a", computed.a.max_abs_diff(&closed.a)?),
        ("b", computed.b.max_abs_diff(&closed.b)?),
    ];
    let reduced_pass = deviations.iter().all(|(_, d)| *d < tol);

    let expansion = s23_e3_expansion(&basis)?;
    let expansion_closed = s23_e3_closed_form(q);
    let expansion_deviation = expansion
        .iter()
        .zip(&expansion_closed)
        .map(|(z, c)| (z - c).norm())
        .fold(0.0, f64::max);

    let (sim_computed, sim_computed_pass) =
        similarity_json(&similarity_residuals(&closed.u, &computed)?, tol);
    let (sim_closed, sim_closed_pass) =
        similarity_json(&similarity_residuals(&closed.u, &closed_ops)?, tol);

    let rel_computed = check_reduced_bwma(&computed, q, tol)?;
    let rel_closed = check_reduced_bwma(&closed_ops, q, tol)?;
    let relations_pass = rel_computed.iter().chain(&rel_closed).all(|r| r.pass);

    let pass = gram_deviation < tol
        && reduced_pass
        && expansion_deviation < tol
        && sim_computed_pass
        && sim_closed_pass
        && relations_pass;

    let body = render_json(&json!({
        "params": params_json(&params),
        "tolerance": num(tol),
        "gauge": nums(&BASIS_GAUGE),
        "gram": matrix(&gram),
        "gram_deviation": num(gram_deviation),
        "reduced": {
            "computed": operators_json(&computed, None),
            "closed_form": operators_json(&closed_ops, Some(&closed.u)),
            "max_abs_deviation": Value::Object(deviations.iter().map(|(k, d)| (k.to_string(), num(*d))).collect()),
        },
        "s23_e3_expansion": {
            "computed": expansion.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
            "closed_form": nums(&expansion_closed),
            "max_abs_deviation": num(expansion_deviation),
        },
        "similarity": {
            "computed": sim_computed,
            "closed_form": sim_closed,
        },
        "relations": {
            "computed": rel_computed.iter().map(numeric_report).collect::<Vec<_>>(),
            "closed_form": rel_closed.iter().map(numeric_report).collect::<Vec<_>>(),
        },
        "all_pass": pass,
    }));
    Ok(Outcome { body, pass })
}

pub fn singlet(args: &SingletArgs) -> Result<Outcome, CliError> {
    let params = RepParams::singlet_point();
    let basis = build_e_basis(&params)?;
    let report = singlet_check(&basis, args.out.tol)?;
    let pass = report.pass.unwrap_or(false);
    let body = render_json(&json!({
        "params": params_json(&params),
        "tolerance": num(args.out.tol),
        "s_squared_norms": nums(&report.s_squared_norms),
        "sz_norms": nums(&report.sz_norms),
        "all_pass": pass,
    }));
    Ok(Outcome { body, pass })
}
