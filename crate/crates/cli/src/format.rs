//! Deterministic float and matrix serialization.

use bwma_core::ComplexMatrix;
use num_complex::Complex64;
use serde_json::{json, Number, Value};

/// Fixed 12-decimal notation, or lowercase scientific with 12 significant
/// digits below `1e-4`. Negative zero prints as zero.
pub fn format_float(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some(format!("{:.12}", 0.0));
    }
    Some(if x.abs() < 1e-4 {
        format!("{x:.11e}")
    } else {
        format!("{x:.12}")
    })
}

/// JSON number with [`format_float`] text; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    match format_float(x) {
        Some(s) => Value::Number(s.parse::<Number>().expect("formatted float is valid JSON")),
        None => Value::Null,
    }
}

/// CSV cell; non-finite values become `nan`.
pub fn cell(x: f64) -> String {
    format_float(x).unwrap_or_else(|| "nan".into())
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

/// `{"re": [[..]], "im": [[..]]}`.
pub fn matrix(m: &ComplexMatrix) -> Value {
    let part = |f: fn(&Complex64) -> f64| {
        Value::Array(
            (0..m.rows())
                .map(|i| Value::Array((0..m.cols()).map(|j| num(f(m.get(i, j)))).collect()))
                .collect(),
        )
    };
    json!({ "re": part(|z| z.re), "im": part(|z| z.im) })
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}
