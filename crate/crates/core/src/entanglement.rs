//! Negativity of bipartite states from the spectrum of the partial
//! transpose, and the closed form for the two-qutrit cup family.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, partial_transpose, ComplexMatrix, ComplexVector};
use crate::reps::{build_psi, Levels, RepParams, SpinLevel};

const NORMALIZATION_TOL: f64 = 1e-10;
const FORM_AGREEMENT_TOL: f64 = 1e-10;
/// Eigenvalues below this magnitude count as zero.
const ZERO_EIGENVALUE: f64 = 1e-12;
const EIGEN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub enum BipartiteState<'a> {
    Pure(&'a ComplexVector),
    Density(&'a ComplexMatrix),
}

/// Both computational forms of the negativity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativityForms {
    /// `(‖ρ^{T_A}‖₁ − 1) / 2`.
    pub trace_norm: f64,
    /// Absolute sum of the negative eigenvalues of `ρ^{T_A}`.
    pub negative_sum: f64,
}

fn density(state: BipartiteState<'_>, n: usize) -> Result<ComplexMatrix> {
    match state {
        BipartiteState::Pure(v) => {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    op: "negativity",
                    left: (v.dim(), 1),
                    right: (n, 1),
                });
            }
            let norm = v.norm();
            if (norm - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::NotNormalized { measured: norm });
            }
            Ok(v.outer(v))
        }
        BipartiteState::Density(rho) => {
            if rho.shape() != (n, n) {
                return Err(Error::DimensionMismatch {
                    op: "negativity",
                    left: rho.shape(),
                    right: (n, n),
                });
            }
            let tr = rho.trace();
            if (tr.re - 1.0).abs() > NORMALIZATION_TOL || tr.im.abs() > NORMALIZATION_TOL {
                return Err(Error::NotNormalized {
                    measured: tr.norm(),
                });
            }
            Ok(rho.clone())
        }
    }
}

pub fn negativity_forms(
    state: BipartiteState<'_>,
    dim_a: usize,
    dim_b: usize,
) -> Result<NegativityForms> {
    let rho = density(state, dim_a * dim_b)?;
    let pt = partial_transpose(&rho, dim_a, dim_b)?;
    let eig = hermitian_eigenvalues(&pt, EIGEN_TOL)?;
    let trace_norm: f64 = eig.iter().map(|l| l.abs()).sum();
    let negative_sum: f64 = eig
        .iter()
        .filter(|&&l| l < -ZERO_EIGENVALUE)
        .map(|l| -l)
        .sum();
    let forms = NegativityForms {
        trace_norm: (trace_norm - 1.0) / 2.0,
        negative_sum,
    };
    if (forms.trace_norm - forms.negative_sum).abs() > FORM_AGREEMENT_TOL {
        return Err(Error::Inconsistent(format!(
            "trace-norm negativity {} disagrees with negative-eigenvalue sum {}",
            forms.trace_norm, forms.negative_sum
        )));
    }
    Ok(forms)
}

/// `N(ρ) = (‖ρ^{T_A}‖₁ − 1)/2`, returned as the negative-eigenvalue sum
/// after checking the two forms agree.
pub fn negativity(state: BipartiteState<'_>, dim_a: usize, dim_b: usize) -> Result<f64> {
    Ok(negativity_forms(state, dim_a, dim_b)?.negative_sum)
}

/// `(q^{1/2} + 1 + q^{−1/2}) / (q + 1 + q⁻¹)`.
pub fn negativity_closed_form(q: f64) -> Result<f64> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let r = q.sqrt();
    Ok((r + 1.0 + 1.0 / r) / (q + 1.0 + 1.0 / q))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativityPoint {
    pub q: f64,
    pub negativity_numeric: f64,
    pub negativity_closed_form: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Grid {
    #[default]
    Linear,
    Log,
}

fn grid_points(q_min: f64, q_max: f64, steps: usize, grid: Grid) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let f = i as f64 / last;
            match grid {
                Grid::Linear => q_min + (q_max - q_min) * f,
                Grid::Log => (q_min.ln() + (q_max.ln() - q_min.ln()) * f).exp(),
            }
        })
        .collect()
}

/// Phase and level choices each sweep point is evaluated at; the cup
/// family's negativity must not depend on them.
fn sweep_variants() -> Vec<(f64, f64, Levels)> {
    use SpinLevel::*;
    vec![
        (0.0, 0.0, Levels::standard()),
        (1.3, 2.1, Levels::new(Zero, Plus, Minus).unwrap()),
        (
            std::f64::consts::PI,
            4.0,
            Levels::new(Minus, Zero, Plus).unwrap(),
        ),
    ]
}

/// Negativity of the cup state at one `q`, checked for independence of the
/// phases and the level assignment.
pub fn cup_negativity(q: f64) -> Result<f64> {
    let mut values = Vec::new();
    for (pn, pm, levels) in sweep_variants() {
        let psi = build_psi(&RepParams::new(q, pn, pm, levels)?, true);
        values.push(negativity(BipartiteState::Pure(&psi), 3, 3)?);
    }
    let spread = values
        .iter()
        .map(|v| (v - values[0]).abs())
        .fold(0.0, f64::max);
    if spread > FORM_AGREEMENT_TOL {
        return Err(Error::Inconsistent(format!(
            "negativity at q={q} depends on phases/levels (spread {spread:e})"
        )));
    }
    Ok(values[0])
}

pub fn sweep_negativity(
    q_min: f64,
    q_max: f64,
    steps: usize,
    grid: Grid,
) -> Result<Vec<NegativityPoint>> {
    if !(q_min > 0.0 && q_min < q_max && q_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "invalid q range [{q_min}, {q_max}]: need 0 < q_min < q_max"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidParameter(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    grid_points(q_min, q_max, steps, grid)
        .into_iter()
        .map(|q| {
            Ok(NegativityPoint {
                q,
                negativity_numeric: cup_negativity(q)?,
                negativity_closed_form: negativity_closed_form(q)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn cup(q: f64) -> ComplexVector {
        build_psi(
            &RepParams::new(q, 0.0, 0.0, Levels::standard()).unwrap(),
            true,
        )
    }

    #[test]
    fn product_state_has_zero_negativity() {
        let a = ComplexVector::new(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
            Complex64::new(0.0, 0.0),
        ]);
        let b = ComplexVector::basis(3, 2);
        let n = negativity(BipartiteState::Pure(&a.kron(&b)), 3, 3).unwrap();
        assert!(n.abs() < 1e-12);
    }

    #[test]
    fn maximally_entangled_at_q1() {
        let n = negativity(BipartiteState::Pure(&cup(1.0)), 3, 3).unwrap();
        assert!((n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn value_at_q4() {
        let n = negativity(BipartiteState::Pure(&cup(4.0)), 3, 3).unwrap();
        assert!((n - 2.0 / 3.0).abs() < 1e-10);
        assert!((negativity_closed_form(4.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn closed_form_properties() {
        assert_eq!(negativity_closed_form(1.0).unwrap(), 1.0);
        let big = [1e3, 1e6].map(|q| negativity_closed_form(q).unwrap());
        assert!(big[0] > big[1] && big[1] > 0.0 && big[1] < 1e-2);
        let mut prev = 1.0;
        for k in 1..50 {
            let v = negativity_closed_form(1.0 + k as f64 * 0.5).unwrap();
            assert!(v < prev);
            prev = v;
        }
        for &q in &[0.1, 0.37, 2.5, 9.0] {
            let a = negativity_closed_form(q).unwrap();
            let b = negativity_closed_form(1.0 / q).unwrap();
            assert!((a - b).abs() < 1e-14);
        }
        assert!(negativity_closed_form(0.0).is_err());
    }

    #[test]
    fn unnormalized_rejected() {
        let v = cup(2.0).scale_real(1.1);
        match negativity(BipartiteState::Pure(&v), 3, 3) {
            Err(Error::NotNormalized { measured }) => assert!((measured - 1.1).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
        let rho = ComplexMatrix::identity(9);
        assert!(matches!(
            negativity(BipartiteState::Density(&rho), 3, 3),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn sweep_matches_closed_form() {
        let pts = sweep_negativity(0.5, 2.0, 4, Grid::Linear).unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0].q, 0.5);
        assert_eq!(pts[3].q, 2.0);
        for p in &pts {
            assert!((p.negativity_numeric - p.negativity_closed_form).abs() < 1e-10);
        }
        let log = sweep_negativity(0.1, 10.0, 3, Grid::Log).unwrap();
        assert!((log[1].q - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sweep_rejects_bad_ranges() {
        assert!(sweep_negativity(1.0, 1.0, 5, Grid::Linear).is_err());
        assert!(sweep_negativity(0.0, 1.0, 5, Grid::Linear).is_err());
        assert!(sweep_negativity(0.5, 2.0, 1, Grid::Linear).is_err());
    }

    #[test]
    fn sweep_peak_is_nearest_q1() {
        let pts = sweep_negativity(0.1, 10.0, 100, Grid::Linear).unwrap();
        let peak = pts
            .iter()
            .max_by(|a, b| a.negativity_numeric.total_cmp(&b.negativity_numeric))
            .unwrap();
        let nearest = pts
            .iter()
            .min_by(|a, b| (a.q - 1.0).abs().total_cmp(&(b.q - 1.0).abs()))
            .unwrap();
        assert_eq!(peak.q, nearest.q);
    }

    fn density_strategy() -> impl Strategy<Value = ComplexMatrix> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 81).prop_filter_map("nonzero", |v| {
            let m = ComplexMatrix::new(
                9,
                9,
                v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect(),
            )
            .unwrap();
            let rho = &m * &m.adjoint();
            let tr = rho.trace().re;
            (tr > 1e-6).then(|| rho.scale(&Complex64::new(1.0 / tr, 0.0)))
        })
    }

    proptest! {
        #[test]
        fn forms_agree_and_bounded(rho in density_strategy()) {
            let f = negativity_forms(BipartiteState::Density(&rho), 3, 3).unwrap();
            prop_assert!((f.trace_norm - f.negative_sum).abs() < 1e-10);
            prop_assert!(f.negative_sum >= 0.0 && f.negative_sum <= 1.0 + 1e-12);
        }

        #[test]
        fn invariant_under_phases(q in 0.1f64..10.0, pn in 0.0f64..6.3, pm in 0.0f64..6.3) {
            let base = negativity(BipartiteState::Pure(&cup(q)), 3, 3).unwrap();
            let psi = build_psi(&RepParams::new(q, pn, pm, Levels::standard()).unwrap(), true);
            let n = negativity(BipartiteState::Pure(&psi), 3, 3).unwrap();
            prop_assert!((n - base).abs() < 1e-12);
        }
    }
}
