//! Verification of the Temperley–Lieb and Birman–Wenzl–Murakami relations.
//!
//! The checks are generic over the matrix entry type: with `Complex64`
//! entries a relation passes when the max absolute entry of `lhs − rhs` is
//! below a tolerance; with [`PhaseLaurent`] entries it passes only when the
//! difference is the zero polynomial matrix.
//!
//! Relations with a `1/ω` coefficient are checked with the denominator
//! cleared, `ωE² = (ω − σ + σ⁻¹)E`, which keeps exact mode division-free
//! and is well defined at `q = 1`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    embed_two_site, hermitian_eigenvalues, ComplexMatrix, DenseMatrix, Entry, RingMatrix,
};
use crate::reps::{
    build_e9, build_s9, build_sinv9, ring_e9, ring_s9, ring_sinv9, Levels, RepParams,
};
use crate::scalar::PhaseLaurent;

/// Default tolerance for numeric relation checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Tolerance for the spectral checks on the 9×9 braid generator.
pub const SPECTRAL_TOLERANCE: f64 = 1e-9;

const MAX_RESIDUAL_SAMPLES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Numeric,
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
        })
    }
}

/// Outcome of one identity check.
///
/// In numeric mode `deviation` is the max absolute entry of `lhs − rhs`; in
/// exact mode it is the number of monomials left in the residual.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub name: String,
    pub mode: Mode,
    pub deviation: f64,
    pub pass: bool,
    pub note: Option<String>,
    /// Exact mode only: up to eight residual entries, `"[row,col] poly"`.
    pub residual: Vec<String>,
}

impl RelationReport {
    fn skipped(name: String, mode: Mode, note: &str) -> Self {
        RelationReport {
            name,
            mode,
            deviation: 0.0,
            pass: true,
            note: Some(note.into()),
            residual: Vec::new(),
        }
    }
}

/// Entry types the relation checks can measure residuals for.
pub trait Checkable: Entry {
    const MODE: Mode;

    /// Deviation and (exact mode) rendered residual entries of `diff`.
    fn measure(diff: &DenseMatrix<Self>) -> (f64, Vec<String>);
}

impl Checkable for Complex64 {
    const MODE: Mode = Mode::Numeric;

    fn measure(diff: &DenseMatrix<Self>) -> (f64, Vec<String>) {
        (diff.max_abs(), Vec::new())
    }
}

impl Checkable for PhaseLaurent {
    const MODE: Mode = Mode::Exact;

    fn measure(diff: &DenseMatrix<Self>) -> (f64, Vec<String>) {
        let mut samples = Vec::new();
        for i in 0..diff.rows() {
            for j in 0..diff.cols() {
                let x = diff.get(i, j);
                if !x.is_zero() && samples.len() < MAX_RESIDUAL_SAMPLES {
                    samples.push(format!("[{i},{j}] {x}"));
                }
            }
        }
        (diff.term_count() as f64, samples)
    }
}

/// Scalars entering the BWMA relations.
#[derive(Clone, Debug)]
pub struct BwmaScalars<T> {
    pub omega: T,
    pub sigma: T,
    pub sigma_inv: T,
    pub loop_value: T,
}

impl BwmaScalars<Complex64> {
    /// `ω = q − q⁻¹`, `σ = q⁻²`, `d = q + 1 + q⁻¹`.
    pub fn numeric(q: f64) -> Self {
        let c = |x: f64| Complex64::new(x, 0.0);
        BwmaScalars {
            omega: c(q - 1.0 / q),
            sigma: c(q.powi(-2)),
            sigma_inv: c(q * q),
            loop_value: c(q + 1.0 + 1.0 / q),
        }
    }
}

impl BwmaScalars<PhaseLaurent> {
    pub fn exact() -> Self {
        BwmaScalars {
            omega: PhaseLaurent::omega(),
            sigma: PhaseLaurent::sigma(),
            sigma_inv: PhaseLaurent::sigma_inv(),
            loop_value: PhaseLaurent::loop_value(),
        }
    }
}

/// One BWMA generator triple `(S, S⁻¹, E)` acting on the full space.
#[derive(Clone, Debug)]
pub struct Generator<T> {
    pub label: String,
    pub s: DenseMatrix<T>,
    pub s_inv: DenseMatrix<T>,
    pub e: DenseMatrix<T>,
}

struct Checker {
    tol: f64,
}

impl Checker {
    /// Compares `lhs` against every matrix in `rhs`; the report carries the
    /// worst deviation.
    fn chain<T: Checkable>(
        &self,
        name: impl Into<String>,
        lhs: &DenseMatrix<T>,
        rhs: &[&DenseMatrix<T>],
    ) -> Result<RelationReport> {
        let mut deviation = 0.0f64;
        let mut residual = Vec::new();
        for r in rhs {
            let (dev, res) = T::measure(&lhs.try_sub(r)?);
            deviation = deviation.max(dev);
            residual.extend(res);
        }
        residual.truncate(MAX_RESIDUAL_SAMPLES);
        let pass = match T::MODE {
            Mode::Numeric => deviation < self.tol,
            Mode::Exact => deviation == 0.0,
        };
        Ok(RelationReport {
            name: name.into(),
            mode: T::MODE,
            deviation,
            pass,
            note: None,
            residual,
        })
    }

    fn eq<T: Checkable>(
        &self,
        name: impl Into<String>,
        lhs: &DenseMatrix<T>,
        rhs: &DenseMatrix<T>,
    ) -> Result<RelationReport> {
        self.chain(name, lhs, &[rhs])
    }
}

fn validate_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Temperley–Lieb relations for a two-site projector `e` with loop value
/// `d`: contraction both ways and `E² = dE` on three sites, and far
/// commutation `E₁E₃ = E₃E₁` on four sites.
///
/// A zero operator satisfies the contraction identities vacuously; such
/// input is reported as degenerate and never passes.
pub fn check_tla<T: Checkable>(
    e: &DenseMatrix<T>,
    d: &T,
    local_dim: usize,
    tol: f64,
) -> Result<Vec<RelationReport>> {
    validate_tol(tol)?;
    let ck = Checker { tol };
    let e1 = embed_two_site(e, 1, 3, local_dim)?;
    let e2 = embed_two_site(e, 2, 3, local_dim)?;
    let mut reports = vec![
        ck.eq("tla.contraction.plus", &(&(&e1 * &e2) * &e1), &e1)?,
        ck.eq("tla.contraction.minus", &(&(&e2 * &e1) * &e2), &e2)?,
        ck.eq("tla.loop.site1", &(&e1 * &e1), &e1.scale(d))?,
        ck.eq("tla.loop.site2", &(&e2 * &e2), &e2.scale(d))?,
    ];
    let f1 = embed_two_site(e, 1, 4, local_dim)?;
    let f3 = embed_two_site(e, 3, 4, local_dim)?;
    reports.push(ck.eq("tla.far_commutation", &(&f1 * &f3), &(&f3 * &f1))?);

    if e.is_zero() {
        for r in &mut reports {
            r.pass = false;
            r.note = Some("degenerate input: zero operator".into());
        }
    }
    Ok(reports)
}

/// Relations involving a single generator.
fn single_site_reports<T: Checkable>(
    g: &Generator<T>,
    sc: &BwmaScalars<T>,
    prefix: &str,
    ck: &Checker,
) -> Result<Vec<RelationReport>> {
    let n = g.s.rows();
    let id = DenseMatrix::<T>::identity(n);
    let l = &g.label;
    let sigma_e = g.e.scale(&sc.sigma);
    let e_sq = &g.e * &g.e;
    // ω − σ + σ⁻¹
    let cleared = sc.omega.clone() - sc.sigma.clone() + sc.sigma_inv.clone();
    Ok(vec![
        ck.eq(format!("{prefix}.inverse.{l}"), &(&g.s * &g.s_inv), &id)?,
        ck.eq(
            format!("{prefix}.skein.{l}"),
            &(&g.s - &g.s_inv),
            &(&id - &g.e).scale(&sc.omega),
        )?,
        ck.chain(
            format!("{prefix}.absorb.{l}"),
            &(&g.e * &g.s),
            &[&(&g.s * &g.e), &sigma_e],
        )?,
        ck.eq(
            format!("{prefix}.e_squared_cleared.{l}"),
            &e_sq.scale(&sc.omega),
            &g.e.scale(&cleared),
        )?,
    ])
}

/// Relations between `E_i, S_i` (generator `a`) and `E_{i±1}, S_{i±1}`
/// (generator `b`).
fn pair_reports<T: Checkable>(
    a: &Generator<T>,
    b: &Generator<T>,
    sc: &BwmaScalars<T>,
    prefix: &str,
    branch: &str,
    ck: &Checker,
) -> Result<Vec<RelationReport>> {
    let ea_eb = &a.e * &b.e;
    Ok(vec![
        ck.eq(
            format!("{prefix}.sse.{branch}"),
            &(&(&b.s * &a.s) * &b.e),
            &ea_eb,
        )?,
        ck.eq(
            format!("{prefix}.ess.{branch}"),
            &(&(&a.e * &b.s) * &a.s),
            &ea_eb,
        )?,
        ck.eq(
            format!("{prefix}.ses.{branch}"),
            &(&(&b.s * &a.e) * &b.s),
            &(&(&a.s_inv * &b.e) * &a.s_inv),
        )?,
        ck.eq(
            format!("{prefix}.ees.{branch}"),
            &(&(&b.e * &a.e) * &b.s),
            &(&b.e * &a.s_inv),
        )?,
        ck.eq(
            format!("{prefix}.see.{branch}"),
            &(&(&b.s * &a.e) * &b.e),
            &(&a.s_inv * &b.e),
        )?,
        ck.eq(
            format!("{prefix}.ese.{branch}"),
            &(&(&a.e * &b.s) * &a.e),
            &a.e.scale(&sc.sigma_inv),
        )?,
        ck.eq(
            format!("{prefix}.contraction.{branch}"),
            &(&(&a.e * &b.e) * &a.e),
            &a.e,
        )?,
    ])
}

/// Every BWMA relation between two adjacent generators, with both `±`
/// branches expanded (`plus`: `a` plays `i`, `minus`: `b` plays `i`).
pub fn check_bwma_generators<T: Checkable>(
    a: &Generator<T>,
    b: &Generator<T>,
    scalars: &BwmaScalars<T>,
    prefix: &str,
    tol: f64,
) -> Result<Vec<RelationReport>> {
    validate_tol(tol)?;
    let ck = Checker { tol };
    let mut reports = Vec::new();
    reports.extend(single_site_reports(a, scalars, prefix, &ck)?);
    reports.extend(single_site_reports(b, scalars, prefix, &ck)?);
    reports.push(ck.eq(
        format!("{prefix}.braid"),
        &(&(&a.s * &b.s) * &a.s),
        &(&(&b.s * &a.s) * &b.s),
    )?);
    reports.extend(pair_reports(a, b, scalars, prefix, "plus", &ck)?);
    reports.extend(pair_reports(b, a, scalars, prefix, "minus", &ck)?);
    Ok(reports)
}

fn chain_generator<T: Entry>(
    s: &DenseMatrix<T>,
    s_inv: &DenseMatrix<T>,
    e: &DenseMatrix<T>,
    site: usize,
    n: usize,
) -> Result<Generator<T>> {
    Ok(Generator {
        label: format!("site{site}"),
        s: embed_two_site(s, site, n, 3)?,
        s_inv: embed_two_site(s_inv, site, n, 3)?,
        e: embed_two_site(e, site, n, 3)?,
    })
}

/// BWMA relations for 9×9 two-site operators on a spin-1 chain: all
/// adjacent relations on three sites, far commutation of `S` and `E` on
/// four sites.
pub fn check_bwma<T: Checkable>(
    s: &DenseMatrix<T>,
    s_inv: &DenseMatrix<T>,
    e: &DenseMatrix<T>,
    scalars: &BwmaScalars<T>,
    tol: f64,
) -> Result<Vec<RelationReport>> {
    validate_tol(tol)?;
    let g1 = chain_generator(s, s_inv, e, 1, 3)?;
    let g2 = chain_generator(s, s_inv, e, 2, 3)?;
    let mut reports = check_bwma_generators(&g1, &g2, scalars, "bwma", tol)?;
    for r in &mut reports {
        if r.name == "bwma.braid" {
            r.name = "braid.yang_baxter".into();
        }
    }

    let ck = Checker { tol };
    let s1 = embed_two_site(s, 1, 4, 3)?;
    let s3 = embed_two_site(s, 3, 4, 3)?;
    reports.push(ck.eq("braid.far_commutation", &(&s1 * &s3), &(&s3 * &s1))?);
    let e1 = embed_two_site(e, 1, 4, 3)?;
    let e3 = embed_two_site(e, 3, 4, 3)?;
    reports.push(ck.eq("bwma.far_commutation", &(&e1 * &e3), &(&e3 * &e1))?);
    Ok(reports)
}

/// `E² = (1 − (σ−σ⁻¹)/ω)E` without clearing the denominator; skipped when
/// `ω = 0`.
pub fn check_e_squared_uncleared(
    name: impl Into<String>,
    e: &ComplexMatrix,
    q: f64,
    tol: f64,
) -> Result<RelationReport> {
    validate_tol(tol)?;
    let name = name.into();
    let sc = BwmaScalars::numeric(q);
    if sc.omega.norm() < 1e-12 {
        return Ok(RelationReport::skipped(
            name,
            Mode::Numeric,
            "indeterminate at omega=0",
        ));
    }
    let coeff = Complex64::one() - (sc.sigma - sc.sigma_inv) / sc.omega;
    Checker { tol }.eq(name, &(e * e), &e.scale(&coeff))
}

/// `(S − r₁)(S − r₂)(S − r₃) = 0`.
pub fn check_cubic_annihilator<T: Checkable>(
    s: &DenseMatrix<T>,
    roots: [T; 3],
    tol: f64,
) -> Result<RelationReport> {
    validate_tol(tol)?;
    let id = DenseMatrix::<T>::identity(s.rows());
    let factor = |r: &T| s - &id.scale(r);
    let prod = &(&factor(&roots[0]) * &factor(&roots[1])) * &factor(&roots[2]);
    Checker { tol }.eq(
        "spectral.cubic_annihilator",
        &prod,
        &DenseMatrix::zeros(s.rows(), s.cols()),
    )
}

/// Roots `{q, −q⁻¹, q⁻²}` of the braid generator's minimal polynomial.
pub fn braid_eigenvalues(q: f64) -> [f64; 3] {
    [q, -1.0 / q, q.powi(-2)]
}

pub fn check_cubic_annihilator_numeric(
    s: &ComplexMatrix,
    q: f64,
    tol: f64,
) -> Result<RelationReport> {
    let r = braid_eigenvalues(q).map(|x| Complex64::new(x, 0.0));
    check_cubic_annihilator(s, r, tol)
}

/// Every eigenvalue of `s` lies within `tol` of `{q, −q⁻¹, q⁻²}`.
pub fn check_spectrum(s: &ComplexMatrix, q: f64, tol: f64) -> Result<RelationReport> {
    validate_tol(tol)?;
    let roots = braid_eigenvalues(q);
    let eig = hermitian_eigenvalues(s, 1e-12)?;
    let deviation = eig
        .iter()
        .map(|l| {
            roots
                .iter()
                .map(|r| (l - r).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    Ok(RelationReport {
        name: "spectral.eigenvalue_containment".into(),
        mode: Mode::Numeric,
        deviation,
        pass: deviation < tol,
        note: None,
        residual: Vec::new(),
    })
}

fn hermiticity_reports<T: Checkable>(
    mats: [(&str, &DenseMatrix<T>); 3],
    tol: f64,
) -> Result<Vec<RelationReport>> {
    let ck = Checker { tol };
    mats.iter()
        .map(|(name, m)| ck.eq(format!("rep.hermitian.{name}"), &m.adjoint(), m))
        .collect()
}

fn sort_reports(reports: &mut [RelationReport]) {
    reports.sort_by(|a, b| a.name.cmp(&b.name));
}

/// The full numeric suite for one parameter point, sorted by name.
///
/// Spectral checks use `max(tol, SPECTRAL_TOLERANCE)`: their residuals
/// scale with cubes of matrix entries.
pub fn numeric_suite(params: &RepParams, tol: f64) -> Result<Vec<RelationReport>> {
    validate_tol(tol)?;
    let q = params.q();
    let e = build_e9(params);
    let s = build_s9(params);
    let s_inv = build_sinv9(params);
    let sc = BwmaScalars::numeric(q);

    let mut reports = check_tla(&e, &sc.loop_value, 3, tol)?;
    reports.extend(check_bwma(&s, &s_inv, &e, &sc, tol)?);
    for site in [1, 2] {
        let big = embed_two_site(&e, site, 3, 3)?;
        reports.push(check_e_squared_uncleared(
            format!("bwma.e_squared.site{site}"),
            &big,
            q,
            tol,
        )?);
    }
    let spectral_tol = tol.max(SPECTRAL_TOLERANCE);
    reports.push(check_cubic_annihilator_numeric(&s, q, spectral_tol)?);
    reports.push(check_spectrum(&s, q, spectral_tol)?);
    reports.extend(hermiticity_reports(
        [("e", &e), ("s", &s), ("s_inv", &s_inv)],
        tol,
    )?);
    sort_reports(&mut reports);
    Ok(reports)
}

/// Exact suite for arbitrary ring-valued operators.
pub fn exact_suite_for(
    s: &RingMatrix,
    s_inv: &RingMatrix,
    e: &RingMatrix,
) -> Result<Vec<RelationReport>> {
    let sc = BwmaScalars::exact();
    // tolerance is unused in exact mode
    let tol = DEFAULT_TOLERANCE;
    let mut reports = check_tla(e, &sc.loop_value, 3, tol)?;
    reports.extend(check_bwma(s, s_inv, e, &sc, tol)?);
    let roots = [
        PhaseLaurent::t_pow(2),
        -PhaseLaurent::t_pow(-2),
        PhaseLaurent::t_pow(-4),
    ];
    reports.push(check_cubic_annihilator(s, roots, tol)?);
    reports.extend(hermiticity_reports(
        [("e", e), ("s", s), ("s_inv", s_inv)],
        tol,
    )?);
    sort_reports(&mut reports);
    Ok(reports)
}

/// Exact suite in `(t, u, w)` for one level assignment.
pub fn exact_suite(levels: Levels) -> Result<Vec<RelationReport>> {
    exact_suite_for(&ring_s9(levels), &ring_sinv9(levels), &ring_e9(levels))
}

fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let mut result = 0.0;
    let mut f = 1.0 / base as f64;
    while index > 0 {
        result += f * (index % base) as f64;
        index /= base;
        f /= base as f64;
    }
    result
}

/// Halton samples `(q, φ_ν, φ_μλ)` with `q ∈ [0.2, 5]` and phases in
/// `[0, 2π)`.
pub fn quasirandom_samples(count: usize) -> Vec<(f64, f64, f64)> {
    (1..=count as u64)
        .map(|i| {
            (
                0.2 + 4.8 * radical_inverse(i, 2),
                2.0 * PI * radical_inverse(i, 3),
                2.0 * PI * radical_inverse(i, 5),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::build_e4;

    fn failing(reports: &[RelationReport]) -> Vec<String> {
        reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| format!("{} {:e} {:?}", r.name, r.deviation, r.residual))
            .collect()
    }

    fn standard(q: f64, pn: f64, pm: f64) -> RepParams {
        RepParams::new(q, pn, pm, Levels::standard()).unwrap()
    }

    #[test]
    fn tla_spin1_passes() {
        let p = standard(2.0, 0.3, 0.7);
        let r = check_tla(
            &build_e9(&p),
            &Complex64::new(p.loop_value(), 0.0),
            3,
            1e-10,
        )
        .unwrap();
        assert_eq!(r.len(), 5);
        assert!(failing(&r).is_empty(), "{:?}", failing(&r));
    }

    #[test]
    fn tla_spin_half_passes() {
        let q = 1.7;
        let e = build_e4(q, 0.4).unwrap();
        let r = check_tla(&e, &Complex64::new(q + 1.0 / q, 0.0), 2, 1e-10).unwrap();
        assert!(failing(&r).is_empty(), "{:?}", failing(&r));
    }

    #[test]
    fn tla_wrong_loop_value_fails() {
        let p = standard(2.0, 0.3, 0.7);
        let r = check_tla(&build_e9(&p), &Complex64::new(2.5, 0.0), 3, 1e-10).unwrap();
        let failed: Vec<_> = r
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(failed, vec!["tla.loop.site1", "tla.loop.site2"]);
    }

    #[test]
    fn tla_zero_operator_is_degenerate() {
        let r = check_tla(
            &ComplexMatrix::zeros(9, 9),
            &Complex64::new(3.0, 0.0),
            3,
            1e-10,
        )
        .unwrap();
        assert!(r.iter().all(|r| !r.pass && r.deviation == 0.0));
        assert!(r[0].note.as_deref().unwrap().contains("degenerate"));
    }

    #[test]
    fn numeric_suite_at_reference_point() {
        let reports = numeric_suite(&standard(2.0, 0.3, 0.7), 1e-10).unwrap();
        assert!(failing(&reports).is_empty(), "{:?}", failing(&reports));
        assert!(reports.len() >= 20);
        let names: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for expected in [
            "braid.yang_baxter",
            "bwma.skein.site1",
            "tla.contraction.plus",
            "bwma.ses.minus",
        ] {
            assert!(names.iter().any(|n| n == expected), "missing {expected}");
        }
    }

    #[test]
    fn numeric_suite_at_q1_skips_uncleared_square() {
        let reports = numeric_suite(&standard(1.0, 0.5, 1.5), 1e-10).unwrap();
        assert!(failing(&reports).is_empty(), "{:?}", failing(&reports));
        let skipped = reports
            .iter()
            .find(|r| r.name == "bwma.e_squared.site1")
            .unwrap();
        assert_eq!(skipped.note.as_deref(), Some("indeterminate at omega=0"));
        let p = standard(1.0, 0.5, 1.5);
        assert!(build_s9(&p).max_abs_diff(&build_sinv9(&p)).unwrap() < 1e-15);
    }

    #[test]
    fn cubic_annihilator_and_spectrum() {
        let p = standard(2.0, 1.1, 2.9);
        let s = build_s9(&p);
        assert!(check_cubic_annihilator_numeric(&s, 2.0, 1e-9).unwrap().pass);
        let spec = check_spectrum(&s, 2.0, 1e-9).unwrap();
        assert!(spec.pass, "{}", spec.deviation);
        let eig = hermitian_eigenvalues(&s, 1e-12).unwrap();
        for l in eig {
            assert!([2.0, -0.5, 0.25].iter().any(|r| (l - r).abs() < 1e-9));
        }
        // wrong roots fail
        assert!(!check_cubic_annihilator_numeric(&s, 3.0, 1e-9).unwrap().pass);
    }

    #[test]
    fn cubic_annihilator_on_reduced_diagonal_is_exact() {
        let q = 2.0f64;
        let a = ComplexMatrix::from_real(
            3,
            3,
            &[q, 0.0, 0.0, 0.0, q.powi(-2), 0.0, 0.0, 0.0, -1.0 / q],
        )
        .unwrap();
        let r = check_cubic_annihilator_numeric(&a, q, 1e-9).unwrap();
        assert_eq!(r.deviation, 0.0);
    }

    #[test]
    fn cubic_annihilator_degenerate_roots_at_q1() {
        let s = build_s9(&standard(1.0, 0.2, 0.3));
        assert!(check_cubic_annihilator_numeric(&s, 1.0, 1e-9).unwrap().pass);
    }

    #[test]
    fn exact_suite_standard_levels() {
        let reports = exact_suite(Levels::standard()).unwrap();
        assert!(failing(&reports).is_empty(), "{:?}", failing(&reports));
        assert!(reports
            .iter()
            .all(|r| r.mode == Mode::Exact && r.deviation == 0.0));
    }

    #[test]
    fn exact_suite_detects_corruption() {
        let levels = Levels::standard();
        let mut s = ring_s9(levels);
        let corrupted = s.get(0, 0) + &PhaseLaurent::t_pow(-6);
        s.set(0, 0, corrupted);
        let reports = exact_suite_for(&s, &ring_sinv9(levels), &ring_e9(levels)).unwrap();
        let inverse = reports
            .iter()
            .find(|r| r.name == "bwma.inverse.site1")
            .unwrap();
        assert!(!inverse.pass);
        assert!(inverse.deviation > 0.0);
        assert!(!inverse.residual.is_empty());
        assert!(
            inverse.residual[0].contains("t^-"),
            "{:?}",
            inverse.residual
        );
    }

    #[test]
    fn invalid_tolerance_rejected() {
        let p = standard(2.0, 0.0, 0.0);
        assert!(numeric_suite(&p, 0.0).is_err());
        assert!(numeric_suite(&p, -1.0).is_err());
    }

    #[test]
    fn halton_samples_in_range() {
        let s = quasirandom_samples(32);
        assert_eq!(s.len(), 32);
        assert!(s.iter().all(|&(q, a, b)| (0.2..=5.0).contains(&q)
            && (0.0..2.0 * PI).contains(&a)
            && (0.0..2.0 * PI).contains(&b)));
        assert_eq!(s[0].0, 0.2 + 2.4);
    }
}
