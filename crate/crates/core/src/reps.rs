//! Concrete matrices: the 4×4 six-vertex projector, the 9×9 projector and
//! braid generators on a pair of spin-1 sites, the cup vectors, and spin-1
//! angular momentum.
//!
//! Basis ordering: level `+1 → 0`, `0 → 1`, `−1 → 2`, and a two-site state
//! `|ab⟩` sits at index `3·idx(a) + idx(b)`.
//!
//! Each 9×9 operator has two constructors that are written out separately:
//! a floating-point one and an exact one over [`PhaseLaurent`]. Tests check
//! that evaluating the exact matrix reproduces the numeric one.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{embed_site, ComplexMatrix, ComplexVector, DenseMatrix, Entry, RingMatrix};
use crate::scalar::PhaseLaurent;

/// A spin-1 magnetic level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinLevel {
    Plus,
    Zero,
    Minus,
}

impl SpinLevel {
    pub const ALL: [SpinLevel; 3] = [SpinLevel::Plus, SpinLevel::Zero, SpinLevel::Minus];

    pub fn index(self) -> usize {
        match self {
            SpinLevel::Plus => 0,
            SpinLevel::Zero => 1,
            SpinLevel::Minus => 2,
        }
    }

    pub fn from_index(index: usize) -> Option<SpinLevel> {
        Self::ALL.get(index).copied()
    }

    /// Magnetic quantum number.
    pub fn value(self) -> i32 {
        1 - self.index() as i32
    }
}

impl fmt::Display for SpinLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinLevel::Plus => "+1",
            SpinLevel::Zero => "0",
            SpinLevel::Minus => "-1",
        })
    }
}

impl FromStr for SpinLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" => Ok(SpinLevel::Plus),
            "0" | "+0" | "-0" => Ok(SpinLevel::Zero),
            "-1" => Ok(SpinLevel::Minus),
            other => Err(Error::InvalidParameter(format!(
                "unknown spin level {other:?}"
            ))),
        }
    }
}

/// Index of the two-site state `|ab⟩`.
pub fn pair_index(a: SpinLevel, b: SpinLevel) -> usize {
    3 * a.index() + b.index()
}

/// Inverse of [`pair_index`].
pub fn pair_levels(index: usize) -> Option<(SpinLevel, SpinLevel)> {
    if index >= 9 {
        return None;
    }
    Some((
        SpinLevel::from_index(index / 3)?,
        SpinLevel::from_index(index % 3)?,
    ))
}

/// Assignment of `(λ, μ, ν)` to a permutation of the three levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Levels {
    lambda: SpinLevel,
    mu: SpinLevel,
    nu: SpinLevel,
}

impl Levels {
    pub fn new(lambda: SpinLevel, mu: SpinLevel, nu: SpinLevel) -> Result<Self> {
        if lambda == mu || mu == nu || lambda == nu {
            return Err(Error::InvalidParameter(format!(
                "levels ({lambda},{mu},{nu}) are not a permutation of {{+1, 0, -1}}"
            )));
        }
        Ok(Levels { lambda, mu, nu })
    }

    /// `λ = +1, μ = −1, ν = 0`.
    pub fn standard() -> Self {
        Levels {
            lambda: SpinLevel::Plus,
            mu: SpinLevel::Minus,
            nu: SpinLevel::Zero,
        }
    }

    pub fn all() -> Vec<Levels> {
        let mut out = Vec::with_capacity(6);
        for lambda in SpinLevel::ALL {
            for mu in SpinLevel::ALL {
                for nu in SpinLevel::ALL {
                    if let Ok(l) = Levels::new(lambda, mu, nu) {
                        out.push(l);
                    }
                }
            }
        }
        out
    }

    pub fn lambda(&self) -> SpinLevel {
        self.lambda
    }

    pub fn mu(&self) -> SpinLevel {
        self.mu
    }

    pub fn nu(&self) -> SpinLevel {
        self.nu
    }
}

impl fmt::Display for Levels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.lambda, self.mu, self.nu)
    }
}

impl FromStr for Levels {
    type Err = Error;

    /// Parses `"+1,-1,0"` as `(λ, μ, ν)`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidParameter(format!(
                "levels {s:?} must have three entries"
            )));
        }
        Levels::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

/// One member of the representation family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepParams {
    q: f64,
    phi_nu: f64,
    phi_mu_lambda: f64,
    levels: Levels,
}

impl RepParams {
    pub fn new(q: f64, phi_nu: f64, phi_mu_lambda: f64, levels: Levels) -> Result<Self> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidParameter("q must be positive".into()));
        }
        if !phi_nu.is_finite() || !phi_mu_lambda.is_finite() {
            return Err(Error::InvalidParameter("phases must be finite".into()));
        }
        Ok(RepParams {
            q,
            phi_nu,
            phi_mu_lambda,
            levels,
        })
    }

    /// Phase choice under which the projector coincides with the earlier
    /// construction parametrized by two angles `φ₁, φ₂`:
    /// `φ_ν = φ₂ − φ₁ + π`, `φ_μλ = −2φ₁`, `(λ, μ, ν) = (+1, −1, 0)`.
    pub fn from_two_phases(q: f64, phi1: f64, phi2: f64) -> Result<Self> {
        Self::new(q, phi2 - phi1 + PI, -2.0 * phi1, Levels::standard())
    }

    /// The point where the topological basis is a spin singlet.
    pub fn singlet_point() -> Self {
        RepParams {
            q: 1.0,
            phi_nu: PI,
            phi_mu_lambda: 0.0,
            levels: Levels::standard(),
        }
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn phi_nu(&self) -> f64 {
        self.phi_nu
    }

    pub fn phi_mu_lambda(&self) -> f64 {
        self.phi_mu_lambda
    }

    pub fn levels(&self) -> Levels {
        self.levels
    }

    pub fn with_phi_mu_lambda(&self, phi_mu_lambda: f64) -> Self {
        RepParams {
            phi_mu_lambda,
            ..*self
        }
    }

    pub fn with_levels(&self, levels: Levels) -> Self {
        RepParams { levels, ..*self }
    }

    /// `d = q + 1 + q⁻¹`.
    pub fn loop_value(&self) -> f64 {
        self.q + 1.0 + 1.0 / self.q
    }

    /// `ω = q − q⁻¹`.
    pub fn omega(&self) -> f64 {
        self.q - 1.0 / self.q
    }

    /// `σ = q⁻²`.
    pub fn sigma(&self) -> f64 {
        self.q.powi(-2)
    }
}

fn cis(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Unit vector `d^{−1/2}(q^{1/2}|λμ⟩ + e^{iφ_ν}|νν⟩ + q^{−1/2}e^{iφ_μλ}|μλ⟩)`.
///
/// With `include_v_phase = false` the `φ_μλ` phase is dropped, giving the
/// normalized cup used by the topological basis.
pub fn build_psi(params: &RepParams, include_v_phase: bool) -> ComplexVector {
    let Levels { lambda, mu, nu } = params.levels;
    let q = params.q;
    let v_phase = if include_v_phase {
        params.phi_mu_lambda
    } else {
        0.0
    };
    let norm = params.loop_value().sqrt().recip();
    let mut entries = vec![Complex64::zero(); 9];
    entries[pair_index(lambda, mu)] = real(q.sqrt() * norm);
    entries[pair_index(nu, nu)] = cis(params.phi_nu) * norm;
    entries[pair_index(mu, lambda)] = cis(v_phase) * (norm / q.sqrt());
    ComplexVector::new(entries)
}

/// Temperley–Lieb generator `E = d|Ψ⟩⟨Ψ|` on two spin-1 sites.
pub fn build_e9(params: &RepParams) -> ComplexMatrix {
    let psi = build_psi(params, true);
    psi.outer(&psi).scale(&real(params.loop_value()))
}

/// Accumulates bra-ket terms `c·|ab⟩⟨ce|` into a 9×9 matrix.
struct KetBra<T> {
    m: DenseMatrix<T>,
}

impl<T: Entry> KetBra<T> {
    fn new() -> Self {
        KetBra {
            m: DenseMatrix::zeros(9, 9),
        }
    }

    fn add(&mut self, ket: (SpinLevel, SpinLevel), bra: (SpinLevel, SpinLevel), c: T) -> &mut Self {
        self.m
            .accumulate(pair_index(ket.0, ket.1), pair_index(bra.0, bra.1), c);
        self
    }

    fn finish(self) -> DenseMatrix<T> {
        self.m
    }
}

/// Braid generator `S` on two spin-1 sites.
pub fn build_s9(params: &RepParams) -> ComplexMatrix {
    let Levels {
        lambda: l,
        mu: m,
        nu: n,
    } = params.levels;
    let q = params.q;
    let pm = params.phi_mu_lambda;
    let pn = params.phi_nu;
    let mut s = KetBra::new();
    s.add((l, l), (l, l), real(q))
        .add((m, m), (m, m), real(q))
        .add((n, n), (n, n), real(1.0))
        .add((n, l), (n, l), real(q - 1.0 / q))
        .add((m, n), (m, n), real(q - 1.0 / q))
        .add(
            (m, l),
            (m, l),
            real((q - 1.0).powi(2) * (q + 1.0) / (q * q)),
        )
        .add((l, n), (n, l), cis(-pm / 2.0))
        .add((n, m), (m, n), cis(-pm / 2.0))
        .add((n, l), (l, n), cis(pm / 2.0))
        .add((m, n), (n, m), cis(pm / 2.0))
        .add((l, m), (m, l), cis(-pm) / q)
        .add((m, l), (l, m), cis(pm) / q);
    let mix = -(q * q - 1.0) * q.powf(-1.5);
    s.add((n, n), (m, l), cis(pn - pm) * mix)
        .add((m, l), (n, n), cis(pm - pn) * mix);
    s.finish()
}

/// Inverse braid generator `S⁻¹` on two spin-1 sites.
pub fn build_sinv9(params: &RepParams) -> ComplexMatrix {
    let Levels {
        lambda: l,
        mu: m,
        nu: n,
    } = params.levels;
    let q = params.q;
    let pm = params.phi_mu_lambda;
    let pn = params.phi_nu;
    let mut s = KetBra::new();
    s.add((l, l), (l, l), real(1.0 / q))
        .add((m, m), (m, m), real(1.0 / q))
        .add((n, n), (n, n), real(1.0))
        .add((l, n), (l, n), real(1.0 / q - q))
        .add((n, m), (n, m), real(1.0 / q - q))
        .add((l, m), (l, m), real((q - 1.0).powi(2) * (q + 1.0) / q))
        .add((l, n), (n, l), cis(-pm / 2.0))
        .add((n, m), (m, n), cis(-pm / 2.0))
        .add((n, l), (l, n), cis(pm / 2.0))
        .add((m, n), (n, m), cis(pm / 2.0))
        .add((l, m), (m, l), cis(-pm) * q)
        .add((m, l), (l, m), cis(pm) * q);
    let mix = (q * q - 1.0) / q.sqrt();
    s.add((l, m), (n, n), cis(-pn) * mix)
        .add((n, n), (l, m), cis(pn) * mix);
    s.finish()
}

/// Unnormalized exact cup `d^{1/2}|Ψ⟩ = t|λμ⟩ + u|νν⟩ + t⁻¹v|μλ⟩`.
pub fn ring_cup(levels: Levels, include_v_phase: bool) -> Vec<PhaseLaurent> {
    let Levels { lambda, mu, nu } = levels;
    let mut c = vec![PhaseLaurent::zero(); 9];
    c[pair_index(lambda, mu)] = PhaseLaurent::t_pow(1);
    c[pair_index(nu, nu)] = PhaseLaurent::u_pow(1);
    let v = if include_v_phase {
        PhaseLaurent::v_pow(1)
    } else {
        PhaseLaurent::one()
    };
    c[pair_index(mu, lambda)] = PhaseLaurent::t_pow(-1) * v;
    c
}

/// Exact `E = d|Ψ⟩⟨Ψ|`, i.e. the outer product of [`ring_cup`] with its
/// conjugate.
pub fn ring_e9(levels: Levels) -> RingMatrix {
    let c = ring_cup(levels, true);
    RingMatrix::from_fn(9, 9, |i, j| &c[i] * &c[j].conjugate())
}

fn t_poly(terms: &[(i32, i64)]) -> PhaseLaurent {
    PhaseLaurent::from_t_terms(terms)
}

/// Exact braid generator; `t = q^{1/2}`, `u = e^{iφ_ν}`, `w = e^{iφ_μλ/2}`.
pub fn ring_s9(levels: Levels) -> RingMatrix {
    let Levels {
        lambda: l,
        mu: m,
        nu: n,
    } = levels;
    let w = PhaseLaurent::w_pow;
    let u = PhaseLaurent::u_pow;
    let omega = t_poly(&[(2, 1), (-2, -1)]);
    // (q−1)²(q+1)q⁻² = q − 1 − q⁻¹ + q⁻²
    let diag_ml = t_poly(&[(2, 1), (0, -1), (-2, -1), (-4, 1)]);
    // −q^{−3/2}(q²−1) = −q^{1/2} + q^{−3/2}
    let mix = t_poly(&[(1, -1), (-3, 1)]);
    let mut s = KetBra::new();
    s.add((l, l), (l, l), PhaseLaurent::t_pow(2))
        .add((m, m), (m, m), PhaseLaurent::t_pow(2))
        .add((n, n), (n, n), PhaseLaurent::one())
        .add((n, l), (n, l), omega.clone())
        .add((m, n), (m, n), omega)
        .add((m, l), (m, l), diag_ml)
        .add((l, n), (n, l), w(-1))
        .add((n, m), (m, n), w(-1))
        .add((n, l), (l, n), w(1))
        .add((m, n), (n, m), w(1))
        .add((l, m), (m, l), PhaseLaurent::t_pow(-2) * w(-2))
        .add((m, l), (l, m), PhaseLaurent::t_pow(-2) * w(2))
        .add((n, n), (m, l), &mix * &(u(1) * w(-2)))
        .add((m, l), (n, n), &mix * &(u(-1) * w(2)));
    s.finish()
}

/// Exact inverse braid generator.
pub fn ring_sinv9(levels: Levels) -> RingMatrix {
    let Levels {
        lambda: l,
        mu: m,
        nu: n,
    } = levels;
    let w = PhaseLaurent::w_pow;
    let u = PhaseLaurent::u_pow;
    let neg_omega = t_poly(&[(-2, 1), (2, -1)]);
    // (q−1)²(q+1)q⁻¹ = q² − q − 1 + q⁻¹
    let diag_lm = t_poly(&[(4, 1), (2, -1), (0, -1), (-2, 1)]);
    // q^{−1/2}(q²−1) = q^{3/2} − q^{−1/2}
    let mix = t_poly(&[(3, 1), (-1, -1)]);
    let mut s = KetBra::new();
    s.add((l, l), (l, l), PhaseLaurent::t_pow(-2))
        .add((m, m), (m, m), PhaseLaurent::t_pow(-2))
        .add((n, n), (n, n), PhaseLaurent::one())
        .add((l, n), (l, n), neg_omega.clone())
        .add((n, m), (n, m), neg_omega)
        .add((l, m), (l, m), diag_lm)
        .add((l, n), (n, l), w(-1))
        .add((n, m), (m, n), w(-1))
        .add((n, l), (l, n), w(1))
        .add((m, n), (n, m), w(1))
        .add((l, m), (m, l), PhaseLaurent::t_pow(2) * w(-2))
        .add((m, l), (l, m), PhaseLaurent::t_pow(2) * w(2))
        .add((l, m), (n, n), &mix * &u(-1))
        .add((n, n), (l, m), &mix * &u(1));
    s.finish()
}

/// Six-vertex Temperley–Lieb generator on two spin-1/2 sites, basis
/// `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`, with `η = e^{i·eta_phase}` on the `(↑↓, ↓↑)` entry.
pub fn build_e4(q: f64, eta_phase: f64) -> Result<ComplexMatrix> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let eta = cis(eta_phase);
    let mut e = ComplexMatrix::zeros(4, 4);
    e.set(1, 1, real(q));
    e.set(1, 2, eta);
    e.set(2, 1, eta.conj());
    e.set(2, 2, real(1.0 / q));
    Ok(e)
}

/// Spin-1/2 cup `d₂^{−1/2}(q^{1/2}|↑↓⟩ + q^{−1/2}e^{−iφ}|↓↑⟩)` with `d₂ = q + q⁻¹`.
pub fn build_psi4(q: f64, eta_phase: f64) -> ComplexVector {
    let norm = (q + 1.0 / q).sqrt().recip();
    let mut entries = vec![Complex64::zero(); 4];
    entries[1] = real(q.sqrt() * norm);
    entries[2] = cis(-eta_phase) * (norm / q.sqrt());
    ComplexVector::new(entries)
}

#[derive(Clone, Debug)]
pub struct SpinOperators {
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

/// Spin-1 matrices (ħ = 1) in the `+1, 0, −1` basis.
pub fn spin1_site_operators() -> SpinOperators {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let sx = ComplexMatrix::from_real(3, 3, &[0.0, r, 0.0, r, 0.0, r, 0.0, r, 0.0]).unwrap();
    let i = Complex64::i();
    let z = Complex64::zero();
    let sy = ComplexMatrix::new(3, 3, vec![z, -i * r, z, i * r, z, -i * r, z, i * r, z]).unwrap();
    let sz =
        ComplexMatrix::from_real(3, 3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0]).unwrap();
    SpinOperators { sx, sy, sz }
}

/// Total `S² = S_x² + S_y² + S_z²` and `S_z` for an `n_sites` spin-1 chain.
pub fn total_spin_operators(n_sites: usize) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let ops = spin1_site_operators();
    let dim = 3usize.pow(n_sites as u32);
    let total = |op: &ComplexMatrix| -> Result<ComplexMatrix> {
        (1..=n_sites).try_fold(ComplexMatrix::zeros(dim, dim), |acc, site| {
            Ok(&acc + &embed_site(op, site, n_sites, 3)?)
        })
    };
    let (x, y, z) = (total(&ops.sx)?, total(&ops.sy)?, total(&ops.sz)?);
    let s2 = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
    Ok((s2, z))
}
