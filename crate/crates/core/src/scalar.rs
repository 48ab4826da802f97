//! Exact scalars: integer Laurent polynomials in `t = q^{1/2}` with phase
//! monomials `u = e^{iφ_ν}` and `w = e^{iφ_μλ/2}`.
//!
//! Every matrix entry of the representations is an integer combination of
//! half-integer powers of `q` times these phases, so relations between the
//! matrices can be checked as polynomial identities without sampling.
//!
//! The φ_μλ phase is tracked in half units because the braid generator
//! carries `e^{±iφ_μλ/2}` entries. `v = e^{iφ_μλ}` is available as `w²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponents of `(t, u, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub t: i32,
    pub u: i32,
    pub w: i32,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { t: 0, u: 0, w: 0 };

    pub const fn new(t: i32, u: i32, w: i32) -> Self {
        Exponent { t, u, w }
    }

    fn add(self, rhs: Exponent) -> Exponent {
        Exponent::new(self.t + rhs.t, self.u + rhs.u, self.w + rhs.w)
    }
}

/// Element of `ℤ[t^{±1}, u^{±1}, w^{±1}]` in canonical form: no stored
/// coefficient is zero, so equality is term-map equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhaseLaurent {
    terms: BTreeMap<Exponent, i64>,
}

impl PhaseLaurent {
    pub fn monomial(coeff: i64, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        PhaseLaurent { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, Exponent::ZERO)
    }

    /// `t^a = q^{a/2}`.
    pub fn t_pow(a: i32) -> Self {
        Self::monomial(1, Exponent::new(a, 0, 0))
    }

    /// `q^k = t^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::t_pow(2 * k)
    }

    /// `u^m = e^{i m φ_ν}`.
    pub fn u_pow(m: i32) -> Self {
        Self::monomial(1, Exponent::new(0, m, 0))
    }

    /// `w^n = e^{i n φ_μλ / 2}`.
    pub fn w_pow(n: i32) -> Self {
        Self::monomial(1, Exponent::new(0, 0, n))
    }

    /// `v^n = e^{i n φ_μλ} = w^{2n}`.
    pub fn v_pow(n: i32) -> Self {
        Self::w_pow(2 * n)
    }

    /// Builds a polynomial in `t` alone from `(exponent, coefficient)` pairs.
    pub fn from_t_terms(terms: &[(i32, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(a, c)| {
            acc + Self::monomial(c, Exponent::new(a, 0, 0))
        })
    }

    /// `ω = q − q⁻¹`.
    pub fn omega() -> Self {
        Self::from_t_terms(&[(2, 1), (-2, -1)])
    }

    /// `σ = q⁻²`.
    pub fn sigma() -> Self {
        Self::q_pow(-2)
    }

    pub fn sigma_inv() -> Self {
        Self::q_pow(2)
    }

    /// Spin-1 loop value `d = q + 1 + q⁻¹`.
    pub fn loop_value() -> Self {
        Self::from_t_terms(&[(2, 1), (0, 1), (-2, 1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients, i.e. the value at `q = 1` with all phases 0.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Complex conjugation for real positive `q`: `t` is fixed, phases invert.
    pub fn conjugate(&self) -> Self {
        PhaseLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (Exponent::new(e.t, -e.u, -e.w), c))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        PhaseLaurent {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
        }
    }

    /// Evaluates at `q > 0` and the two phases (radians).
    pub fn eval(&self, q: f64, phi_nu: f64, phi_mu_lambda: f64) -> Result<Complex64> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "q must be positive, got {q}"
            )));
        }
        let t = q.sqrt();
        Ok(self
            .terms
            .iter()
            .map(|(e, &c)| {
                let modulus = c as f64 * t.powi(e.t);
                let angle = e.u as f64 * phi_nu + e.w as f64 * phi_mu_lambda / 2.0;
                Complex64::from_polar(modulus, angle)
            })
            .sum())
    }

    fn add_term(&mut self, exp: Exponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }
}

impl Zero for PhaseLaurent {
    fn zero() -> Self {
        PhaseLaurent::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PhaseLaurent {
    fn one() -> Self {
        PhaseLaurent::constant(1)
    }
}

impl AddAssign<&PhaseLaurent> for PhaseLaurent {
    fn add_assign(&mut self, rhs: &PhaseLaurent) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add<&PhaseLaurent> for &PhaseLaurent {
    type Output = PhaseLaurent;

    fn add(self, rhs: &PhaseLaurent) -> PhaseLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PhaseLaurent {
    type Output = PhaseLaurent;

    fn add(mut self, rhs: PhaseLaurent) -> PhaseLaurent {
        self += &rhs;
        self
    }
}

impl Neg for PhaseLaurent {
    type Output = PhaseLaurent;

    fn neg(self) -> PhaseLaurent {
        self.scale(-1)
    }
}

impl Neg for &PhaseLaurent {
    type Output = PhaseLaurent;

    fn neg(self) -> PhaseLaurent {
        self.scale(-1)
    }
}

impl Sub<&PhaseLaurent> for &PhaseLaurent {
    type Output = PhaseLaurent;

    fn sub(self, rhs: &PhaseLaurent) -> PhaseLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for PhaseLaurent {
    type Output = PhaseLaurent;

    fn sub(self, rhs: PhaseLaurent) -> PhaseLaurent {
        &self - &rhs
    }
}

impl Mul<&PhaseLaurent> for &PhaseLaurent {
    type Output = PhaseLaurent;

    fn mul(self, rhs: &PhaseLaurent) -> PhaseLaurent {
        let mut out = PhaseLaurent::zero();
        for (&ea, &ca) in &self.terms {
            for (&eb, &cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for PhaseLaurent {
    type Output = PhaseLaurent;

    fn mul(self, rhs: PhaseLaurent) -> PhaseLaurent {
        &self * &rhs
    }
}

impl fmt::Display for PhaseLaurent {
    /// Sorted sum of monomials, e.g. `2*t^-2*u^1 - w^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, &c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = [("t", e.t), ("u", e.u), ("w", e.w)]
                .iter()
                .filter(|(_, p)| *p != 0)
                .map(|(v, p)| format!("{v}^{p}"))
                .collect();
            let mag = c.unsigned_abs();
            let body = match (mag, vars.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => vars.join("*"),
                (_, false) => format!("{mag}*{}", vars.join("*")),
            };
            match (i, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
