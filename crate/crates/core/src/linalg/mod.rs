//! Dense row-major matrices over complex floats or exact ring scalars.
//!
//! Everything here is desk scale: the largest operator is 81×81 (four
//! spin-1 sites), so no sparse formats or blocking.

mod eigen;
mod inverse;
mod vector;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::PhaseLaurent;

pub use eigen::hermitian_eigenvalues;
pub use inverse::small_inverse;
pub use vector::{compose_placements, place_bipartite, ComplexVector};

/// Scalar types a [`DenseMatrix`] can hold.
pub trait Entry:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Complex conjugate (identity on the real part of the ring).
    fn conj(&self) -> Self;
}

impl Entry for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
}

impl Entry for PhaseLaurent {
    fn conj(&self) -> Self {
        self.conjugate()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ComplexMatrix = DenseMatrix<Complex64>;
pub type RingMatrix = DenseMatrix<PhaseLaurent>;

impl<T: Entry> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(
            n,
            n,
            |i, j| if i == j { diag[i].clone() } else { T::zero() },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    /// Adds `value` into entry `(i, j)`.
    pub fn accumulate(&mut self, i: usize, j: usize, value: T) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = slot.clone() + value;
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.accumulate(i, j, a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b.clone())
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r2, c2) = rhs.shape();
        let mut out = Self::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a.clone() * b.clone());
                        }
                    }
                }
            }
        }
        out
    }
}

impl<T: Entry> Mul for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    /// Panics on a dimension mismatch; use [`DenseMatrix::matmul`] to recover.
    fn mul(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
        self.matmul(rhs).expect("matrix product")
    }
}

impl<T: Entry> Add for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn add(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<T: Entry> Sub for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn sub(self, rhs: &DenseMatrix<T>) -> DenseMatrix<T> {
        self.try_sub(rhs).expect("matrix difference")
    }
}

/// `I^{⊗(site−1)} ⊗ op ⊗ I^{⊗(n_sites−site−1)}` for a two-site operator on
/// sites `(site, site+1)`, sites numbered from 1.
pub fn embed_two_site<T: Entry>(
    op: &DenseMatrix<T>,
    site: usize,
    n_sites: usize,
    local_dim: usize,
) -> Result<DenseMatrix<T>> {
    let pair = local_dim * local_dim;
    if op.shape() != (pair, pair) {
        return Err(Error::DimensionMismatch {
            op: "embed_two_site",
            left: op.shape(),
            right: (pair, pair),
        });
    }
    if site == 0 || site + 1 > n_sites {
        return Err(Error::SiteOutOfRange { site, n_sites });
    }
    let left = DenseMatrix::identity(local_dim.pow(site as u32 - 1));
    let right = DenseMatrix::identity(local_dim.pow((n_sites - site - 1) as u32));
    Ok(left.kron(op).kron(&right))
}

/// Single-site embedding `I^{⊗(site−1)} ⊗ op ⊗ I^{⊗(n_sites−site)}`.
pub fn embed_site<T: Entry>(
    op: &DenseMatrix<T>,
    site: usize,
    n_sites: usize,
    local_dim: usize,
) -> Result<DenseMatrix<T>> {
    if op.shape() != (local_dim, local_dim) {
        return Err(Error::DimensionMismatch {
            op: "embed_site",
            left: op.shape(),
            right: (local_dim, local_dim),
        });
    }
    if site == 0 || site > n_sites {
        return Err(Error::SiteOutOfRange { site, n_sites });
    }
    let left = DenseMatrix::identity(local_dim.pow(site as u32 - 1));
    let right = DenseMatrix::identity(local_dim.pow((n_sites - site) as u32));
    Ok(left.kron(op).kron(&right))
}

/// Partial transpose on the first factor:
/// `⟨a b|ρ^{T_A}|a' b'⟩ = ⟨a' b|ρ|a b'⟩`.
pub fn partial_transpose<T: Entry>(
    rho: &DenseMatrix<T>,
    dim_a: usize,
    dim_b: usize,
) -> Result<DenseMatrix<T>> {
    let n = dim_a * dim_b;
    if rho.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            op: "partial_transpose",
            left: rho.shape(),
            right: (n, n),
        });
    }
    Ok(DenseMatrix::from_fn(n, n, |row, col| {
        let (a, b) = (row / dim_b, row % dim_b);
        let (a2, b2) = (col / dim_b, col % dim_b);
        rho.get(a2 * dim_b + b, a * dim_b + b2).clone()
    }))
}

impl ComplexMatrix {
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max absolute entry of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        Ok(self.try_sub(rhs)?.max_abs())
    }

    /// `max |m_ij − conj(m_ji)|`.
    pub fn hermitian_asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn apply(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.dim(), 1),
            });
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * v.entries()[j])
                    .sum::<Complex64>()
            })
            .collect();
        Ok(ComplexVector::new(entries))
    }
}

impl RingMatrix {
    pub fn eval(&self, q: f64, phi_nu: f64, phi_mu_lambda: f64) -> Result<ComplexMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.eval(q, phi_nu, phi_mu_lambda))
            .collect::<Result<Vec<_>>>()?;
        ComplexMatrix::new(self.rows, self.cols, data)
    }

    /// Total number of monomials across all entries.
    pub fn term_count(&self) -> usize {
        self.data.iter().map(PhaseLaurent::len).sum()
    }
}
