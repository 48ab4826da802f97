use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        ComplexVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        ComplexVector {
            entries: vec![Complex64::new(0.0, 0.0); dim],
        }
    }

    /// Standard basis vector.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        ComplexVector {
            entries: self.entries.iter().map(|z| z * k).collect(),
        }
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(Complex64::new(k, 0.0))
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(ComplexVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "vector add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "vector sub", |a, b| a - b)
    }

    /// Componentwise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "hadamard", |a, b| a * b)
    }

    /// `|self⟩⟨other|`.
    pub fn outer(&self, other: &Self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), other.dim(), |i, j| {
            self.entries[i] * other.entries[j].conj()
        })
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        ComplexVector { entries }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self
            .sub(other)?
            .entries
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max))
    }
}

fn digit(index: usize, site: usize, n_sites: usize, local_dim: usize) -> usize {
    index / local_dim.pow((n_sites - site) as u32) % local_dim
}

/// Partially-filled product vector carrying `phi` on sites `(i, j)`.
///
/// `result[b₁…b_N] = phi[b_i·local_dim + b_j]`, independent of the other
/// digits. Composing placements on disjoint pairs with
/// [`ComplexVector::hadamard`] yields the product state; see
/// [`compose_placements`].
pub fn place_bipartite(
    phi: &ComplexVector,
    sites: (usize, usize),
    n_sites: usize,
    local_dim: usize,
) -> Result<ComplexVector> {
    let (i, j) = sites;
    if phi.dim() != local_dim * local_dim {
        return Err(Error::DimensionMismatch {
            op: "place_bipartite",
            left: (phi.dim(), 1),
            right: (local_dim * local_dim, 1),
        });
    }
    if i == 0 || i > n_sites {
        return Err(Error::SiteOutOfRange { site: i, n_sites });
    }
    if j <= i || j > n_sites {
        return Err(Error::SiteOutOfRange { site: j, n_sites });
    }
    let dim = local_dim.pow(n_sites as u32);
    let entries = (0..dim)
        .map(|b| {
            let bi = digit(b, i, n_sites, local_dim);
            let bj = digit(b, j, n_sites, local_dim);
            phi.entries[bi * local_dim + bj]
        })
        .collect();
    Ok(ComplexVector::new(entries))
}

/// Product state of two-site vectors placed on disjoint site pairs.
pub fn compose_placements(
    placements: &[(&ComplexVector, (usize, usize))],
    n_sites: usize,
    local_dim: usize,
) -> Result<ComplexVector> {
    let mut used = vec![false; n_sites + 1];
    let mut out = ComplexVector::new(vec![
        Complex64::new(1.0, 0.0);
        local_dim.pow(n_sites as u32)
    ]);
    for &(phi, (i, j)) in placements {
        let placed = place_bipartite(phi, (i, j), n_sites, local_dim)?;
        for s in [i, j] {
            if used[s] {
                return Err(Error::OverlappingSites { site: s });
            }
            used[s] = true;
        }
        out = out.hadamard(&placed)?;
    }
    Ok(out)
}
