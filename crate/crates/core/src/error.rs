use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: left is {left:?}, right is {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("site {site} out of range for a {n_sites}-site chain")]
    SiteOutOfRange { site: usize, n_sites: usize },

    #[error("site pairs overlap at site {site}")]
    OverlappingSites { site: usize },

    #[error("matrix is not Hermitian: max |m_ij - conj(m_ji)| = {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off_diagonal:e})"
    )]
    NotConverged { sweeps: usize, off_diagonal: f64 },

    #[error("matrix is singular: pivot {pivot:e} below tolerance")]
    Singular { pivot: f64 },

    #[error("state is not normalized: measured {measured}")]
    NotNormalized { measured: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("topological basis is not orthonormal: Gram deviation {deviation:e}")]
    BasisInconsistent {
        deviation: f64,
        gram: Vec<Vec<(f64, f64)>>,
    },

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
