//! Temperley–Lieb and Birman–Wenzl–Murakami representations on spin-1
//! chains.
//!
//! The crate builds the 9×9 projector `E` and braid generator `S` family,
//! checks every algebra relation numerically and as exact polynomial
//! identities, computes the negativity of the generating two-qutrit states,
//! and constructs the three-dimensional topological basis on four sites
//! together with its reduced 3×3 operators.

pub mod entanglement;
pub mod error;
pub mod linalg;
pub mod relations;
pub mod reps;
pub mod scalar;
pub mod topo;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector, DenseMatrix, RingMatrix};
pub use reps::{Levels, RepParams, SpinLevel};
pub use scalar::PhaseLaurent;
