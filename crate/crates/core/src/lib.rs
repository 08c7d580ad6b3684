//! Lebesgue-type decomposition of positive semidefinite matrices.
//!
//! Given Hermitian PSD matrices `A` and `B`, the crate splits
//! `B = B_a + B_s` into a part absolutely continuous with respect to `A`
//! (`ker A ⊆ ker B_a`, maximal with this property) and a part singular to
//! `A` (no nonzero PSD matrix lies below both). Around the decomposition sit
//! the parallel sum `A:B`, the almost-dominated limit `[A]B = lim (nA):B`,
//! range-inclusion factorization, and adapters for Hermitian forms, finitely
//! additive measures on finite algebras, and positive functionals on
//! finite-dimensional *-algebras.
//!
//! ```
//! use lebdecomp::{decompose, linalg::real_diag, make_psd, Tolerance};
//!
//! let tol = Tolerance::default();
//! let a = make_psd(&real_diag(&[1.0, 0.0]), &tol).unwrap();
//! let b = make_psd(&real_diag(&[1.0, 1.0]), &tol).unwrap();
//! let parts = decompose(&a, &b).unwrap();
//! assert_eq!(parts.b_abs.rank(), 1);
//! assert_eq!(parts.b_sing.rank(), 1);
//! ```

pub mod adapters;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod io;
pub mod lebesgue;
pub mod linalg;
pub mod psd;
pub mod subspace;
pub mod tolerance;

pub use error::{Error, Result};
pub use lebesgue::*;
pub use psd::{kernel_basis, make_psd, pinv, project_onto, psd_leq, range_basis, sqrt_psd, PsdMatrix};
pub use subspace::SubspaceBasis;
pub use tolerance::Tolerance;
