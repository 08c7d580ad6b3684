//! The canonical Lebesgue decomposition `B = B_a + B_s` with respect to `A`.
//!
//! With `J_B* = B^{1/2}` acting on `ran B^{1/2}`, the multivalued part of the
//! map `Ax -> Bx` is `M = span(B^{1/2} ker A)`. For `P` the orthogonal
//! projection onto `M`:
//!
//! ```text
//! B_a = B^{1/2} (I - P) B^{1/2},    B_s = B^{1/2} P B^{1/2}.
//! ```

use crate::error::{check_dims, Result};
use crate::linalg::CMatrix;
use crate::psd::PsdMatrix;
use crate::subspace::SubspaceBasis;

#[derive(Debug, Clone)]
pub struct DecompositionResult {
    /// `B_a`, the `A`-absolutely continuous part.
    pub b_abs: PsdMatrix,
    /// `B_s`, the `A`-singular part.
    pub b_sing: PsdMatrix,
    /// Orthonormal basis of `M = span(B^{1/2} ker A)`.
    pub m_basis: SubspaceBasis,
    pub projection_p: CMatrix,
    pub sqrt_b: PsdMatrix,
}

pub fn decompose(a: &PsdMatrix, b: &PsdMatrix) -> Result<DecompositionResult> {
    check_dims(a.dim(), b.dim())?;
    let n = a.dim();
    let tol = b.tolerance();
    let sqrt_b = b.sqrt();
    let root = sqrt_b.effective();
    let image = &root * a.kernel_vectors();
    // Columns of B^{1/2} K below the square-root cutoff are noise in ker B.
    let m_basis = SubspaceBasis::span_of(&image, sqrt_b.cutoff());
    let projection_p = m_basis.projection();

    let identity = CMatrix::identity(n, n);
    let continuous = (&identity - &projection_p) * &root;
    let singular = &projection_p * &root;
    let b_abs = PsdMatrix::derived(&(continuous.adjoint() * &continuous), b.lambda_max(), tol)?;
    let b_sing = PsdMatrix::derived(&(singular.adjoint() * &singular), b.lambda_max(), tol)?;
    Ok(DecompositionResult {
        b_abs,
        b_sing,
        m_basis,
        projection_p,
        sqrt_b,
    })
}

/// Least `alpha` with `B_a <= alpha A`: `lambda_max(A^{+1/2} B_a A^{+1/2})`.
pub fn domination_alpha(a: &PsdMatrix, b: &PsdMatrix) -> Result<f64> {
    let parts = decompose(a, b)?;
    let r = a.pinv_sqrt();
    let m = r.entries() * parts.b_abs.effective() * r.entries();
    Ok(crate::eigen::jacobi_eigh(&m)
        .values
        .first()
        .copied()
        .unwrap_or(0.0)
        .max(0.0))
}
