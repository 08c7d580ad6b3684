//! Uniform approximation of `By` by elements `Az`.
//!
//! On the set `{x : <(A+B)x, x> <= 1}` the worst-case error of replacing
//! `<By, x>` by `<Az, x>` is `||(A+B)^{+1/2} (By - Az)||`. It can be driven to
//! zero for every `y` exactly when `B << A`.

use crate::error::{check_dims, Result};
use crate::linalg::{pinv_general, CVector};
use crate::psd::PsdMatrix;

#[derive(Debug, Clone)]
pub struct RnWitness {
    /// Least-squares approximant.
    pub z: CVector,
    /// `||(A+B)^{+1/2}(By - Az)||`, minimal over `z`.
    pub residual: f64,
}

pub fn rn_witness(a: &PsdMatrix, b: &PsdMatrix, y: &CVector) -> Result<RnWitness> {
    check_dims(a.dim(), b.dim())?;
    check_dims(a.dim(), y.len())?;
    let tol = a.tolerance();
    let root_inv = a.sum(b)?.pinv_sqrt();
    let r = root_inv.entries();
    let system = r * a.effective();
    let target = r * (b.effective() * y);
    let z = pinv_general(&system, tol.rel_rank, tol.abs_zero) * &target;
    let residual = (&target - &system * &z).norm();
    Ok(RnWitness { z, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{real_diag, real_vector, CMatrix};
    use crate::psd::make_psd;
    use crate::tolerance::Tolerance;

    fn psd(m: CMatrix) -> PsdMatrix {
        make_psd(&m, &Tolerance::default()).unwrap()
    }

    #[test]
    fn identity_pair() {
        let i = psd(CMatrix::identity(2, 2));
        let w = rn_witness(&i, &i, &real_vector(&[1.0, 0.0])).unwrap();
        assert!((&w.z - real_vector(&[1.0, 0.0])).norm() < 1e-14);
        assert!(w.residual < 1e-14);
    }

    #[test]
    fn singular_pair_has_unit_residual() {
        let a = psd(real_diag(&[1.0, 0.0]));
        let b = psd(real_diag(&[0.0, 1.0]));
        let w = rn_witness(&a, &b, &real_vector(&[0.0, 1.0])).unwrap();
        assert!((w.residual - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_b() {
        let a = psd(real_diag(&[1.0, 2.0]));
        let b = psd(CMatrix::zeros(2, 2));
        let w = rn_witness(&a, &b, &real_vector(&[3.0, -1.0])).unwrap();
        assert_eq!(w.residual, 0.0);
        assert!(w.z.norm() == 0.0);
    }

    #[test]
    fn vector_length_checked() {
        let a = psd(CMatrix::identity(2, 2));
        assert!(rn_witness(&a, &a, &real_vector(&[1.0])).is_err());
    }
}
