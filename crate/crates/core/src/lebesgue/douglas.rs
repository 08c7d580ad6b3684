//! Range-inclusion factorization `T1 = T2 D` and the positive contraction
//! `B = A^{1/2} C A^{1/2}` for `B <= A`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{frobenius, hermitian_part, hstack, numerical_rank, pinv_general, singular_values, CMatrix};
use crate::psd::{loewner_gap, PsdMatrix};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone)]
pub struct DouglasSolution {
    /// `D` with `T1 = T2 D`, of minimal norm and with `ran D ⊆ (ker T2)^⊥`.
    pub factor_d: CMatrix,
    /// `||D||^2`, the least `alpha` with `T1 T1* <= alpha T2 T2*`.
    pub alpha_min: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DouglasConditions {
    /// `||T1 - T2 D||_F`.
    pub reconstruction_error: f64,
    /// `||P_{ker T2} D||_F`; zero when `ran D ⊆ (ker T2)^⊥`.
    pub kernel_leakage: f64,
    pub rank_d: usize,
    pub rank_t1: usize,
    pub alpha_min: f64,
    /// `|alpha_min - sigma_max(D)^2|`.
    pub alpha_error: f64,
}

impl DouglasConditions {
    pub fn hold(&self, t1_norm: f64) -> bool {
        let scale = 1e-8 * (1.0 + t1_norm);
        self.reconstruction_error <= scale
            && self.kernel_leakage <= scale
            && self.rank_d == self.rank_t1
            && self.alpha_error <= 1e-10 * (1.0 + self.alpha_min)
    }
}

fn normalized(m: &CMatrix) -> CMatrix {
    let norm = frobenius(m);
    if norm > 0.0 {
        m.scale(1.0 / norm)
    } else {
        m.clone()
    }
}

/// Solves `T1 = T2 D` when `ran T1 ⊆ ran T2`.
pub fn douglas_solve(t1: &CMatrix, t2: &CMatrix, tol: &Tolerance) -> Result<DouglasSolution> {
    if t1.nrows() != t2.nrows() {
        return Err(Error::DimensionMismatch {
            expected: t2.nrows(),
            found: t1.nrows(),
        });
    }
    // Both blocks normalized so that a scale mismatch cannot hide rank.
    let base = numerical_rank(t2, tol.rel_rank, tol.abs_zero);
    let augmented = numerical_rank(
        &hstack(&normalized(t2), &normalized(t1)),
        tol.rel_rank,
        tol.abs_zero,
    );
    if augmented > base {
        return Err(Error::RangeInclusionViolated { augmented, base });
    }
    let factor_d = pinv_general(t2, tol.rel_rank, tol.abs_zero) * t1;
    let sigma_max = singular_values(&factor_d).into_iter().fold(0.0, f64::max);
    let solution = DouglasSolution {
        factor_d,
        alpha_min: sigma_max * sigma_max,
    };
    let conditions = solution.conditions(t1, t2, tol);
    if !conditions.hold(frobenius(t1)) {
        return Err(Error::NumericalBreakdown(format!(
            "factorization conditions fail: {conditions:?}"
        )));
    }
    Ok(solution)
}

impl DouglasSolution {
    pub fn conditions(&self, t1: &CMatrix, t2: &CMatrix, tol: &Tolerance) -> DouglasConditions {
        let d = &self.factor_d;
        let reconstruction_error = frobenius(&(t1 - t2 * d));
        let m2 = t2.ncols();
        let coimage = pinv_general(t2, tol.rel_rank, tol.abs_zero) * t2;
        let kernel_projection = CMatrix::identity(m2, m2) - coimage;
        let kernel_leakage = frobenius(&(kernel_projection * d));
        let sigma_max = singular_values(d).into_iter().fold(0.0, f64::max);
        DouglasConditions {
            reconstruction_error,
            kernel_leakage,
            rank_d: numerical_rank(d, tol.rel_rank, tol.abs_zero),
            rank_t1: numerical_rank(t1, tol.rel_rank, tol.abs_zero),
            alpha_min: self.alpha_min,
            alpha_error: (self.alpha_min - sigma_max * sigma_max).abs(),
        }
    }
}

/// The unique `C` with `0 <= C <= I`, supported on `ran A`, such that
/// `A^{1/2} C A^{1/2} = B`. Requires `B <= A`.
pub fn contract_factor(a: &PsdMatrix, b: &PsdMatrix) -> Result<CMatrix> {
    let gap = loewner_gap(b, a)?;
    let tol = a.tolerance();
    if gap < -tol.psd_slack * (1.0 + a.lambda_max()) {
        return Err(Error::NotDominated { min_eigenvalue: gap });
    }
    let r = a.pinv_sqrt();
    let p = a.range_projection();
    let c = &p * (r.entries() * b.effective() * r.entries()) * &p;
    Ok(hermitian_part(&c))
}
