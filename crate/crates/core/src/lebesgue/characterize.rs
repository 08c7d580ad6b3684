//! Absolute continuity and singularity, each decided by several independent
//! characterizations that must agree.

use serde::Serialize;

use super::decompose::decompose;
use super::parallel::{limit_ab, parallel_sum, SumFactorization};
use crate::eigen::jacobi_eigh;
use crate::error::{check_dims, Error, Result};
use crate::linalg::{column_space, frobenius, hstack, vstack, CMatrix};
use crate::psd::PsdMatrix;

/// `||[A]B - B||_F <= LIMIT_GAP_RTOL * (1 + ||B||_F)` counts as `[A]B = B`.
pub const LIMIT_GAP_RTOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcReport {
    pub verdict: bool,
    /// `ker A ⊆ ker B`: largest value of `<Bk, k>` over unit `k ∈ ker A`
    /// does not exceed the cutoff of `B`.
    pub kernel_inclusion: bool,
    pub kernel_form_max: f64,
    /// `ker C_A ∩ ran(A+B) = {0}`.
    pub contraction_kernel_trivial: bool,
    pub c_a_rank: usize,
    pub sum_rank: usize,
    /// `[A]B = B`.
    pub limit_agreement: bool,
    pub limit_gap: f64,
}

/// Decides `B << A`.
pub fn check_ac(a: &PsdMatrix, b: &PsdMatrix) -> Result<AcReport> {
    check_dims(a.dim(), b.dim())?;
    let tol = *a.tolerance();

    let k = a.kernel_vectors();
    let kernel_form_max = if k.ncols() == 0 {
        0.0
    } else {
        let compressed = k.adjoint() * b.effective() * &k;
        jacobi_eigh(&compressed).values[0].max(0.0)
    };
    let kernel_inclusion = kernel_form_max <= b.cutoff();

    let factorization = SumFactorization::new(a, b)?;
    let c_a_rank = factorization.c_a_rank();
    let sum_rank = factorization.sum().rank();

    let limit = limit_ab(a, b, &tol)?;
    let limit_gap = frobenius(&(limit.entries() - b.entries()));
    let limit_agreement = limit_gap <= LIMIT_GAP_RTOL * (1.0 + b.frobenius_norm());

    let report = AcReport {
        verdict: kernel_inclusion,
        kernel_inclusion,
        kernel_form_max,
        contraction_kernel_trivial: c_a_rank == sum_rank,
        c_a_rank,
        sum_rank,
        limit_agreement,
        limit_gap,
    };
    if report.contraction_kernel_trivial != kernel_inclusion || limit_agreement != kernel_inclusion {
        return Err(Error::CharacterizationDisagreement(format!("{report:?}")));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularReport {
    pub verdict: bool,
    /// `A:B = 0`.
    pub parallel_sum_vanishes: bool,
    pub parallel_sum_norm: f64,
    /// `M` exhausts `ran B^{1/2}`: `dim M = rank B`.
    pub multivalued_part_full: bool,
    pub m_dim: usize,
    pub rank_b: usize,
    /// `ran A ∩ ran B = {0}`: `rank [ran A | ran B] = rank A + rank B`.
    pub ranges_disjoint: bool,
    pub joint_rank: usize,
    pub rank_a: usize,
    /// Every `b ∈ ran B` is a limit of `Bx` along `Ax -> 0`: the least-squares
    /// system `Ax ≈ 0, Bx ≈ b` is consistent for each range basis vector.
    pub closure_reaches_range: bool,
    pub closure_residual_max: f64,
}

/// Decides `A ⊥ B`.
pub fn check_singular(a: &PsdMatrix, b: &PsdMatrix) -> Result<SingularReport> {
    check_dims(a.dim(), b.dim())?;
    let tol = *a.tolerance();
    let threshold = tol.subspace();

    let ps = parallel_sum(a, b)?;
    let parallel_sum_norm = ps.frobenius_norm();
    let parallel_sum_vanishes =
        parallel_sum_norm <= tol.psd_slack * (1.0 + a.frobenius_norm() + b.frobenius_norm());

    let parts = decompose(a, b)?;
    let m_dim = parts.m_basis.dim();
    let rank_b = b.rank();
    let rank_a = a.rank();

    let stacked = hstack(&a.range_vectors(), &b.range_vectors());
    let joint_rank = if stacked.ncols() == 0 {
        0
    } else {
        crate::linalg::singular_values(&stacked)
            .into_iter()
            .filter(|&s| s > threshold)
            .count()
    };

    let closure_residual_max = closure_residual(a, b);

    let report = SingularReport {
        verdict: parallel_sum_vanishes,
        parallel_sum_vanishes,
        parallel_sum_norm,
        multivalued_part_full: m_dim == rank_b,
        m_dim,
        rank_b,
        ranges_disjoint: joint_rank == rank_a + rank_b,
        joint_rank,
        rank_a,
        closure_reaches_range: closure_residual_max <= threshold,
        closure_residual_max,
    };
    let v = report.verdict;
    if report.multivalued_part_full != v || report.ranges_disjoint != v || report.closure_reaches_range != v {
        return Err(Error::CharacterizationDisagreement(format!("{report:?}")));
    }
    Ok(report)
}

/// Largest distance of `(0, b)` from `ran [Â; B]` over the range basis of `B`,
/// where `Â` is `A` rescaled to the magnitude of `B` (same kernel).
fn closure_residual(a: &PsdMatrix, b: &PsdMatrix) -> f64 {
    let n = a.dim();
    let rb = b.range_vectors();
    if rb.ncols() == 0 {
        return 0.0;
    }
    let a_hat = if a.is_zero() {
        CMatrix::zeros(n, n)
    } else {
        a.effective().scale(b.lambda_max() / a.lambda_max())
    };
    let system = vstack(&a_hat, &b.effective());
    let tol = a.tolerance();
    let smax = crate::linalg::spectral_norm(&system);
    let q = column_space(&system, tol.cutoff(smax));
    let rhs = vstack(&CMatrix::zeros(n, rb.ncols()), &rb);
    let residual = &rhs - &q * (q.adjoint() * &rhs);
    residual
        .column_iter()
        .map(|col| col.norm())
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MutualAcReport {
    pub holds: bool,
    /// `||P_{ker A_a} - P_{ker B_a}||_F`.
    pub projection_gap: f64,
    pub rank_a_abs: usize,
    pub rank_b_abs: usize,
}

/// Kernel-projection tolerance for [`check_mutual_ac`].
pub const MUTUAL_AC_TOL: f64 = 1e-8;

/// With `A_a` the `B`-absolutely continuous part of `A` and `B_a` the
/// `A`-absolutely continuous part of `B`, checks `A_a << B_a` and
/// `B_a << A_a`, i.e. `ker A_a = ker B_a`.
pub fn check_mutual_ac(a: &PsdMatrix, b: &PsdMatrix) -> Result<MutualAcReport> {
    check_dims(a.dim(), b.dim())?;
    let a_abs = decompose(b, a)?.b_abs;
    let b_abs = decompose(a, b)?.b_abs;
    let pa = a_abs.kernel_basis().projection();
    let pb = b_abs.kernel_basis().projection();
    let projection_gap = frobenius(&(pa - pb));
    Ok(MutualAcReport {
        holds: projection_gap <= MUTUAL_AC_TOL,
        projection_gap,
        rank_a_abs: a_abs.rank(),
        rank_b_abs: b_abs.rank(),
    })
}
