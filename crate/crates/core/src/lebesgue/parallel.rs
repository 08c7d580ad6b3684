//! Parallel sums `A:B` and the almost-dominated limit `[A]B = lim (nA):B`.
//!
//! `A:B` is evaluated in the eigenbasis of `A`. Writing `B` in blocks over
//! `ran A (+) ker A`, minimizing the variational form over the `ker A`
//! component first leaves the Schur complement
//! `S = B11 - B12 B22^+ B21` (the short of `B` to `ran A`), and then
//! `A:B = U (Λ:S) U*` with `Λ:S = S - S (Λ + S)^{-1} S`, where `Λ + S` is
//! positive definite. `S` does not depend on the scaling of `A`, so
//! `(cA):B` for huge `c` stays accurate; the closed form `A (A+B)^+ B`
//! loses the `ker A` part of `B` once `c * ||A||` dwarfs `||B||` by the
//! rank cutoff.

use nalgebra::Cholesky;

use crate::error::{check_dims, Error, Result};
use crate::linalg::{frobenius, hermitian_part, real_diag, CMatrix};
use crate::psd::PsdMatrix;
use crate::tolerance::Tolerance;

/// Hard cap on doublings in [`limit_ab`].
pub const MAX_DOUBLINGS: usize = 60;

/// Precomputed data for evaluating `(cA):B` at many scales `c`.
#[derive(Debug, Clone)]
pub struct ParallelSumPlan {
    dim: usize,
    range: CMatrix,
    values: Vec<f64>,
    schur: CMatrix,
    a_max: f64,
    b_max: f64,
    tol: Tolerance,
}

impl ParallelSumPlan {
    pub fn new(a: &PsdMatrix, b: &PsdMatrix) -> Result<Self> {
        check_dims(a.dim(), b.dim())?;
        let tol = *a.tolerance();
        let range = a.range_vectors();
        let kernel = a.kernel_vectors();
        let b_eff = b.effective();
        let b11 = range.adjoint() * &b_eff * &range;
        let schur = if kernel.ncols() == 0 || range.ncols() == 0 {
            b11
        } else {
            let b12 = range.adjoint() * &b_eff * &kernel;
            let b22 = kernel.adjoint() * &b_eff * &kernel;
            let b22_pinv = PsdMatrix::derived(&b22, b.lambda_max(), &tol)?.pinv();
            b11 - &b12 * b22_pinv.entries() * b12.adjoint()
        };
        Ok(ParallelSumPlan {
            dim: a.dim(),
            values: a.eigenvalues()[..range.ncols()].to_vec(),
            range,
            schur: hermitian_part(&schur),
            a_max: a.lambda_max(),
            b_max: b.lambda_max(),
            tol,
        })
    }

    /// `(cA):B` for `c >= 0`.
    pub fn at_scale(&self, c: f64) -> Result<PsdMatrix> {
        let r = self.values.len();
        if r == 0 || c == 0.0 {
            return Ok(PsdMatrix::zeros(self.dim, &self.tol));
        }
        let scaled: Vec<f64> = self.values.iter().map(|&l| c * l).collect();
        let lambda = real_diag(&scaled);
        let s = &self.schur;
        let total = hermitian_part(&(&lambda + s));
        let chol = Cholesky::new(total).ok_or_else(|| {
            Error::NumericalBreakdown("Λ + S is not positive definite".into())
        })?;
        // Subtract the correction from the smaller operand.
        let x = if frobenius(s) <= frobenius(&lambda) {
            s - s * chol.solve(s)
        } else {
            &lambda - &lambda * chol.solve(&lambda)
        };
        let full = &self.range * hermitian_part(&x) * self.range.adjoint();
        PsdMatrix::derived(&full, (c * self.a_max).min(self.b_max), &self.tol)
    }

    /// The short of `B` to `ran A`, i.e. the limit of `(cA):B` as `c -> inf`.
    pub fn shorted(&self) -> Result<PsdMatrix> {
        let full = &self.range * &self.schur * self.range.adjoint();
        PsdMatrix::derived(&full, self.b_max, &self.tol)
    }
}

/// The parallel sum `A:B`, whose quadratic form at `x` is
/// `inf_y <A(x-y), x-y> + <By, y>`.
pub fn parallel_sum(a: &PsdMatrix, b: &PsdMatrix) -> Result<PsdMatrix> {
    ParallelSumPlan::new(a, b)?.at_scale(1.0)
}

#[derive(Debug, Clone)]
pub struct AlmostDominatedLimit {
    pub limit: PsdMatrix,
    /// Index `k` of the returned iterate `(2^k A):B`.
    pub doublings: usize,
    /// `||X_{k+1} - X_k||_F` at termination.
    pub last_step: f64,
}

/// `[A]B`: iterates `X_k = (2^k A):B` and returns `X_k` once
/// `||X_{k+1} - X_k||_F <= conv_tol * (1 + ||B||_F)`.
pub fn limit_ab(a: &PsdMatrix, b: &PsdMatrix, tol: &Tolerance) -> Result<PsdMatrix> {
    Ok(limit_ab_traced(a, b, tol)?.limit)
}

pub fn limit_ab_traced(
    a: &PsdMatrix,
    b: &PsdMatrix,
    tol: &Tolerance,
) -> Result<AlmostDominatedLimit> {
    let plan = ParallelSumPlan::new(a, b)?;
    let threshold = tol.conv_tol * (1.0 + b.frobenius_norm());
    let mut current = plan.at_scale(1.0)?;
    let mut last_step = f64::INFINITY;
    for k in 0..MAX_DOUBLINGS {
        let next = plan.at_scale(2f64.powi(k as i32 + 1))?;
        last_step = frobenius(&(next.entries() - current.entries()));
        if last_step <= threshold {
            return Ok(AlmostDominatedLimit {
                limit: current,
                doublings: k,
                last_step,
            });
        }
        current = next;
    }
    Err(Error::NoConvergence {
        iterations: MAX_DOUBLINGS,
        last_step,
    })
}

/// `A + B = (A+B)^{1/2} C_A (A+B)^{1/2}` and likewise for `B`, with
/// contractions `C_A + C_B` equal to the projection onto `ran(A+B)`.
#[derive(Debug, Clone)]
pub struct SumFactorization {
    sum: PsdMatrix,
    c_a: CMatrix,
    c_b: CMatrix,
}

impl SumFactorization {
    pub fn new(a: &PsdMatrix, b: &PsdMatrix) -> Result<Self> {
        let sum = a.sum(b)?;
        let root_inv = sum.pinv_sqrt();
        let r = root_inv.entries();
        let c_a = hermitian_part(&(r * a.effective() * r));
        let c_b = hermitian_part(&(r * b.effective() * r));
        Ok(SumFactorization { sum, c_a, c_b })
    }

    pub fn sum(&self) -> &PsdMatrix {
        &self.sum
    }

    pub fn c_a(&self) -> &CMatrix {
        &self.c_a
    }

    pub fn c_b(&self) -> &CMatrix {
        &self.c_b
    }

    /// Number of eigenvalues of `C_A` above the contraction threshold.
    pub fn c_a_rank(&self) -> usize {
        let threshold = self.sum.tolerance().subspace();
        crate::eigen::jacobi_eigh(&self.c_a)
            .values
            .iter()
            .filter(|&&v| v > threshold)
            .count()
    }

    /// `ker C_A ∩ ran(A+B) = {0}`.
    pub fn c_a_kernel_trivial(&self) -> bool {
        self.c_a_rank() == self.sum.rank()
    }
}
