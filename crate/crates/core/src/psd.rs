//! Validated Hermitian positive semidefinite matrices and their spectral
//! calculus.
//!
//! Every matrix function (square root, pseudo-inverse, projections) acts on
//! the *retained* spectrum only: eigenvalues at or below the cutoff
//! `max(rel_rank * lambda_ref, abs_zero)` are treated as exact zeros.
//! `lambda_ref` is the largest eigenvalue, or a larger reference magnitude
//! for matrices derived from another operator (a part of `B` inherits the
//! noise floor of `B`).

use crate::eigen::jacobi_eigh;
use crate::error::{check_dims, Error, Result};
use crate::linalg::{frobenius, hermitian_part, CMatrix, CVector};
use crate::subspace::SubspaceBasis;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone)]
pub struct PsdMatrix {
    entries: CMatrix,
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
    rank: usize,
    cutoff: f64,
    tol: Tolerance,
}

/// Validates `raw` as a Hermitian PSD matrix.
pub fn make_psd(raw: &CMatrix, tol: &Tolerance) -> Result<PsdMatrix> {
    PsdMatrix::with_reference(raw, 0.0, tol)
}

pub fn sqrt_psd(a: &PsdMatrix) -> PsdMatrix {
    a.sqrt()
}

pub fn pinv(a: &PsdMatrix) -> PsdMatrix {
    a.pinv()
}

pub fn kernel_basis(a: &PsdMatrix) -> SubspaceBasis {
    a.kernel_basis()
}

pub fn range_basis(a: &PsdMatrix) -> SubspaceBasis {
    a.range_basis()
}

/// Orthogonal projection onto the span of the columns of `span_vectors`,
/// truncating singular values at `max(rel_rank * sigma_max, abs_zero)`.
pub fn project_onto(span_vectors: &CMatrix, tol: &Tolerance) -> CMatrix {
    let smax = crate::linalg::spectral_norm(span_vectors);
    SubspaceBasis::span_of(span_vectors, tol.cutoff(smax)).projection()
}

/// `A <= B` in the Loewner order, up to `psd_slack * (1 + lambda_max(B))`.
pub fn psd_leq(a: &PsdMatrix, b: &PsdMatrix, tol: &Tolerance) -> Result<bool> {
    Ok(loewner_gap(a, b)? >= -tol.psd_slack * (1.0 + b.lambda_max()))
}

/// Smallest eigenvalue of `B - A`.
pub fn loewner_gap(a: &PsdMatrix, b: &PsdMatrix) -> Result<f64> {
    check_dims(a.dim(), b.dim())?;
    let diff = b.entries() - a.entries();
    Ok(jacobi_eigh(&diff)
        .values
        .last()
        .copied()
        .unwrap_or(0.0))
}

impl PsdMatrix {
    pub fn new(raw: &CMatrix, tol: &Tolerance) -> Result<Self> {
        make_psd(raw, tol)
    }

    /// Like [`make_psd`], but the cutoff is measured against
    /// `max(lambda_max, reference)`.
    pub fn with_reference(raw: &CMatrix, reference: f64, tol: &Tolerance) -> Result<Self> {
        let (rows, cols) = raw.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::InvalidData("matrix dimension must be positive".into()));
        }
        if raw.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidData("matrix has non-finite entries".into()));
        }
        let asymmetry = frobenius(&(raw - raw.adjoint()));
        let allowed = tol.psd_slack * (1.0 + frobenius(raw));
        if asymmetry > allowed {
            return Err(Error::NotHermitian { asymmetry, allowed });
        }
        let entries = hermitian_part(raw);
        let eig = jacobi_eigh(&entries);
        let lambda_max = eig.values.first().copied().unwrap_or(0.0).max(0.0);
        let lambda_ref = lambda_max.max(reference);
        let floor = -(tol.psd_slack * lambda_ref).max(tol.abs_zero);
        if let Some(&lowest) = eig.values.last() {
            if lowest < floor {
                return Err(Error::NotPsd {
                    eigenvalue: lowest,
                    floor,
                });
            }
        }
        let eigenvalues: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0)).collect();
        let cutoff = tol.cutoff(lambda_ref);
        let rank = eigenvalues.iter().filter(|&&v| v > cutoff).count();
        Ok(PsdMatrix {
            entries,
            eigenvalues,
            eigenvectors: eig.vectors,
            rank,
            cutoff,
            tol: *tol,
        })
    }

    /// Builds a matrix from a known spectrum; `vectors` must be unitary.
    fn from_spectrum(values: Vec<f64>, vectors: CMatrix, cutoff: f64, tol: Tolerance) -> Self {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
        let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let mut eigenvectors = CMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            eigenvectors.set_column(dst, &vectors.column(src));
        }
        let rank = eigenvalues.iter().filter(|&&v| v > cutoff).count();
        let mut entries = CMatrix::zeros(n, n);
        for (k, &lam) in eigenvalues.iter().enumerate().take(rank) {
            let v = eigenvectors.column(k);
            entries += (v * v.adjoint()).scale(lam);
        }
        PsdMatrix {
            entries: hermitian_part(&entries),
            eigenvalues,
            eigenvectors,
            rank,
            cutoff,
            tol,
        }
    }

    pub fn zeros(n: usize, tol: &Tolerance) -> Self {
        PsdMatrix::from_spectrum(vec![0.0; n], CMatrix::identity(n, n), tol.abs_zero, *tol)
    }

    pub fn identity(n: usize, tol: &Tolerance) -> Self {
        PsdMatrix::from_spectrum(vec![1.0; n], CMatrix::identity(n, n), tol.cutoff(1.0), *tol)
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    /// Descending, clamped to be nonnegative.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn frobenius_norm(&self) -> f64 {
        frobenius(&self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    /// `||V diag(lambda) V* - entries||_F`.
    pub fn reconstruction_error(&self) -> f64 {
        let mut rec = CMatrix::zeros(self.dim(), self.dim());
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvectors.column(k);
            rec += (v * v.adjoint()).scale(lam);
        }
        frobenius(&(rec - &self.entries))
    }

    /// Eigenvectors of the retained eigenvalues (`n x rank`).
    pub fn range_vectors(&self) -> CMatrix {
        self.eigenvectors.columns(0, self.rank).into_owned()
    }

    /// Eigenvectors of the discarded eigenvalues (`n x (n - rank)`).
    pub fn kernel_vectors(&self) -> CMatrix {
        self.eigenvectors
            .columns(self.rank, self.dim() - self.rank)
            .into_owned()
    }

    pub fn kernel_basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_orthonormal(self.kernel_vectors())
            .unwrap_or_else(|_| SubspaceBasis::span_of(&self.kernel_vectors(), 0.5))
    }

    pub fn range_basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_orthonormal(self.range_vectors())
            .unwrap_or_else(|_| SubspaceBasis::span_of(&self.range_vectors(), 0.5))
    }

    /// Orthogonal projection onto the range.
    pub fn range_projection(&self) -> CMatrix {
        let r = self.range_vectors();
        &r * r.adjoint()
    }

    /// `sum f(lambda_k) v_k v_k*` over the retained spectrum.
    pub fn spectral_map(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.dim();
        let mut out = CMatrix::zeros(n, n);
        for k in 0..self.rank {
            let v = self.eigenvectors.column(k);
            out += (v * v.adjoint()).scale(f(self.eigenvalues[k]));
        }
        hermitian_part(&out)
    }

    /// The matrix with its sub-cutoff spectrum removed.
    pub fn effective(&self) -> CMatrix {
        self.spectral_map(|l| l)
    }

    fn mapped(&self, f: impl Fn(f64) -> f64, cutoff: f64) -> PsdMatrix {
        let values = (0..self.dim())
            .map(|k| if k < self.rank { f(self.eigenvalues[k]) } else { 0.0 })
            .collect();
        PsdMatrix::from_spectrum(values, self.eigenvectors.clone(), cutoff, self.tol)
    }

    /// Principal square root.
    pub fn sqrt(&self) -> PsdMatrix {
        self.mapped(f64::sqrt, self.cutoff.sqrt())
    }

    fn inverse_cutoff(&self, largest_inverse: f64) -> f64 {
        let smallest_inverse = 1.0 / self.lambda_max();
        self.tol.cutoff(largest_inverse).min(0.5 * smallest_inverse)
    }

    /// Moore-Penrose pseudo-inverse.
    pub fn pinv(&self) -> PsdMatrix {
        if self.rank == 0 {
            return PsdMatrix::zeros(self.dim(), &self.tol);
        }
        let largest = 1.0 / self.eigenvalues[self.rank - 1];
        self.mapped(|l| 1.0 / l, self.inverse_cutoff(largest))
    }

    /// Pseudo-inverse of the square root.
    pub fn pinv_sqrt(&self) -> PsdMatrix {
        if self.rank == 0 {
            return PsdMatrix::zeros(self.dim(), &self.tol);
        }
        let largest = 1.0 / self.eigenvalues[self.rank - 1].sqrt();
        let smallest = 1.0 / self.lambda_max().sqrt();
        let cutoff = self.tol.cutoff(largest).min(0.5 * smallest);
        self.mapped(|l| 1.0 / l.sqrt(), cutoff)
    }

    /// `c * A` for `c >= 0`, reusing the spectral decomposition.
    pub fn scaled(&self, factor: f64) -> PsdMatrix {
        assert!(factor >= 0.0 && factor.is_finite(), "scale factor must be finite and >= 0");
        if factor == 0.0 {
            return PsdMatrix::zeros(self.dim(), &self.tol);
        }
        PsdMatrix {
            entries: self.entries.scale(factor),
            eigenvalues: self.eigenvalues.iter().map(|&l| l * factor).collect(),
            eigenvectors: self.eigenvectors.clone(),
            rank: self.rank,
            cutoff: self.cutoff * factor,
            tol: self.tol,
        }
    }

    /// `A + B`, with the cutoff referenced to the larger summand.
    pub fn sum(&self, other: &PsdMatrix) -> Result<PsdMatrix> {
        check_dims(self.dim(), other.dim())?;
        PsdMatrix::with_reference(
            &(&self.entries + &other.entries),
            self.lambda_max().max(other.lambda_max()),
            &self.tol,
        )
    }

    /// `<A x, x>`.
    pub fn quadratic_form(&self, x: &CVector) -> f64 {
        (x.adjoint() * &self.entries * x)[(0, 0)].re
    }

    /// Rebuilds from a Hermitian matrix that is PSD up to roundoff, measuring
    /// the cutoff against `reference`.
    pub(crate) fn derived(raw: &CMatrix, reference: f64, tol: &Tolerance) -> Result<PsdMatrix> {
        PsdMatrix::with_reference(&hermitian_part(raw), reference, tol)
    }
}
