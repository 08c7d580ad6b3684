use crate::error::{Error, Result};
use crate::linalg::{column_space, orthonormality_defect, CMatrix, CVector};

const ORTHONORMAL_TOL: f64 = 1e-10;

/// A subspace of `C^n` held as orthonormal columns; zero columns encode `{0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: CMatrix,
}

impl SubspaceBasis {
    pub fn trivial(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: CMatrix::zeros(ambient_dim, 0),
        }
    }

    pub fn from_orthonormal(vectors: CMatrix) -> Result<Self> {
        let defect = orthonormality_defect(&vectors);
        if defect > ORTHONORMAL_TOL {
            return Err(Error::NumericalBreakdown(format!(
                "basis columns deviate from orthonormality by {defect:e}"
            )));
        }
        Ok(SubspaceBasis {
            ambient_dim: vectors.nrows(),
            vectors,
        })
    }

    /// Orthonormal basis of the span of `columns`, discarding singular values `<= threshold`.
    pub fn span_of(columns: &CMatrix, threshold: f64) -> Self {
        SubspaceBasis {
            ambient_dim: columns.nrows(),
            vectors: column_space(columns, threshold),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.ncols()
    }

    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// Orthogonal projection onto the subspace.
    pub fn projection(&self) -> CMatrix {
        &self.vectors * self.vectors.adjoint()
    }

    /// Distance from `v` to the subspace.
    pub fn distance(&self, v: &CVector) -> f64 {
        let coeffs = self.vectors.adjoint() * v;
        (v - &self.vectors * coeffs).norm()
    }

    /// Largest cosine of a principal angle with `other` (0 when either is trivial).
    pub fn max_overlap(&self, other: &SubspaceBasis) -> f64 {
        if self.is_trivial() || other.is_trivial() {
            return 0.0;
        }
        crate::linalg::spectral_norm(&(self.vectors.adjoint() * &other.vectors))
    }
}
