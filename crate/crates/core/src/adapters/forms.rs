//! Nonnegative Hermitian forms `t(x, y) = <Tx, y>` on `C^n`.
//!
//! A form is `w`-closable exactly when its operator is absolutely continuous
//! with respect to that of `w`, and `w`-almost dominated exactly when the
//! limit `[W]T` recovers `T`; both notions therefore coincide.

use crate::error::{check_dims, Error, Result};
use crate::lebesgue::{check_ac, check_singular, decompose, limit_ab, LIMIT_GAP_RTOL};
use crate::linalg::{frobenius, CVector, C64};
use crate::psd::PsdMatrix;

#[derive(Debug, Clone)]
pub struct FormSpec {
    gram: PsdMatrix,
}

impl FormSpec {
    pub fn new(gram: PsdMatrix) -> Self {
        FormSpec { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &PsdMatrix {
        &self.gram
    }

    /// `t(x, y) = y* G x`.
    pub fn evaluate(&self, x: &CVector, y: &CVector) -> C64 {
        (y.adjoint() * self.gram.entries() * x)[(0, 0)]
    }
}

pub fn is_closable(t: &FormSpec, w: &FormSpec) -> Result<bool> {
    Ok(check_ac(&w.gram, &t.gram)?.verdict)
}

pub fn is_almost_dominated(t: &FormSpec, w: &FormSpec) -> Result<bool> {
    let lim = limit_ab(&w.gram, &t.gram, w.gram.tolerance())?;
    let gap = frobenius(&(lim.entries() - t.gram.entries()));
    Ok(gap <= LIMIT_GAP_RTOL * (1.0 + t.gram.frobenius_norm()))
}

/// `t = t_a + t_s` with `t_a` `w`-closable and `t_s` `w`-singular.
pub fn form_decompose(t: &FormSpec, w: &FormSpec) -> Result<(FormSpec, FormSpec)> {
    check_dims(w.dim(), t.dim())?;
    let parts = decompose(&w.gram, &t.gram)?;
    if !check_ac(&w.gram, &parts.b_abs)?.verdict {
        return Err(Error::NumericalBreakdown("regular part is not closable".into()));
    }
    if !check_singular(&w.gram, &parts.b_sing)?.verdict {
        return Err(Error::NumericalBreakdown("singular part is not singular".into()));
    }
    Ok((FormSpec::new(parts.b_abs), FormSpec::new(parts.b_sing)))
}
