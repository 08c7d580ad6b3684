//! Numerical thresholds shared by every routine in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative eigenvalue cutoff: eigenvalues at or below `rel_rank * lambda_max` count as zero.
    pub rel_rank: f64,
    /// Absolute cutoff, used when the largest eigenvalue is (close to) zero.
    pub abs_zero: f64,
    /// Relative negativity tolerated before PSD validation fails.
    pub psd_slack: f64,
    /// Stopping threshold for iterations.
    pub conv_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel_rank: 1e-10,
            abs_zero: 1e-12,
            psd_slack: 1e-9,
            conv_tol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(rel_rank: f64, abs_zero: f64, psd_slack: f64, conv_tol: f64) -> Result<Self> {
        let tol = Tolerance {
            rel_rank,
            abs_zero,
            psd_slack,
            conv_tol,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("rel_rank", self.rel_rank),
            ("abs_zero", self.abs_zero),
            ("psd_slack", self.psd_slack),
            ("conv_tol", self.conv_tol),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidData(format!(
                    "tolerance {name} must be a finite nonnegative number, got {value}"
                )));
            }
        }
        if self.rel_rank >= 1.0 {
            return Err(Error::InvalidData(format!(
                "tolerance rel_rank must be < 1, got {}",
                self.rel_rank
            )));
        }
        Ok(())
    }

    /// Eigenvalue cutoff for a matrix whose reference magnitude is `scale`.
    pub fn cutoff(&self, scale: f64) -> f64 {
        (self.rel_rank * scale.max(0.0)).max(self.abs_zero)
    }

    /// Dimensionless threshold for quantities living in `[0, 1]`: cosines of
    /// principal angles, spectra of contractions, normalized residuals.
    pub fn subspace(&self) -> f64 {
        self.rel_rank.sqrt()
    }
}
