use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds allowance {allowed:e}")]
    NotHermitian { asymmetry: f64, allowed: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e} below {floor:e}")]
    NotPsd { eigenvalue: f64, floor: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("iteration did not converge within {iterations} doublings (last step {last_step:e})")]
    NoConvergence { iterations: usize, last_step: f64 },
    #[error("characterizations disagree: {0}")]
    CharacterizationDisagreement(String),
    #[error("range inclusion violated: rank [T2|T1] = {augmented} > rank T2 = {base}")]
    RangeInclusionViolated { augmented: usize, base: usize },
    #[error("B <= A fails: smallest eigenvalue of A - B is {min_eigenvalue:e}")]
    NotDominated { min_eigenvalue: f64 },
    #[error("structural and sampled measure tests disagree: {0}")]
    ProbeDisagreement(String),
    #[error("measures are defined on different atoms")]
    AtomMismatch,
    #[error("operator route disagrees with the atomwise oracle at atom {atom}: {detail}")]
    OracleDisagreement { atom: String, detail: String },
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("functionals live on different algebras")]
    AlgebraMismatch,
    #[error("reconstructed part is not representable: {0}")]
    NotRepresentable(String),
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier used on the diagnostic stream of the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NotPsd { .. } => "NotPsd",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::CharacterizationDisagreement(_) => "CharacterizationDisagreement",
            Error::RangeInclusionViolated { .. } => "RangeInclusionViolated",
            Error::NotDominated { .. } => "NotDominated",
            Error::ProbeDisagreement(_) => "ProbeDisagreement",
            Error::AtomMismatch => "AtomMismatch",
            Error::OracleDisagreement { .. } => "OracleDisagreement",
            Error::InvalidData(_) => "InvalidData",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::NumericalBreakdown(_) => "NumericalBreakdown",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }

    /// Malformed input rather than a mathematical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
