use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unimodular (|det| = {det})")]
    NotUnimodular { det: String },

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("matrix is not an involution")]
    NotInvolution,

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("block structure violated: {0}")]
    StructureViolation(String),

    #[error("c-block clearing did not terminate within {passes} passes")]
    ConvergenceFailure { passes: usize },

    #[error("invariants violate the canonical-form parity: {0}")]
    ParityViolation(String),

    #[error("quotient lattice has an elementary divisor {divisor} outside {{1, 2}}")]
    UnexpectedTorsion { divisor: String },

    #[error("invalid involution data: {0}")]
    InvalidInvolutionData(String),

    #[error("internal verification failed: {0}")]
    InternalVerificationFailure(String),

    #[error("stage `{stage}` failed after {completed:?}: {source}")]
    Stage {
        stage: &'static str,
        completed: Vec<&'static str>,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// The innermost error, looking through stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self.root(),
            Error::InternalVerificationFailure(_)
                | Error::ConvergenceFailure { .. }
                | Error::StructureViolation(_)
                | Error::UnexpectedTorsion { .. }
        )
    }
}
