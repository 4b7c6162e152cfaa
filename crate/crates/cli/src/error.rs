use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error at \"{pointer}\": {message}")]
    Schema { pointer: String, message: String },
    #[error("validation error ({invariant}): {detail}")]
    Validation { invariant: String, detail: String },
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl CliError {
    /// 1 for input problems, 2 for internal consistency failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CrossCheck(_) => 2,
            _ => 1,
        }
    }
}

impl From<qcorr::Error> for CliError {
    fn from(e: qcorr::Error) -> Self {
        use qcorr::Error::*;
        let invariant = match &e {
            CrossCheckFailure(msg) => return CliError::CrossCheck(msg.clone()),
            InvalidState { invariant, .. } => invariant.to_string(),
            NonHermitianInput { .. } => "Hermitian".into(),
            WeightSum { .. } => "unit trace".into(),
            NonPositiveWeight { .. } => "positive semidefinite".into(),
            IndexOutOfRange { .. } => "index range".into(),
            DuplicateTerm { .. } => "distinct terms".into(),
            NotOrthonormal { .. } => "orthonormal basis".into(),
            DuplicateLabels => "distinct labels".into(),
            DimensionTooLarge { .. } => "dimension cap".into(),
            DimensionMismatch { .. } | ShapeMismatch { .. } | EmptyMatrix => "dimension".into(),
            NonFinite { .. } => "finite entries".into(),
            ConvergenceFailure { .. } => "eigensolver convergence".into(),
            ZeroProbabilityOutcome { .. } | NotADistribution(_) | MarginalsNotIdentical => {
                "probability".into()
            }
        };
        CliError::Validation {
            invariant,
            detail: e.to_string(),
        }
    }
}
