use condiam_core::altpoly::AltPolyError;
use condiam_core::bounds::BoundError;
use condiam_core::graph::GraphError;
use condiam_core::oracle::{OracleError, SoundnessError};
use condiam_core::spectral::SpectralError;

/// Exit status for a run that found a soundness violation.
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad file, bad flag value, or a query the graph cannot answer.
    #[error("{0}")]
    Input(String),
    /// Eigensolver or linear program failure.
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NoConvergence { .. }
            | SpectralError::PerronMissing { .. }
            | SpectralError::PerronMultiple { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<AltPolyError> for CliError {
    fn from(e: AltPolyError) -> Self {
        match e {
            AltPolyError::DegreeOutOfRange { .. } | AltPolyError::MeshTooSmall { .. } => CliError::Input(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Spectral(e) => e.into(),
            BoundError::AltPoly(e) => e.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Input(format!("oracle: {e}"))
    }
}

impl From<SoundnessError> for CliError {
    fn from(e: SoundnessError) -> Self {
        match e {
            SoundnessError::Bound(e) => e.into(),
            SoundnessError::Oracle(e) => e.into(),
        }
    }
}
