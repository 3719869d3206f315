use thiserror::Error;

use crate::codebook::{CodebookError, PipelineError};
use crate::corpus::CorpusError;
use crate::gateway::GatewayError;
use crate::metrics::MetricsError;
use crate::probability::ProbabilityError;
use crate::reporting::ReportError;
use crate::similarity::SimilarityError;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Provider = 2,
    ValidationFailed = 3,
    Io = 4,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("uniqueness check failed: {0}")]
    ValidationFailed(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Gateway(#[from] GatewayError),
    #[error(transparent)]
    Codebook(#[from] CodebookError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
    #[error(transparent)]
    Similarity(#[from] SimilarityError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Error::Usage(_) | Error::Metrics(_) | Error::Probability(_) => ExitCode::Usage,
            Error::ValidationFailed(_) => ExitCode::ValidationFailed,
            Error::Io { .. } => ExitCode::Io,
            Error::Corpus(CorpusError::Io { .. }) => ExitCode::Io,
            Error::Corpus(_) => ExitCode::Usage,
            Error::Gateway(_) | Error::Codebook(_) => ExitCode::Provider,
            Error::Pipeline(e) => match e {
                PipelineError::Checkpoint(_) => ExitCode::Io,
                PipelineError::EmptyCorpus | PipelineError::ResumeMismatch { .. } => {
                    ExitCode::Usage
                }
                PipelineError::Codebook(CodebookError::Judge { .. })
                | PipelineError::Coding { .. }
                | PipelineError::NoCodes { .. } => ExitCode::Provider,
                PipelineError::Codebook(_) => ExitCode::Usage,
            },
            Error::Similarity(e) => match e {
                SimilarityError::ProviderError(_) => ExitCode::Provider,
                SimilarityError::InvalidThreshold(_) => ExitCode::Usage,
                _ => ExitCode::ValidationFailed,
            },
            Error::Report(e) => match e {
                ReportError::OutputExists(_)
                | ReportError::EmptyCurve
                | ReportError::Metrics(_) => ExitCode::Usage,
                ReportError::Io { .. } | ReportError::Format { .. } => ExitCode::Io,
            },
        }
    }
}
