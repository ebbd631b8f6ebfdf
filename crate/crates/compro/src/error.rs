//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty attention row")]
    EmptyAttentionRow,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("non-finite loss at step {step}")]
    NonFiniteLoss { step: usize },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("invalid control signal: {0}")]
    Control(String),

    #[error("infeasible control combination")]
    InfeasibleControl,

    #[error("unknown token: {0}")]
    UnknownToken(String),

    #[error("invalid lexicon: {0}")]
    Lexicon(String),

    #[error("position overflow: need {needed} positions, model has {max}")]
    PositionOverflow { needed: usize, max: usize },

    #[error("duplicate parameter name: {0}")]
    DuplicateParam(String),

    #[error("unknown parameter: {0}")]
    UnknownParam(String),

    #[error("frozen language model changed: digest {before} != {after}")]
    FrozenLmChanged { before: String, after: String },

    #[error("pretraining failed: {0}")]
    Pretrain(String),

    #[error("missing generations for scene ids {0:?}")]
    MissingGenerations(Vec<u64>),

    #[error("invalid record {scene_id}: {msg}")]
    Record { scene_id: u64, msg: String },

    #[error("checkpoint mismatch: {0}")]
    Checkpoint(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {msg}")]
    Format { path: PathBuf, msg: String },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<PathBuf>, msg: impl Into<String>) -> Self {
        Error::Format { path: path.into(), msg: msg.into() }
    }

    /// Process exit code for the CLI: 1 for validation problems, 2 for
    /// runtime failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::Control(_)
            | Error::InfeasibleControl
            | Error::Lexicon(_)
            | Error::UnknownToken(_) => 1,
            _ => 2,
        }
    }
}
