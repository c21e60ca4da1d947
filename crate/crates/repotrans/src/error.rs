//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced anywhere in the translation pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bad configuration: missing paths, dimension mismatches, absent templates.
    #[error("configuration error: {0}")]
    Config(String),

    /// A repository root yielded no parseable source files.
    #[error("empty index: no parseable {language} files under {root}")]
    EmptyIndex { root: PathBuf, language: String },

    /// A mapping file line could not be parsed.
    #[error("mapping parse error at line {line}: {message}")]
    MappingParse { line: usize, message: String },

    /// Text returned by an LLM did not contain the expected structure.
    #[error("response parse error: {0}")]
    ResponseParse(String),

    /// The chat backend failed to produce a response.
    #[error("transport error: {0}")]
    Transport(String),

    /// A scripted or replay backend ran out of queued responses.
    #[error("script underrun for role {role}: {consumed} responses consumed, none left")]
    ScriptUnderrun { role: String, consumed: usize },

    /// Workspace setup, toolchain lookup, or other environment failure.
    /// Distinct from a candidate failing to compile or test.
    #[error("infrastructure error: {0}")]
    Infrastructure(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: configuration and infrastructure
    /// problems exit 2, everything else 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::EmptyIndex { .. }
            | Error::Infrastructure(_)
            | Error::Io(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
