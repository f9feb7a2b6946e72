use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] locgame::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 2 for unreadable or malformed input, 3 for a solver cap, 4 for an
    /// inapplicable request.
    pub fn exit_code(&self) -> u8 {
        use locgame::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Parse { .. }
                | E::Loop(_)
                | E::Disconnected
                | E::Graph6(_)
                | E::TooManyVertices(_)
                | E::VertexOutOfRange { .. }
                | E::UnknownName(_)
                | E::Coloring(_) => 2,
                E::CapExceeded { .. } => 3,
                _ => 4,
            },
            CliError::Io { .. } | CliError::Csv(_) => 2,
            CliError::Precondition(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
