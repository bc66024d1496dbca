use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected: no path between {from:?} and {to:?}")]
    Disconnected { from: String, to: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("dataset: {0}")]
    Dataset(String),

    #[error("{}: {source}", path.display())]
    InFile { path: PathBuf, source: Box<Error> },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status for this error: 2 for numerical failures, 1 for
    /// everything caused by the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Numerical(_) => 2,
            Error::InFile { source, .. } => source.exit_code(),
            _ => 1,
        }
    }
}
