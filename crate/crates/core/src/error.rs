use std::path::PathBuf;

use thiserror::Error;

/// Errors reported by the classification library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid field symbol {0:?}; expected one of '0', '1', '2'")]
    InvalidSymbol(char),

    #[error("a code needs at least one generator row")]
    EmptyGenerators,

    #[error("code length {0} is outside the supported range 1..={max}", max = crate::gf3::MAX_PACKED_LEN)]
    UnsupportedLength(usize),

    #[error("coordinate {coord} is out of range for length {len}")]
    CoordinateOutOfRange { coord: usize, len: usize },

    #[error("expected a [{expected_n},{expected_k}] code, got [{n},{k}]")]
    WrongParameters {
        expected_n: usize,
        expected_k: usize,
        n: usize,
        k: usize,
    },

    #[error("{0}")]
    Usage(String),

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    Capacity { order: u64, cap: u64 },

    #[error("{}:{line}: {msg}", file.display())]
    Parse {
        file: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
