use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Property violations (an audit that fails, an unreachable pair) are never
/// errors; they are reported as values. Errors are reserved for bad input,
/// broken preconditions and exhausted resources.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("state cap of {limit} exceeded while {context}")]
    CapExceeded { limit: usize, context: &'static str },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),

    #[error("letter index {index} is out of range for an alphabet of size {size}")]
    LetterOutOfRange { index: u8, size: usize },

    #[error("word of length {len} exceeds the length cap of {limit}")]
    WordTooLong { len: usize, limit: usize },

    #[error("invalid rule {id:?}: {reason}")]
    InvalidRule { id: String, reason: String },

    #[error("invalid counter {counter:?}: {reason}")]
    InvalidCounter { counter: String, reason: String },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} and {1} are not related by the system")]
    NotRelated(String, String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("malformed system file: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a resource limit (state cap, length cap,
    /// 64-bit counts) rather than by the input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::WordTooLong { .. } | Error::Overflow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
