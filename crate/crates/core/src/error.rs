use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("bipartition of 0 has no removable box")]
    NoBoxToRemove,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("class function is not a character: multiplicity of {label} is {value}")]
    NotACharacter { label: String, value: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
