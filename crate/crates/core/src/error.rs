use thiserror::Error;

/// Malformed shape, polynomial or operator text.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid part `{0}`")]
    BadPart(String),
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("wrong shape kind in `{0}`")]
    WrongShapeKind(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("malformed operator `{0}`")]
    BadOperator(String),
}

/// Errors raised by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("alphabet `{0}` has no finite cap but a truncation is required")]
    UnboundedCap(String),
    #[error("unknown alphabet `{0}`")]
    UnknownAlphabet(String),
    #[error("duplicate alphabet `{0}`")]
    DuplicateAlphabet(String),
    #[error("ring needs {0} variables; at most 16 are supported")]
    TooManyVariables(usize),
    #[error("polynomial is not symmetric in `{alphabet}`: swapping variables {i} and {j} changes it")]
    NotSymmetric { alphabet: String, i: usize, j: usize },
    #[error("degree {degree} exceeds {vars} variables; expansion would not be faithful")]
    NotFaithful { degree: usize, vars: usize },
    #[error("substitution value {0} is not one of 0, 1, -1 or a variable")]
    BadSubstitution(i64),
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
