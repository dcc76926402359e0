use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{name}` at line {line}, column {column}")]
    UndeclaredGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("generator `{0}` declared more than once")]
    DuplicateGenerator(String),
    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorCountMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
    #[error("{n} does not divide {m}")]
    NotDivisible { n: u64, m: u64 },
    #[error("scalar must be nonzero: {0}")]
    ZeroScalar(&'static str),
    #[error("image of generator `{0}` is not a single monomial")]
    NonMonomialImage(String),
    #[error("branes are not comparable: {0}")]
    Incomparable(String),
    #[error("not a brane: relations {0:?} do not vanish")]
    NotABrane(Vec<usize>),
    #[error("family has no brane at level {0}")]
    MissingLevel(u64),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
