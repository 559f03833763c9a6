use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Location-carrying syntax error from the operator parser.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: operands live in {left} and {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("the zero operator has no principal symbol")]
    UndefinedSymbol,

    #[error("syntax error at {0}")]
    Syntax(ParseError),

    #[error("{line}:{column}: variable index {index} out of range 1..={n}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        index: usize,
        n: usize,
    },

    #[error("{line}:{column}: exponent must be a non-negative integer literal")]
    BadExponent { line: usize, column: usize },

    #[error("expression contains differential factors, expected a polynomial")]
    NotAPolynomial,

    #[error("order-filtration basis is infinite without an x-degree truncation bound")]
    UnboundedBasis,

    #[error("filtrations present different modules")]
    ModuleMismatch,

    #[error("the module is zero (1 lies in the ideal)")]
    ZeroModule,

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("corpus file {file}: line {line}: {message}")]
    Corpus {
        file: String,
        line: usize,
        message: String,
    },
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Syntax(e)
    }
}
