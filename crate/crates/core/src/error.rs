use thiserror::Error;

/// Errors raised by the library. Every variant has a stable name, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("not coprime: gcd is {0}")]
    NotCoprime(u64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("operation undefined for the trivial semigroup N")]
    TrivialSemigroup,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("semigroup is not cyclotomic")]
    NotCyclotomic,
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("sequence is not smooth")]
    NotSmooth,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes must be distinct")]
    NotDistinct,
    #[error("relation polynomial has coefficients outside {{0, 1}}")]
    NonNonnegativeRelation,
    #[error("gcd reduction is degenerate (d = 1)")]
    DegenerateReduction,
    #[error("relation check failed: {0}")]
    InvalidRelation(String),
    #[error("polynomial order violated: {0}")]
    OrderViolation(String),
    #[error("closed form disagrees with direct computation: {0}")]
    FormulaMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier used on diagnostic streams.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator => "NonPositiveGenerator",
            Error::NotCoprime(_) => "NotCoprime",
            Error::TooLarge(_) => "TooLarge",
            Error::TrivialSemigroup => "TrivialSemigroup",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible => "NotDivisible",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotMonic => "NotMonic",
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::NotCyclotomic => "NotCyclotomic",
            Error::InvalidGluing(_) => "InvalidGluing",
            Error::NotSmooth => "NotSmooth",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::NotPrime(_) => "NotPrime",
            Error::NotDistinct => "NotDistinct",
            Error::NonNonnegativeRelation => "NonNonnegativeRelation",
            Error::DegenerateReduction => "DegenerateReduction",
            Error::InvalidRelation(_) => "InvalidRelation",
            Error::OrderViolation(_) => "OrderViolation",
            Error::FormulaMismatch(_) => "FormulaMismatch",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
