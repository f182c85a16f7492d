use thiserror::Error;

/// Errors raised by the exact kernel and the numeric verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("non-positive coefficient {0}")]
    NonPositiveCoefficient(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("Gamma({0}) is not a basis symbol")]
    InvalidGammaSymbol(String),
    #[error("unsupported denominator {0}")]
    UnsupportedDenominator(String),
    #[error("pole of the gamma function at {0}")]
    Pole(String),
    #[error("negative value {0} cannot be represented as a monomial")]
    NegativeValue(String),
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("hypergeometric series diverges at 1: c-a-b = {0}")]
    DivergentAtOne(String),
    #[error("series converges too slowly: c-a-b = {0}")]
    SlowConvergence(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("{0} has no exact monomial form")]
    NotMonomializable(String),
    #[error("incompatible towers")]
    TowerMismatch,
    #[error("malformed monomial json: {0}")]
    Json(String),
    #[error("syntax error at offset {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String> },
}

impl Error {
    /// Stable kebab-case code, used for machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::InvalidRational(_) => "invalid-rational",
            Error::NonPositiveCoefficient(_) => "non-positive-coefficient",
            Error::UnknownAtom(_) => "unknown-atom",
            Error::InvalidGammaSymbol(_) => "invalid-gamma-symbol",
            Error::UnsupportedDenominator(_) => "unsupported-denominator",
            Error::Pole(_) => "pole",
            Error::NegativeValue(_) => "negative-value",
            Error::SingularSystem(_) => "singular-system",
            Error::DivergentAtOne(_) => "divergent-at-one",
            Error::SlowConvergence(_) => "slow-convergence",
            Error::Domain(_) => "domain",
            Error::Convergence(_) => "convergence",
            Error::NotMonomializable(_) => "not-monomializable",
            Error::TowerMismatch => "tower-mismatch",
            Error::Json(_) => "json",
            Error::Syntax { .. } => "syntax",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
