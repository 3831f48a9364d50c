use thiserror::Error;

/// Every failure the library can report.
///
/// Validation errors carry enough context to reproduce the offending value
/// (exponents, residual matrices rendered as text).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator vanishes at x = 0, so the fraction is not in the local ring")]
    DenominatorNotUnit,
    #[error("quotient is not an element of the local ring")]
    NotDivisible,
    #[error("intermediate polynomial degree {degree} exceeds the limit {limit}")]
    DegreeOverflow { degree: usize, limit: usize },
    #[error("omega is a unit")]
    OmegaIsUnit,
    #[error("omega is zero")]
    OmegaIsZero,
    #[error("invalid prime field characteristic {0}")]
    InvalidPrime(u64),
    #[error("operands live over different coefficient fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible over the local ring")]
    NotInvertibleOverS,
    #[error("matrix is not injective (determinant is zero)")]
    NotInjective,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cokernel is not annihilated by omega: invariant factor x^{exponent} with n = {n}")]
    CokerNotAnnihilated { exponent: u32, n: u32 },
    #[error("square does not commute, residual psi0*f - f'*psi1 = {residual}")]
    SquareNotCommuting { residual: String },
    #[error("objects are defined over different omegas")]
    OmegaMismatch,
    #[error("not a deflation: {0}")]
    NotDeflation(String),
    #[error("not an inflation: {0}")]
    NotInflation(String),
    #[error("not a conflation: {0}")]
    NotConflation(String),
    #[error("rho1*rho0 and rho0*rho1 must both equal omega*I, residual {residual}")]
    ProductNotOmega { residual: String },
    #[error("pair morphism equations fail, residual {residual}")]
    PairSquareNotCommuting { residual: String },
    #[error("modules over R with different n ({left} vs {right})")]
    RankMismatch { left: u32, right: u32 },
    #[error("invalid module exponent {exponent} (must lie in 1..={n})")]
    InvalidExponent { exponent: u32, n: u32 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown command {0:?}")]
    UnknownCommand(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}
