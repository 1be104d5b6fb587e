use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside the supported range [2, 2^31)")]
    ModulusOutOfRange(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands use different moduli ({0} and {1})")]
    ModulusMismatch(u64, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shift has length {found}, expected {expected}")]
    ShiftLength { expected: usize, found: usize },
    #[error("invalid shift: {0}")]
    InvalidShift(String),
    #[error("matrix is singular")]
    Singular,
    #[error("kernel basis has {found} columns, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("column is not in the column module of the basis")]
    NotInColumnModule,
    #[error("structural failure: {0}")]
    Structural(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("supplied diagonal degrees are not those of the Hermite form")]
    WrongDegrees,
    #[error("size guard: dimension {got} exceeds the oracle limit {limit}")]
    SizeGuard { limit: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
