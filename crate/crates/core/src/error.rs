use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact")]
    NonExactDivision,
    #[error("zero substituted into a negative power of {0}")]
    ZeroSubstitutionIntoNegativePower(String),
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("composition has an empty block")]
    EmptyBlock,
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("result is not central")]
    CentralityViolation,
    #[error("index {index} out of range for grade {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("linear system is singular")]
    SingularSystem,
    #[error("grade {0} exceeds the configured bound {1}")]
    GradeTooLarge(usize, usize),
    #[error("plethysm parameter equals 1")]
    DegeneratePlethysmParameter,
    #[error("inadmissible vertex {0:?}")]
    InadmissibleVertex([u8; 4]),
    #[error("resource budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("weight table mismatch: {0}")]
    TableMismatch(String),
    #[error("element is not central")]
    NotCentral,
    #[error("numerator not divisible as required")]
    NonDivisible,
    #[error("denominator survives the shuffle product")]
    DenominatorSurvives,
    #[error("limit diverges")]
    LimitDiverges,
    #[error("evaluation matrix is singular after {0} attempts")]
    SingularEvaluationMatrix(usize),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("mixed alphabets: {0}")]
    MixedAlphabets(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("{0} occurs with a negative exponent")]
    NegativeExponent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
