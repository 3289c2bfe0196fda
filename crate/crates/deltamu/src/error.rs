//! Crate-wide error type.

use crate::exact::Var;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),

    #[error("zero or empty input: {0}")]
    ZeroInput(&'static str),

    #[error("pole on integration path near x = {0}")]
    PoleOnPath(String),

    #[error("no recurrence found up to order {0}")]
    NoRecurrenceFound(usize),

    #[error("boundary terms never vanish: {0}")]
    NeverVanishes(String),

    #[error("leading recurrence coefficient vanishes at n = {0}")]
    SingularLeadingCoefficient(i64),

    #[error("characteristic polynomial has complex roots ({real} real roots, degree {degree})")]
    ComplexRootsPresent { real: usize, degree: usize },

    #[error("two characteristic roots share a modulus within enclosure width")]
    ModulusTie,

    #[error("unsupported denominator: irreducible factor of degree {0}")]
    UnsupportedDenominator(usize),

    #[error("no scaling rule found within catalog: {0}")]
    NoRuleFound(String),

    #[error("nonpositive delta: {0}")]
    NonpositiveDelta(String),

    #[error("insufficient precision: need about {needed} bits, have {have}")]
    InsufficientPrecision { needed: i64, have: i64 },

    #[error("exact hit: approximation equals the target at working precision")]
    ExactHit,

    #[error("condition violated: {0}")]
    ConditionViolated(String),

    #[error("congruence violated: a = {0} does not satisfy a mod 4 = 3")]
    CongruenceViolated(u64),

    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal check failed: {0}")]
    InternalCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
