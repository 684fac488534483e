use alloc::string::String;

/// Errors raised by the digit-expansion machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("digit {digit} exceeds alphabet maximum {alphabet_max}")]
    DigitOutOfRange { digit: u32, alphabet_max: u32 },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u8, right: u8 },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("sequence is not the quasi-greedy expansion of 1 in any base: {0}")]
    NotQuasiGreedyAlpha(String),
    #[error("alpha is not admissible: {0}")]
    AlphaInvalid(String),
    #[error("value lies outside J_q = [0, m/(q-1)]")]
    OutOfRange,
    #[error("sequence is not a finite greedy sequence")]
    NotFiniteGreedy,
    #[error("sequence is not quasi-greedy in this base")]
    NotQuasiGreedy,
    #[error("point is not in V_q")]
    NotInV,
    #[error("sequence is not univoque in this base")]
    NotUnivoque,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("base is not a left endpoint of a component of (1,inf) minus V: {0}")]
    NotLeftEndpoint(String),
    #[error("base is not in V minus closure(U): {0}")]
    NotVOnly(String),
    #[error("base lies in the closure of U; U'_q is not a subshift")]
    InClosureU,
    #[error("could not classify base: {0}")]
    Unclassifiable(String),
    #[error("undecided at the configured precision: {0}")]
    UndecidedAtPrecision(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("no isolated root: {0}")]
    NoIsolatedRoot(String),
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("enumeration exceeded the node cap of {0}")]
    Overflow(usize),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error envelope.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DigitOutOfRange { .. } => "DigitOutOfRange",
            Error::AlphabetMismatch { .. } => "AlphabetMismatch",
            Error::InvalidSequence(_) => "InvalidSequence",
            Error::Parse(_) => "Parse",
            Error::NotQuasiGreedyAlpha(_) => "NotQuasiGreedyAlpha",
            Error::AlphaInvalid(_) => "AlphaInvalid",
            Error::OutOfRange => "OutOfRange",
            Error::NotFiniteGreedy => "NotFiniteGreedy",
            Error::NotQuasiGreedy => "NotQuasiGreedy",
            Error::NotInV => "NotInV",
            Error::NotUnivoque => "NotUnivoque",
            Error::Unsupported(_) => "Unsupported",
            Error::NotLeftEndpoint(_) => "NotLeftEndpoint",
            Error::NotVOnly(_) => "NotVOnly",
            Error::InClosureU => "InClosureU",
            Error::Unclassifiable(_) => "Unclassifiable",
            Error::UndecidedAtPrecision(_) => "UndecidedAtPrecision",
            Error::InvalidPolynomial(_) => "InvalidPolynomial",
            Error::NoIsolatedRoot(_) => "NoIsolatedRoot",
            Error::DivisionByZero => "DivisionByZero",
            Error::Overflow(_) => "Overflow",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
