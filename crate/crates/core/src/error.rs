use thiserror::Error;

/// Every failure mode surfaced by the library.
///
/// `TheoremViolated` is special: it means a verifier found a concrete
/// counterexample to a statement that is supposed to be a theorem. It should
/// never fire; when it does the witness is carried in the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("subgroup lattice exceeded {cap} members")]
    LatticeTooLarge { cap: usize },

    #[error("J·H is not a subgroup (JH != HJ)")]
    NotPermutable,

    #[error("hypothesis not met: {0}")]
    HypothesisFailed(String),

    #[error("theorem violated: {0}")]
    TheoremViolated(String),

    #[error("chain is not maximal: {0}")]
    NotMaximal(String),

    #[error("context is decomposable: {0} proper intermediate subgroups")]
    NotIndecomposable(usize),

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("characteristic {p} divides degree {degree}")]
    WildCharacteristic { p: u64, degree: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("exponent {0} is not a power of the characteristic")]
    NotAdditive(usize),

    #[error("leading coefficient condition fails: {0}")]
    BadLeadingCoefficient(String),

    #[error("composition collapses to a constant")]
    DegenerateResult,

    #[error("not a polynomial composite: {0}")]
    NotAPolynomialComposite(String),

    #[error("prime {0} is not admissible here")]
    BadPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
