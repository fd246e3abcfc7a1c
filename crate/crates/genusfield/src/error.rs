use thiserror::Error;

/// Errors produced by the library. Validation-style errors carry enough
/// context to print a useful diagnostic; the CLI maps them to exit code 2,
/// internal inconsistencies to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("modulus degree {got} does not match extension degree {want}")]
    DegreeMismatch { want: usize, got: usize },
    #[error("field size q = {0} exceeds the supported bound {1}")]
    FieldTooLarge(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown coefficient symbol at byte {pos}")]
    UnknownCoefficient { pos: usize },
    #[error("zero polynomial not allowed")]
    ZeroPolynomial,
    #[error("l = {l} does not divide q - 1 = {qm1}; not a Kummer setting")]
    NotKummer { l: u64, qm1: u64 },
    #[error("l equals the field characteristic {0}; wild ramification is unsupported")]
    WildPrime(u64),
    #[error("generators are dependent modulo l-th powers; witness alpha = {witness:?}")]
    DependentGenerators { witness: Vec<u64> },
    #[error("generator has constant radicand after normalization")]
    ConstantRadical,
    #[error("lattice operands live over different fields or exponents")]
    FieldMismatch,
    #[error("group order {0} exceeds the scan bound {1}")]
    GroupTooLarge(u64, u64),
    #[error("irreducible factor degree {0} exceeds the splitting bound")]
    FactorDegreeTooLarge(usize),
    #[error("listed prime {0} is unramified (zero exponent row)")]
    UnramifiedListedPrime(String),
    #[error("prime {0} is not part of the spec")]
    PrimeNotListed(String),
    #[error("all support degrees are divisible by l; no admissible P_r")]
    AllDegreesDivisible,
    #[error("first lattice is not contained in the second")]
    NotContained,
    #[error("support size {0} exceeds the brute-force bound {1}")]
    BoundExceeded(usize, usize),
    #[error("no unique maximal unramified sublattice; incomparable witnesses {0} and {1}")]
    NoUniqueMaximum(String, String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
