use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range (expected 1..=16 with p^m <= 2^16)")]
    DegreeOutOfRange(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("gcd({0}, {1}) != 1")]
    GcdNotOne(u64, u64),
    #[error("no subfield embedding from GF({0}) into GF({1})")]
    NoEmbedding(u64, u64),
    #[error("invalid hex encoding: {0}")]
    BadHex(String),

    #[error("group factor order {0} is smaller than 2")]
    BadGroupOrder(u64),
    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("algebra element context mismatch (group or field differs)")]
    ContextMismatch,
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("cannot truncate: coordinates do not sum to zero")]
    TruncateParity,

    #[error("spectral component {0} lies outside its declared subfield")]
    SubfieldViolation(usize),
    #[error("component index {0} out of range 1..={1}")]
    ComponentOutOfRange(usize, usize),
    #[error("n = {0} must be odd")]
    EvenLength(u64),

    #[error("desk-scale guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("network is not acyclic")]
    CycleDetected,
    #[error("invalid network: {0}")]
    BadNetwork(String),
    #[error("message lies outside the module")]
    MessageOutsideModule,
    #[error("perturbation element is not in the annihilator")]
    NotInAnnihilator,
    #[error("operation requires a group-code module context")]
    ScalarContext,

    #[error("insufficient min-cut: found only {found} edge-disjoint paths, need {need}")]
    InsufficientMinCut { need: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
