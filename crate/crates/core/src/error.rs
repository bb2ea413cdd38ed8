use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("ring order {order} exceeds the configured limit {limit}")]
    TooLarge { order: u128, limit: u64 },
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("components share the prime {0}")]
    SharedPrime(u64),
    #[error("element {0} is not a unit")]
    NotAUnit(usize),
    #[error("operation requires a non-empty set")]
    EmptySet,
    #[error("{m} does not divide the characteristic {c}")]
    NotADivisor { m: u64, c: u64 },
    #[error("not a subgroup of the unit group: {0}")]
    NotASubgroup(String),
    #[error("classes do not partition the ring: {0}")]
    NotAPartition(String),
    #[error("not an S-ring: {0}")]
    NotAnSRing(String),
    #[error("the ideal {0}R is not an A-ideal")]
    NotAnAIdeal(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    SubgroupLimit { order: usize, limit: usize },
    #[error("not an epimorphism: {0}")]
    NotEpimorphism(String),
    #[error("sets are not contained in a single orbit")]
    NotInSingleOrbit,
    #[error("S-rings live over different rings")]
    RingMismatch,
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
