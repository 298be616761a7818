use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("at least one generator is required")]
    EmptyGenerators,
    #[error("generators act on different degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image array is not a bijection")]
    NotABijection,
    #[error("point {point} repeated inside a cycle")]
    RepeatedPoint { point: usize },
    #[error("point {point} outside the domain of {degree} points")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutation degree {degree} is too large")]
    DegreeTooLarge { degree: usize },
    #[error("group order exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("element index {0} out of range")]
    InvalidIndex(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("ramified prime degree must be at least 1")]
    ZeroDegree,
    #[error("degree {degree} exceeds the search limit of {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("node budget of {budget} exhausted before the search completed")]
    SearchBudgetExceeded { budget: u64 },
    #[error("q = {0} is an even prime power other than 2 or 4")]
    HypothesisViolated(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rule needs a prime below 23, got {0}")]
    PrimeOutOfRange(u64),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("invalid configuration: {0}")]
    Config(String),
}
