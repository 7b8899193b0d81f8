use thiserror::Error;

/// Invalid profile or ballot construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("number of alternatives must be between 1 and {max}, got {m}")]
    BadAlternativeCount { m: usize, max: usize },
    #[error("ballot ranks {len} alternatives, expected {m}")]
    BallotLength { len: usize, m: usize },
    #[error("alternative {0} appears more than once in a ballot")]
    DuplicateAlternative(usize),
    #[error("alternative {index} out of range for m = {m}")]
    OutOfRange { index: usize, m: usize },
    #[error("profile has no ballots")]
    Empty,
    #[error("ballot over {got} alternatives in a profile over {expected}")]
    MixedAlternativeCounts { expected: usize, got: usize },
}

/// Invalid weighted majority graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("margin matrix must be {m}x{m}")]
    Shape { m: usize },
    #[error("diagonal entry ({0},{0}) is not zero")]
    Diagonal(usize),
    #[error("margins ({x},{y}) and ({y},{x}) are not antisymmetric")]
    NotAntisymmetric { x: usize, y: usize },
    #[error("off-diagonal margins mix odd and even values")]
    MixedParity,
    #[error("number of alternatives must be between 1 and 64, got {0}")]
    BadAlternativeCount(usize),
    #[error("ties require an even margin weight, got {0}")]
    OddWeightWithTies(i32),
    #[error("margin weight must be at least 1, got {0}")]
    NonPositiveWeight(i32),
}

/// Failure to evaluate a rule on a given input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("{rule} is only defined on tie-free majority relations")]
    TiesUnsupported { rule: String },
    #[error("{rule} brute force is limited to {max} alternatives, got {m}")]
    InstanceTooLarge { rule: String, m: usize, max: usize },
    #[error("{rule} needs {needs} but was given less information")]
    InsufficientBasis { rule: String, needs: &'static str },
    #[error("{rule} refers to alternative {index}, but m = {m}")]
    AlternativeOutOfRange { rule: String, index: usize, m: usize },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("bad rule parameter in `{0}`")]
    BadParameter(String),
}

/// Failure of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("estimated {estimated} rule evaluations exceeds the budget of {budget}")]
    BudgetExceeded { estimated: u128, budget: u64 },
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error("invalid universe: {0}")]
    BadUniverse(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Failure to parse a document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares n = {declared} but {found} ballots follow")]
    VoterCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Profile {
        line: usize,
        #[source]
        source: ProfileError,
    },
    #[error(transparent)]
    EmptyProfile(ProfileError),
    #[error("graph document: {0}")]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(String),
}
