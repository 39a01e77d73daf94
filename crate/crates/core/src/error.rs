use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A prefix dips below zero, or the text ends with unclosed steps.
    #[error("unbalanced input at position {position}")]
    NonBalanced { position: usize },

    #[error("unexpected character {found:?} at position {position}")]
    BadAlphabet { found: char, position: usize },

    #[error("trailing input after a complete tree at position {position}")]
    TrailingGarbage { position: usize },

    #[error("word does not match (a p*)* a: {reason}")]
    GrammarViolation { reason: String },

    #[error("unrecognised token {token:?}")]
    BadToken { token: String },

    #[error("path length must be at least 1")]
    ZeroPathLength,

    #[error("tree is not an Elena: non-last child of spine node {spine_index} is not a chain")]
    NotElenaShape { spine_index: usize },

    #[error("valley altitudes decrease at valley {index}")]
    NotNondecreasing { index: usize },

    #[error("tree has height {height}, at most 4 is allowed")]
    TooTall { height: usize },

    #[error("{what}: requested {requested}, limit is {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("{what}: requested {requested}, minimum is {minimum}")]
    BelowMinimum {
        what: &'static str,
        requested: usize,
        minimum: usize,
    },

    #[error("series order {requested} exceeds budget {budget}")]
    BudgetExceeded { requested: usize, budget: usize },

    #[error("denominator constant term must be 1 or -1")]
    NonUnitDenominator,

    #[error("{identity} violated at {location}: expected {expected}, found {found}")]
    IdentityViolated {
        identity: &'static str,
        location: String,
        expected: String,
        found: String,
    },
}
