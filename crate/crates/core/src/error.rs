use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("duplicate index {0}")]
    DuplicateIndex(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("malformed game file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("duplicate profile key {0:?}")]
    DuplicateProfile(String),

    #[error("payoff vector for {key:?} has length {found}, expected {expected}")]
    PayoffLength {
        key: String,
        expected: usize,
        found: usize,
    },

    #[error("unknown action {0:?}")]
    UnknownAction(String),

    #[error("profile {0:?} has no payoff and no default is declared")]
    MissingProfile(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("unknown relation {0:?}")]
    UnknownRelation(String),

    #[error("generator guard: {0}")]
    Guard(String),
}
