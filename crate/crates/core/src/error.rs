use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character outside the word alphabet; `position` is 1-based.
    #[error("invalid letter {character:?} at position {position}")]
    InvalidLetter { position: usize, character: char },

    #[error("word length {length} exceeds the maximum of {max} letters")]
    WordTooLong { length: usize, max: usize },

    #[error("length {length} exceeds the budget of {limit} for {what}")]
    LengthBudgetExceeded {
        what: &'static str,
        length: usize,
        limit: usize,
    },

    #[error("(alpha, beta) = ({alpha}, {beta}) is not an admissible construction pair")]
    InvalidPair { alpha: u32, beta: u32 },

    #[error("{what} requires n >= {min}, got {n}")]
    Domain {
        what: &'static str,
        n: i64,
        min: i64,
    },

    #[error("the word is already symmetric; no moves remain")]
    TerminalState,

    #[error("position {position} is out of range for a word of length {length}")]
    InvalidPosition { position: usize, length: usize },
}
