use thiserror::Error;

/// Everything that can go wrong when parsing, combining or weighting words.
///
/// Positions are 1-based, counted from the left end of the word (or of the
/// right-aligned frame for binary operations).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("illegal character {ch:?} at position {position}")]
    IllegalCharacter { position: usize, ch: char },
    #[error("unbalanced: ')' at position {0} has no matching '('")]
    UnmatchedClose(usize),
    #[error("unbalanced: '(' at position {0} is never closed")]
    Unclosed(usize),

    #[error("operands intersect at position {0}")]
    Intersects(usize),
    #[error("operands are nested: a block of one lies inside a block of the other")]
    NestedOperands,
    #[error("subtrahend has a symbol the minuend lacks at position {0}")]
    NotSubword(usize),
    #[error("subtrahend block at position {0} is not a top-level block of the minuend")]
    NotTopLevel(usize),

    #[error("word {0:?} is not canonical (leading zero)")]
    NotCanonical(String),
    #[error("parameters out of domain: {0}")]
    DomainViolation(String),
    #[error("negative count in {0}")]
    NegativeCount(&'static str),

    #[error("pair spans ({0}, {1}) and ({2}, {3}) cross")]
    Overlap(usize, usize, usize, usize),
    #[error("position {0} is used more than once")]
    PositionConflict(usize),
    #[error("invalid pair ({open}, {close}) for length {length}")]
    InvalidSite {
        open: usize,
        close: usize,
        length: usize,
    },

    #[error("range {0} is too large for exhaustive enumeration (limit {1})")]
    RangeTooLarge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
