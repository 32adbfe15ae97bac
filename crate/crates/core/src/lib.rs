//! Arithmetic of ordered Motzkin words.
//!
//! Words over `{0, (, )}` without leading zeros (plus the word `"0"`) are
//! ordered by length and then lexicographically with `0 < ( < )`. The index
//! of a word in that order is its weight. This crate computes weights from
//! the prime pairs a word is made of, inverts the map, and implements the
//! partial addition and subtraction of words. A brute-force [`oracle`]
//! checks the formulas independently.
//!
//! ```
//! use motzkin::{rank, unrank, Word};
//!
//! let w: Word = "((00)0(0()))".parse().unwrap();
//! let wt = rank(&w).unwrap();
//! assert_eq!(wt.to_string(), "9763");
//! assert_eq!(unrank(&wt), w);
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod sequences;
pub mod table;
pub mod verify;
pub mod weights;
pub mod word;

pub use arith::{padd, psub};
pub use error::{Error, Result};
pub use sequences::{delta, delta_prime, motzkin_number, unique_count, Count};
pub use weights::{
    compose, decompose, pair_catalog_index, pair_nest_weight, pair_weight, range_extrema, rank,
    unrank, Decomposition, DecompositionEntry, NestWeights, PairParams, RangeExtrema,
};
pub use word::{compare_lex, PairSite, PrimeSegment, Symbol, Word};
