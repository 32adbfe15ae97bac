//! Motzkin words: parsing, ordering and structural analysis.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One brick of a Motzkin word. The derived order is the alphabet order
/// `0 < ( < )`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    Open,
    Close,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::Open, Symbol::Close];

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::Open => '(',
            Symbol::Close => ')',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '(' => Some(Symbol::Open),
            ')' => Some(Symbol::Close),
            _ => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Symbol::Zero
    }
}

/// A balanced word over `{0, (, )}`.
///
/// Leading zeros are allowed (partial subtraction produces them), but only
/// words for which [`Word::is_umw`] holds take part in the ordering of
/// unique Motzkin words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

/// One matched pair, in 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairSite {
    pub open_pos: usize,
    pub close_pos: usize,
    /// Number of pairs strictly enclosing this one.
    pub depth: usize,
}

impl PairSite {
    /// Distance from the opening bracket to the end of a word of length `len`, inclusive.
    pub fn size(&self, len: usize) -> usize {
        len - self.open_pos + 1
    }

    /// Position of the closing bracket counted from the end of a word of length `len`.
    pub fn offset(&self, len: usize) -> usize {
        len - self.close_pos + 1
    }

    pub fn contains(&self, other: &PairSite) -> bool {
        self.open_pos < other.open_pos && other.close_pos < self.close_pos
    }
}

/// A top-level block plus the zeros that follow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSegment {
    pub word: Word,
    pub start_pos: usize,
}

impl Word {
    /// The identity word `"0"`.
    pub fn zero() -> Word {
        Word {
            symbols: vec![Symbol::Zero],
        }
    }

    /// Builds a word from symbols, checking balance.
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Word> {
        if symbols.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_balance(&symbols)?;
        Ok(Word { symbols })
    }

    /// Caller guarantees `symbols` is nonempty and balanced.
    pub(crate) fn from_balanced(symbols: Vec<Symbol>) -> Word {
        debug_assert!(!symbols.is_empty() && check_balance(&symbols).is_ok());
        Word { symbols }
    }

    pub fn parse(text: &str) -> Result<Word> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let symbols = text
            .chars()
            .enumerate()
            .map(|(i, ch)| {
                Symbol::from_char(ch).ok_or(Error::IllegalCharacter {
                    position: i + 1,
                    ch,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_symbols(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; a word has at least one symbol.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.symbols.iter().map(|s| s.as_char()).collect()
    }

    /// True for `"0"` and for every word starting with `(`.
    pub fn is_umw(&self) -> bool {
        self.symbols[0] == Symbol::Open || self.symbols == [Symbol::Zero]
    }

    pub fn is_all_zero(&self) -> bool {
        self.symbols.iter().all(|s| s.is_zero())
    }

    pub fn strip_leading_zeros(&self) -> Word {
        match self.symbols.iter().position(|s| !s.is_zero()) {
            Some(first) => Word {
                symbols: self.symbols[first..].to_vec(),
            },
            None => Word::zero(),
        }
    }

    /// Left-pads with zeros up to `len` symbols; no-op if already that long.
    pub fn padded_to(&self, len: usize) -> Word {
        if self.len() >= len {
            return self.clone();
        }
        let mut symbols = vec![Symbol::Zero; len - self.len()];
        symbols.extend_from_slice(&self.symbols);
        Word { symbols }
    }

    /// All matched pairs ordered by opening position.
    pub fn matched_pairs(&self) -> Vec<PairSite> {
        let mut stack = Vec::new();
        let mut sites = Vec::with_capacity(self.len() / 2);
        for (i, sym) in self.symbols.iter().enumerate() {
            match sym {
                Symbol::Open => {
                    stack.push(sites.len());
                    sites.push(PairSite {
                        open_pos: i + 1,
                        close_pos: 0,
                        depth: stack.len() - 1,
                    });
                }
                Symbol::Close => {
                    let idx = stack.pop().expect("balanced word");
                    sites[idx].close_pos = i + 1;
                }
                Symbol::Zero => {}
            }
        }
        sites
    }

    /// Spans of the depth-0 pairs.
    pub fn blocks(&self) -> Vec<PairSite> {
        self.matched_pairs()
            .into_iter()
            .filter(|s| s.depth == 0)
            .collect()
    }

    /// Splits the word into prime words. Each segment runs from a top-level
    /// `(` up to the next top-level `(` (or the end of the word), so trailing
    /// zeros belong to the segment before them. Leading zeros belong to no
    /// segment.
    pub fn prime_segments(&self) -> Vec<PrimeSegment> {
        let starts: Vec<usize> = self.blocks().iter().map(|b| b.open_pos).collect();
        starts
            .iter()
            .enumerate()
            .map(|(j, &start)| {
                let end = starts.get(j + 1).map_or(self.len(), |&next| next - 1);
                PrimeSegment {
                    word: Word::from_balanced(self.symbols[start - 1..end].to_vec()),
                    start_pos: start,
                }
            })
            .collect()
    }
}

fn check_balance(symbols: &[Symbol]) -> Result<()> {
    let mut open = Vec::new();
    for (i, sym) in symbols.iter().enumerate() {
        match sym {
            Symbol::Open => open.push(i + 1),
            Symbol::Close => {
                if open.pop().is_none() {
                    return Err(Error::UnmatchedClose(i + 1));
                }
            }
            Symbol::Zero => {}
        }
    }
    match open.first() {
        Some(&pos) => Err(Error::Unclosed(pos)),
        None => Ok(()),
    }
}

/// Length first, then symbol by symbol with `0 < ( < )`.
pub fn compare_lex(a: &Word, b: &Word) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.symbols.cmp(&b.symbols))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_lex(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}
