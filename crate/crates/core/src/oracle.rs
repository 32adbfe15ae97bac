//! Brute-force ground truth for the weight formulas.
//!
//! Nothing in here knows about pair weights or nest-weights: ranges are
//! listed by backtracking and ranks are obtained by counting completions of
//! Motzkin paths.

use std::cell::RefCell;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequences::Count;
use crate::word::{Symbol, Word};

/// Largest range `enumerate_range` will list.
pub const MAX_ENUMERATION_LENGTH: usize = 16;

/// Memo table for `f(r, h)`: the number of ways to finish a word with `r`
/// symbols left when `h` brackets are open.
#[derive(Debug, Clone, Default)]
pub struct Completions {
    // rows[r][h] for h <= r
    rows: Vec<Vec<Count>>,
}

impl Completions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, remaining: usize, height: usize) -> Count {
        if height > remaining {
            return Count::zero();
        }
        while self.rows.len() <= remaining {
            let r = self.rows.len();
            let row = if r == 0 {
                vec![Count::one()]
            } else {
                let prev = &self.rows[r - 1];
                let at = |h: usize| prev.get(h).cloned().unwrap_or_default();
                (0..=r)
                    .map(|h| {
                        let mut v = at(h) + at(h + 1);
                        if h > 0 {
                            v += at(h - 1);
                        }
                        v
                    })
                    .collect()
            };
            self.rows.push(row);
        }
        self.rows[remaining][height].clone()
    }

    /// Rank from counting: the number of UMWs shorter than `w` plus the
    /// number of same-length UMWs that precede it.
    pub fn rank(&mut self, w: &Word) -> Result<Count> {
        if !w.is_umw() {
            return Err(Error::NotCanonical(w.to_text()));
        }
        let len = w.len();
        if len == 1 {
            return Ok(Count::zero());
        }
        // UMWs of length < len, i.e. all Motzkin words of length len - 1.
        let mut rank = self.get(len - 1, 0);
        let mut height = 1usize;
        for (i, &sym) in w.symbols().iter().enumerate().skip(1) {
            let remaining = len - i - 1;
            for smaller in Symbol::ALL.into_iter().take_while(|&s| s < sym) {
                if let Some(h) = step(height, smaller) {
                    rank += self.get(remaining, h);
                }
            }
            height = step(height, sym).expect("balanced word");
        }
        Ok(rank)
    }
}

pub(crate) fn step(height: usize, sym: Symbol) -> Option<usize> {
    match sym {
        Symbol::Zero => Some(height),
        Symbol::Open => Some(height + 1),
        Symbol::Close => height.checked_sub(1),
    }
}

thread_local! {
    static TABLE: RefCell<Completions> = RefCell::new(Completions::new());
}

pub(crate) fn with_completions<T>(f: impl FnOnce(&mut Completions) -> T) -> T {
    TABLE.with(|t| f(&mut t.borrow_mut()))
}

pub fn completions(remaining: usize, height: usize) -> Count {
    with_completions(|t| t.get(remaining, height))
}

pub fn rank_by_counting(w: &Word) -> Result<Count> {
    with_completions(|t| t.rank(w))
}

/// Every UMW of length `n` in lexicographic order.
pub fn enumerate_range(n: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::DomainViolation("range length must be >= 1".into()));
    }
    if n > MAX_ENUMERATION_LENGTH {
        return Err(Error::RangeTooLarge(n, MAX_ENUMERATION_LENGTH));
    }
    if n == 1 {
        return Ok(vec![Word::zero()]);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    prefix.push(Symbol::Open);
    extend(&mut prefix, 1, n, &mut out);
    Ok(out)
}

fn extend(prefix: &mut Vec<Symbol>, height: usize, n: usize, out: &mut Vec<Word>) {
    if prefix.len() == n {
        if height == 0 {
            out.push(Word::from_balanced(prefix.clone()));
        }
        return;
    }
    let remaining = n - prefix.len() - 1;
    for sym in Symbol::ALL {
        match step(height, sym) {
            Some(h) if h <= remaining => {
                prefix.push(sym);
                extend(prefix, h, n, out);
                prefix.pop();
            }
            _ => {}
        }
    }
}

/// All UMWs of length at most `max_len`, in global order.
pub fn enumerate_upto(max_len: usize) -> Result<Vec<Word>> {
    let mut all = Vec::new();
    for n in 1..=max_len {
        all.extend(enumerate_range(n)?);
    }
    Ok(all)
}
