//! Weights of prime pairs, their nest-weights, and the rank of a word.
//!
//! A prime pair `p_{n,k} = (0^{n-k-1})0^{k-1}` has size `n` and its closing
//! bracket `k` positions from the end. Its plain weight is
//! `wt p_{n,k} = M_{n-1} + δ_k`. Embedded at depth `s` it contributes the
//! nest-weight `wt^(s) p_{n,k}`:
//!
//! * `wt' p_{n,k} = U_n + δ'_k`,
//! * `wt^(s) p_{n,k} = wt^(s-1) p_{n+1,k+1} - wt^(s-1) p_{n,k} - wt^(s-2) p_{n,k}`
//!   for `s >= 2`,
//!
//! defined whenever `n > k > s`. The rank of a word is the sum of the
//! nest-weights of all its matched pairs, each read with the `(n, k)` of its
//! brackets and its depth.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::{CheckedSub, Zero};

use crate::error::{Error, Result};
use crate::oracle::{self, step};
use crate::sequences::{Count, Sequences};
use crate::word::{PairSite, Symbol, Word};

/// `(n, k)` of a prime pair plus a derivative order `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

impl PairParams {
    pub fn new(n: usize, k: usize, s: usize) -> Result<PairParams> {
        if !(n > k && k > s) {
            return Err(Error::DomainViolation(format!(
                "need n > k > s, got n={n}, k={k}, s={s}"
            )));
        }
        Ok(PairParams { n, k, s })
    }

    /// The pair as a standalone word.
    pub fn word(&self) -> Word {
        let mut symbols = vec![Symbol::Zero; self.n];
        symbols[0] = Symbol::Open;
        symbols[self.n - self.k] = Symbol::Close;
        Word::from_balanced(symbols)
    }
}

/// One pair of a decomposed word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionEntry {
    pub n: usize,
    pub k: usize,
    pub depth: usize,
    pub contribution: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub word_length: usize,
    pub entries: Vec<DecompositionEntry>,
    pub total: Count,
}

impl Decomposition {
    pub fn sites(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .map(|e| (self.word_length - e.n + 1, self.word_length - e.k + 1))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeExtrema {
    pub min_word: Word,
    pub min_wt: Count,
    pub max_word: Word,
    pub max_wt: Count,
}

/// Memo tables for nest-weights, with the sequence table they build on.
#[derive(Debug, Clone, Default)]
pub struct NestWeights {
    seq: Sequences,
    memo: HashMap<(usize, usize, usize), Count>,
}

impl NestWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sequences(&mut self) -> &mut Sequences {
        &mut self.seq
    }

    pub fn pair_weight(&mut self, n: usize, k: usize) -> Result<Count> {
        self.nest_weight(n, k, 0)
    }

    pub fn nest_weight(&mut self, n: usize, k: usize, s: usize) -> Result<Count> {
        PairParams::new(n, k, s)?;
        self.nest_weight_unchecked(n, k, s)
    }

    fn nest_weight_unchecked(&mut self, n: usize, k: usize, s: usize) -> Result<Count> {
        if let Some(v) = self.memo.get(&(n, k, s)) {
            return Ok(v.clone());
        }
        let value = match s {
            0 => {
                let delta = self.seq.delta(k)?;
                self.seq.motzkin(n - 1) + delta
            }
            1 => self.seq.unique(n)? + self.seq.delta_prime(k)?,
            _ => {
                let shifted = self.nest_weight_unchecked(n + 1, k + 1, s - 1)?;
                let first = self.nest_weight_unchecked(n, k, s - 1)?;
                let second = self.nest_weight_unchecked(n, k, s - 2)?;
                shifted
                    .checked_sub(&(first + second))
                    .ok_or(Error::NegativeCount("nest weight"))?
            }
        };
        self.memo.insert((n, k, s), value.clone());
        Ok(value)
    }

    pub fn rank(&mut self, w: &Word) -> Result<Count> {
        Ok(self.decompose(w)?.total)
    }

    pub fn decompose(&mut self, w: &Word) -> Result<Decomposition> {
        if !w.is_umw() {
            return Err(Error::NotCanonical(w.to_text()));
        }
        let len = w.len();
        let entries = w
            .matched_pairs()
            .iter()
            .map(|site| {
                let (n, k) = (site.size(len), site.offset(len));
                Ok(DecompositionEntry {
                    n,
                    k,
                    depth: site.depth,
                    contribution: self.nest_weight(n, k, site.depth)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let total = entries.iter().map(|e| &e.contribution).sum();
        Ok(Decomposition {
            word_length: len,
            entries,
            total,
        })
    }

    pub fn range_extrema(&mut self, n: usize) -> Result<RangeExtrema> {
        match n {
            0 => Err(Error::DomainViolation("range length must be >= 1".into())),
            1 => Ok(RangeExtrema {
                min_word: Word::zero(),
                min_wt: Count::zero(),
                max_word: Word::zero(),
                max_wt: Count::zero(),
            }),
            _ => {
                let mut min = vec![Symbol::Zero; n];
                min[0] = Symbol::Open;
                min[n - 1] = Symbol::Close;
                let mut max: Vec<Symbol> = [Symbol::Open, Symbol::Close].repeat(n / 2);
                if n % 2 == 1 {
                    max.push(Symbol::Zero);
                }
                Ok(RangeExtrema {
                    min_word: Word::from_balanced(min),
                    min_wt: self.seq.motzkin(n - 1).clone(),
                    max_word: Word::from_balanced(max),
                    max_wt: self.seq.motzkin(n) - 1u32,
                })
            }
        }
    }

    pub fn unrank(&mut self, index: &Count) -> Word {
        if index.is_zero() {
            return Word::zero();
        }
        // smallest n with index < M_n; then M_{n-1} <= index
        let mut n = 2;
        while self.seq.motzkin(n) <= index {
            n += 1;
        }
        let mut offset = index - self.seq.motzkin(n - 1);
        oracle::with_completions(|table| {
            let mut symbols = Vec::with_capacity(n);
            symbols.push(Symbol::Open);
            let mut height = 1usize;
            for i in 1..n {
                let remaining = n - i - 1;
                for sym in Symbol::ALL {
                    let Some(h) = step(height, sym) else { continue };
                    let count = table.get(remaining, h);
                    if offset < count {
                        symbols.push(sym);
                        height = h;
                        break;
                    }
                    offset -= count;
                }
            }
            Word::from_balanced(symbols)
        })
    }
}

/// Index of `p_{n,k}` in the catalog of prime pairs, counted from 1.
pub fn pair_catalog_index(n: usize, k: usize) -> Result<Count> {
    PairParams::new(n, k, 0)?;
    Ok(Count::from(k) + Count::from(n - 1) * Count::from(n - 2) / 2u32)
}

/// Builds the word of length `len` with brackets at the given 1-based
/// `(open, close)` positions and zeros elsewhere.
pub fn compose(len: usize, sites: &[(usize, usize)]) -> Result<Word> {
    if len == 0 {
        return Err(Error::EmptyInput);
    }
    let mut symbols = vec![Symbol::Zero; len];
    for &(open, close) in sites {
        if open == 0 || close > len || open >= close {
            return Err(Error::InvalidSite {
                open,
                close,
                length: len,
            });
        }
        for (pos, sym) in [(open, Symbol::Open), (close, Symbol::Close)] {
            if !symbols[pos - 1].is_zero() {
                return Err(Error::PositionConflict(pos));
            }
            symbols[pos - 1] = sym;
        }
    }
    for (i, &(a1, b1)) in sites.iter().enumerate() {
        for &(a2, b2) in &sites[i + 1..] {
            let ((a, b), (c, d)) = if a1 < a2 {
                ((a1, b1), (a2, b2))
            } else {
                ((a2, b2), (a1, b1))
            };
            if c < b && b < d {
                return Err(Error::Overlap(a, b, c, d));
            }
        }
    }
    let word = Word::from_balanced(symbols);
    if !word.is_umw() {
        return Err(Error::NotCanonical(word.to_text()));
    }
    Ok(word)
}

/// The sites of `w` as `(open, close)` positions.
pub fn sites_of(w: &Word) -> Vec<(usize, usize)> {
    w.matched_pairs()
        .iter()
        .map(|s: &PairSite| (s.open_pos, s.close_pos))
        .collect()
}

thread_local! {
    static TABLE: RefCell<NestWeights> = RefCell::new(NestWeights::new());
}

fn with_table<T>(f: impl FnOnce(&mut NestWeights) -> T) -> T {
    TABLE.with(|t| f(&mut t.borrow_mut()))
}

pub fn pair_weight(n: usize, k: usize) -> Result<Count> {
    with_table(|t| t.pair_weight(n, k))
}

pub fn pair_nest_weight(n: usize, k: usize, s: usize) -> Result<Count> {
    with_table(|t| t.nest_weight(n, k, s))
}

pub fn range_extrema(n: usize) -> Result<RangeExtrema> {
    with_table(|t| t.range_extrema(n))
}

pub fn rank(w: &Word) -> Result<Count> {
    with_table(|t| t.rank(w))
}

pub fn unrank(index: &Count) -> Word {
    with_table(|t| t.unrank(index))
}

pub fn decompose(w: &Word) -> Result<Decomposition> {
    with_table(|t| t.decompose(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{motzkin_number, unique_count};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn plain_pair_weights() {
        assert_eq!(pair_weight(12, 1).unwrap(), c(5798));
        assert_eq!(pair_weight(6, 2).unwrap(), c(22));
        assert_eq!(pair_weight(9, 8).unwrap(), c(708));
        assert!(pair_weight(3, 3).is_err());
        assert!(pair_weight(3, 0).is_err());
    }

    #[test]
    fn expanded_forms_agree() {
        // M_{n-1} + U_{k+1} - M_{k-1}, and U_n + M_{k+2} - 2M_{k+1} - U_k
        let m = |i| motzkin_number(i);
        let u = |i| unique_count(i).unwrap();
        for n in 3..=20 {
            for k in 1..n {
                assert_eq!(pair_weight(n, k).unwrap(), m(n - 1) + u(k + 1) - m(k - 1));
                if k >= 2 {
                    assert_eq!(
                        pair_nest_weight(n, k, 1).unwrap(),
                        u(n) + m(k + 2) - m(k + 1) * 2u32 - u(k)
                    );
                }
            }
        }
    }

    #[test]
    fn nest_weights() {
        assert_eq!(pair_nest_weight(11, 8, 1).unwrap(), c(3932));
        assert_eq!(pair_nest_weight(4, 3, 2).unwrap(), c(3));
        assert_eq!(pair_nest_weight(6, 2, 1).unwrap(), c(30));
        assert_eq!(pair_nest_weight(5, 3, 2).unwrap(), c(9));
        assert_eq!(pair_nest_weight(6, 2, 0).unwrap(), c(22));
        assert!(matches!(
            pair_nest_weight(5, 2, 2),
            Err(Error::DomainViolation(_))
        ));
        assert!(pair_nest_weight(5, 1, 1).is_err());
    }

    #[test]
    fn catalog_index() {
        assert_eq!(pair_catalog_index(2, 1).unwrap(), c(1));
        assert_eq!(pair_catalog_index(6, 1).unwrap(), c(11));
        assert_eq!(pair_catalog_index(3, 2).unwrap(), c(3));
        assert!(pair_catalog_index(2, 2).is_err());
        // enumerate the catalog by (n, k) and compare
        let mut i = 0u64;
        for n in 2..=15 {
            for k in 1..n {
                i += 1;
                assert_eq!(pair_catalog_index(n, k).unwrap(), c(i));
            }
        }
    }

    #[test]
    fn pair_words() {
        assert_eq!(PairParams::new(6, 2, 0).unwrap().word(), w("(000)0"));
        assert_eq!(PairParams::new(2, 1, 0).unwrap().word(), w("()"));
        assert_eq!(PairParams::new(9, 8, 0).unwrap().word(), w("()0000000"));
    }

    #[test]
    fn extrema() {
        assert_eq!(range_extrema(9).unwrap().max_wt, c(834));
        let six = range_extrema(6).unwrap();
        assert_eq!(
            (six.min_word, six.min_wt, six.max_word, six.max_wt),
            (w("(0000)"), c(21), w("()()()"), c(50))
        );
        let two = range_extrema(2).unwrap();
        assert_eq!((two.min_word, two.max_word), (w("()"), w("()")));
        assert_eq!((two.min_wt, two.max_wt), (c(1), c(1)));
        let one = range_extrema(1).unwrap();
        assert_eq!((one.min_word, one.min_wt), (w("0"), c(0)));
        assert!(range_extrema(0).is_err());
        assert_eq!(range_extrema(9).unwrap().max_word, w("()()()()0"));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&w("(0())0")).unwrap(), c(28));
        assert_eq!(rank(&w("((00)0(0()))")).unwrap(), c(9763));
        assert_eq!(rank(&w("()0(0())0")).unwrap(), c(736));
        assert_eq!(rank(&w("(0)")).unwrap(), c(2));
        assert_eq!(rank(&w("0")).unwrap(), c(0));
        assert!(matches!(rank(&w("0()")), Err(Error::NotCanonical(_))));
    }

    #[test]
    fn unranks() {
        assert_eq!(unrank(&c(11)), w("(0())"));
        assert_eq!(unrank(&c(8)), w("()()"));
        assert_eq!(unrank(&c(0)), w("0"));
        assert_eq!(unrank(&c(1)), w("()"));
        assert_eq!(unrank(&c(5)), w("(0)0"));
        assert_eq!(unrank(&c(834)), w("()()()()0"));
        assert_eq!(unrank(&c(835)), w("(00000000)"));
    }

    #[test]
    fn decompositions() {
        let d = decompose(&w("((00)0(0()))")).unwrap();
        let got: Vec<_> = d
            .entries
            .iter()
            .map(|e| (e.n, e.k, e.depth, e.contribution.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (12, 1, 0, c(5798)),
                (11, 8, 1, c(3932)),
                (6, 2, 1, c(30)),
                (4, 3, 2, c(3)),
            ]
        );
        assert_eq!(d.total, c(9763));

        let d = decompose(&w("(0())0")).unwrap();
        assert_eq!(d.entries.len(), 2);
        assert_eq!(
            (d.entries[0].n, d.entries[0].k, d.entries[0].depth),
            (6, 2, 0)
        );
        assert_eq!(d.entries[1].contribution, c(6));
        assert_eq!(d.total, c(28));

        let d = decompose(&w("()")).unwrap();
        assert_eq!(d.total, c(1));
        assert_eq!(d.entries[0].contribution, c(1));

        let d = decompose(&w("0")).unwrap();
        assert!(d.entries.is_empty());
        assert_eq!(d.total, c(0));
    }

    #[test]
    fn composition() {
        assert_eq!(
            compose(12, &[(1, 12), (2, 5), (7, 11), (9, 10)]).unwrap(),
            w("((00)0(0()))")
        );
        assert_eq!(compose(6, &[(1, 5), (3, 4)]).unwrap(), w("(0())0"));
        assert_eq!(compose(1, &[]).unwrap(), w("0"));
        assert_eq!(
            compose(12, &[(1, 6), (4, 8)]),
            Err(Error::Overlap(1, 6, 4, 8))
        );
        assert_eq!(
            compose(6, &[(1, 5), (5, 6)]),
            Err(Error::PositionConflict(5))
        );
        assert!(matches!(compose(6, &[(2, 5)]), Err(Error::NotCanonical(_))));
        assert!(matches!(compose(3, &[]), Err(Error::NotCanonical(_))));
        assert!(matches!(
            compose(4, &[(1, 5)]),
            Err(Error::InvalidSite { .. })
        ));
        assert!(matches!(
            compose(4, &[(3, 2)]),
            Err(Error::InvalidSite { .. })
        ));
        assert_eq!(compose(0, &[]), Err(Error::EmptyInput));
    }

    #[test]
    fn decomposition_sites_recompose() {
        let word = w("((00)0(0()))");
        let d = decompose(&word).unwrap();
        assert_eq!(d.sites(), sites_of(&word));
        assert_eq!(compose(d.word_length, &d.sites()).unwrap(), word);
    }

    #[test]
    fn separate_instances() {
        let mut a = NestWeights::new();
        assert_eq!(a.nest_weight(10, 9, 5).unwrap(), c(412));
        assert_eq!(a.rank(&w("(0())0")).unwrap(), c(28));
    }
}
