//! Partial addition `⊕` and partial subtraction `⊖` of Motzkin words.
//!
//! Operands are right-aligned: the shorter one is padded with leading zeros.
//! A zero is transparent in both operations, so `⊕` merges two words whose
//! bracket positions are disjoint and `⊖` erases a subword. Both are only
//! defined when the top-level blocks involved neither nest nor cross; under
//! that condition weights add, `wt(x ⊕ y) = wt x + wt y`.
//!
//! Results are always stripped of leading zeros.

use crate::error::{Error, Result};
use crate::word::{PairSite, Symbol, Word};

fn spans_meet(a: &PairSite, b: &PairSite) -> bool {
    a.open_pos <= b.close_pos && b.open_pos <= a.close_pos
}

/// `x ⊕ y`.
pub fn padd(x: &Word, y: &Word) -> Result<Word> {
    let len = x.len().max(y.len());
    let (x, y) = (x.padded_to(len), y.padded_to(len));

    if let Some(i) = x
        .symbols()
        .iter()
        .zip(y.symbols())
        .position(|(a, b)| !a.is_zero() && !b.is_zero())
    {
        return Err(Error::Intersects(i + 1));
    }

    let (xb, yb) = (x.blocks(), y.blocks());
    for a in &xb {
        for b in &yb {
            if !spans_meet(a, b) {
                continue;
            }
            if a.contains(b) || b.contains(a) {
                return Err(Error::NestedOperands);
            }
            // Crossing spans: report where the later block enters the earlier one.
            return Err(Error::Intersects(a.open_pos.max(b.open_pos)));
        }
    }

    let merged = x
        .symbols()
        .iter()
        .zip(y.symbols())
        .map(|(&a, &b)| if a.is_zero() { b } else { a })
        .collect();
    Ok(Word::from_balanced(merged).strip_leading_zeros())
}

/// `x ⊖ y`: removes from `x` whole top-level blocks that `y` carries.
pub fn psub(x: &Word, y: &Word) -> Result<Word> {
    let len = x.len().max(y.len());
    let (x, y) = (x.padded_to(len), y.padded_to(len));

    if let Some(i) = x
        .symbols()
        .iter()
        .zip(y.symbols())
        .position(|(a, b)| !b.is_zero() && a != b)
    {
        return Err(Error::NotSubword(i + 1));
    }

    let xb = x.blocks();
    for b in y.blocks() {
        let exact = xb
            .iter()
            .any(|a| a.open_pos == b.open_pos && a.close_pos == b.close_pos);
        let range = b.open_pos - 1..b.close_pos;
        if !exact || x.symbols()[range.clone()] != y.symbols()[range] {
            return Err(Error::NotTopLevel(b.open_pos));
        }
    }

    let rest = x
        .symbols()
        .iter()
        .zip(y.symbols())
        .map(|(&a, &b)| if b.is_zero() { a } else { Symbol::Zero })
        .collect();
    Ok(Word::from_balanced(rest).strip_leading_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(padd(&w("()0000000"), &w("(0())0")).unwrap(), w("()0(0())0"));
        assert_eq!(padd(&w("0"), &w("(0)")).unwrap(), w("(0)"));
        assert_eq!(padd(&w("(0)"), &w("0")).unwrap(), w("(0)"));
        assert_eq!(padd(&w("0"), &w("0")).unwrap(), w("0"));
    }

    #[test]
    fn addition_errors() {
        assert_eq!(padd(&w("(00)"), &w("()")), Err(Error::Intersects(4)));
        assert_eq!(
            padd(&w("(000000)"), &w("()00000")),
            Err(Error::NestedOperands)
        );
        assert_eq!(
            padd(&w("()00000"), &w("(000000)")),
            Err(Error::NestedOperands)
        );
        // "(00)00" and "00(00)" have disjoint symbols but crossing spans.
        assert_eq!(padd(&w("(00)00"), &w("(00)")), Err(Error::Intersects(3)));
    }

    #[test]
    fn subtraction_examples() {
        assert_eq!(psub(&w("()0(0())0"), &w("()0000000")).unwrap(), w("(0())0"));
        assert_eq!(psub(&w("()0(0())0"), &w("(0())0")).unwrap(), w("()0000000"));
        assert_eq!(psub(&w("(0)"), &w("(0)")).unwrap(), w("0"));
        assert_eq!(psub(&w("(0)"), &w("0")).unwrap(), w("(0)"));
    }

    #[test]
    fn subtraction_errors() {
        assert_eq!(psub(&w("(0)"), &w("()")), Err(Error::NotSubword(2)));
        assert_eq!(psub(&w("()"), &w("(0)")), Err(Error::NotSubword(1)));
        // inner pair of "(())" is not a top-level block
        assert_eq!(psub(&w("(())"), &w("()0")), Err(Error::NotTopLevel(2)));
        // outer pair alone, without the block content
        assert_eq!(psub(&w("(())"), &w("(00)")), Err(Error::NotTopLevel(1)));
    }
}
