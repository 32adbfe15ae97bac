//! Cross-checks of the formulas against the brute-force oracle.

use num_traits::{One, Zero};

use crate::arith::{padd, psub};
use crate::error::{Error, Result};
use crate::oracle::{self, Completions, MAX_ENUMERATION_LENGTH};
use crate::sequences::Count;
use crate::weights::{compose, sites_of, NestWeights};
use crate::word::{compare_lex, Word};

/// Longest result length for the exhaustive `⊕`/`⊖` check.
pub const MAX_ARITH_LENGTH: usize = 10;
/// Largest size for the nest-weight identities.
pub const MAX_IDENTITY_SIZE: usize = 20;
/// Largest size for the three-in-one residuals.
pub const MAX_RESIDUAL_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn report(name: &'static str, failure: Option<String>, checked: usize) -> CheckReport {
    match failure {
        None => CheckReport {
            name,
            passed: true,
            detail: format!("{checked} cases"),
        },
        Some(detail) => CheckReport {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs every check over UMWs of length at most `max_len`.
pub fn run(max_len: usize) -> Result<Vec<CheckReport>> {
    if max_len == 0 {
        return Err(Error::DomainViolation("max length must be >= 1".into()));
    }
    if max_len > MAX_ENUMERATION_LENGTH {
        return Err(Error::RangeTooLarge(max_len, MAX_ENUMERATION_LENGTH));
    }
    let mut table = NestWeights::new();
    let mut counting = Completions::new();
    let words = oracle::enumerate_upto(max_len)?;

    Ok(vec![
        range_sizes(&mut table, max_len)?,
        completions_match_motzkin(&mut table, &mut counting),
        enumeration_order(&words),
        rank_equivalence(&mut table, &mut counting, &words)?,
        bijection(&mut table, &words, max_len)?,
        composition(&mut table, &words)?,
        extrema(&mut table, max_len)?,
        arithmetic(&mut table, &words, max_len.min(MAX_ARITH_LENGTH))?,
        identities(&mut table)?,
        residuals(&mut table)?,
    ])
}

fn range_sizes(table: &mut NestWeights, max_len: usize) -> Result<CheckReport> {
    let mut failure = None;
    for n in 1..=max_len {
        let listed = oracle::enumerate_range(n)?.len();
        let expected = table.sequences().unique(n)?;
        if Count::from(listed) != expected {
            failure = Some(format!("n = {n}: enumerated {listed}, U_n = {expected}"));
            break;
        }
    }
    Ok(report("range sizes equal U_n", failure, max_len))
}

fn completions_match_motzkin(table: &mut NestWeights, counting: &mut Completions) -> CheckReport {
    let failure = (0..=MAX_IDENTITY_SIZE)
        .find(|&n| counting.get(n, 0) != *table.sequences().motzkin(n))
        .map(|n| format!("completions({n}, 0) != M_{n}"));
    report(
        "completions(n, 0) equal M_n",
        failure,
        MAX_IDENTITY_SIZE + 1,
    )
}

fn enumeration_order(words: &[Word]) -> CheckReport {
    let failure = words
        .windows(2)
        .find(|p| compare_lex(&p[0], &p[1]).is_ge())
        .map(|p| format!("{} does not precede {}", p[0], p[1]));
    report("enumeration strictly increasing", failure, words.len())
}

fn rank_equivalence(
    table: &mut NestWeights,
    counting: &mut Completions,
    words: &[Word],
) -> Result<CheckReport> {
    let mut failure = None;
    for (i, w) in words.iter().enumerate() {
        let position = Count::from(i);
        let by_formula = table.rank(w)?;
        let by_counting = counting.rank(w)?;
        if by_formula != position || by_counting != position {
            failure = Some(format!(
                "{w}: position {position}, rank {by_formula}, counting rank {by_counting}"
            ));
            break;
        }
    }
    Ok(report(
        "rank = counting rank = position",
        failure,
        words.len(),
    ))
}

fn bijection(table: &mut NestWeights, words: &[Word], max_len: usize) -> Result<CheckReport> {
    let mut failure = None;
    for w in words {
        let wt = table.rank(w)?;
        let back = table.unrank(&wt);
        if &back != w {
            failure = Some(format!("unrank(rank({w})) = {back}"));
            break;
        }
    }
    let bound = table.sequences().motzkin(max_len).clone();
    let mut i = Count::zero();
    while failure.is_none() && i < bound {
        let w = table.unrank(&i);
        if table.rank(&w)? != i {
            failure = Some(format!("rank(unrank({i})) != {i}"));
        }
        i += Count::one();
    }
    Ok(report("unrank inverts rank", failure, 2 * words.len()))
}

fn composition(table: &mut NestWeights, words: &[Word]) -> Result<CheckReport> {
    let mut failure = None;
    for w in words {
        let d = table.decompose(w)?;
        let rebuilt = compose(d.word_length, &d.sites())?;
        if &rebuilt != w || d.sites() != sites_of(w) {
            failure = Some(format!("compose(decompose({w})) = {rebuilt}"));
            break;
        }
    }
    Ok(report("compose inverts decompose", failure, words.len()))
}

fn extrema(table: &mut NestWeights, max_len: usize) -> Result<CheckReport> {
    let mut failure = None;
    for n in 2..=max_len {
        let e = table.range_extrema(n)?;
        let range = oracle::enumerate_range(n)?;
        let ok = Some(&e.min_word) == range.first()
            && Some(&e.max_word) == range.last()
            && table.rank(&e.min_word)? == e.min_wt
            && table.rank(&e.max_word)? == e.max_wt;
        if !ok {
            failure = Some(format!("range {n}"));
            break;
        }
    }
    Ok(report(
        "range minimum and maximum",
        failure,
        max_len.saturating_sub(1),
    ))
}

fn arithmetic(table: &mut NestWeights, words: &[Word], max_len: usize) -> Result<CheckReport> {
    let words: Vec<&Word> = words.iter().filter(|w| w.len() <= max_len).collect();
    let mut defined = 0usize;
    for x in &words {
        for y in &words {
            let Ok(z) = padd(x, y) else { continue };
            defined += 1;
            let (wx, wy, wz) = (table.rank(x)?, table.rank(y)?, table.rank(&z)?);
            if wz != &wx + &wy {
                return Ok(report(
                    "⊕/⊖ laws",
                    Some(format!("wt({x} ⊕ {y}) != {wx} + {wy}")),
                    0,
                ));
            }
            if padd(y, x).as_ref() != Ok(&z)
                || psub(&z, x).as_ref() != Ok(y)
                || psub(&z, y).as_ref() != Ok(x)
            {
                return Ok(report(
                    "⊕/⊖ laws",
                    Some(format!("inverse fails for {x}, {y}")),
                    0,
                ));
            }
        }
        if psub(x, x) != Ok(Word::zero()) || psub(x, &Word::zero()).as_ref() != Ok(*x) {
            return Ok(report(
                "⊕/⊖ laws",
                Some(format!("identity fails for {x}")),
                0,
            ));
        }
    }
    Ok(report("⊕/⊖ laws", None, defined))
}

fn identities(table: &mut NestWeights) -> Result<CheckReport> {
    let mut failure = None;
    for n in 3..=MAX_IDENTITY_SIZE {
        if table.nest_weight(n, n - 1, n - 2)? != Count::from(n - 1) {
            failure = Some(format!("wt^(n-2) p_{{n,n-1}} != n - 1 at n = {n}"));
            break;
        }
        if table.nest_weight(n, 2, 1)? != table.sequences().unique(n)? {
            failure = Some(format!("wt' p_{{n,2}} != U_n at n = {n}"));
            break;
        }
        if table.pair_weight(n, 1)? != *table.sequences().motzkin(n - 1) {
            failure = Some(format!("wt p_{{n,1}} != M_(n-1) at n = {n}"));
            break;
        }
    }
    Ok(report(
        "nest-weight identities",
        failure,
        MAX_IDENTITY_SIZE - 2,
    ))
}

/// The first-order equation
/// `wt' p_{n,k} + wt p_{n,k} + M_k = wt p_{n+1,k+1}` and its higher orders
/// `wt^(s+1) p_{n,k} + wt^(s) p_{n,k} + wt^(s-1) p_{n,k} = wt^(s) p_{n+1,k+1}`.
pub fn three_in_one_holds(table: &mut NestWeights, n: usize, k: usize, s: usize) -> Result<bool> {
    let lower = if s == 0 {
        table.sequences().motzkin(k).clone()
    } else {
        table.nest_weight(n, k, s - 1)?
    };
    let lhs = table.nest_weight(n, k, s + 1)? + table.nest_weight(n, k, s)? + lower;
    Ok(lhs == table.nest_weight(n + 1, k + 1, s)?)
}

fn residuals(table: &mut NestWeights) -> Result<CheckReport> {
    let mut checked = 0;
    for n in 3..=MAX_RESIDUAL_SIZE {
        for k in 2..n {
            for s in 0..k - 1 {
                checked += 1;
                if !three_in_one_holds(table, n, k, s)? {
                    let failure = format!("n = {n}, k = {k}, s = {s}");
                    return Ok(report(
                        "three-in-one residuals vanish",
                        Some(failure),
                        checked,
                    ));
                }
            }
        }
    }
    Ok(report("three-in-one residuals vanish", None, checked))
}
