//! Exact integer sequences behind the weight formulas.
//!
//! * `M_n`, the Motzkin numbers (all Motzkin words of length `n`),
//! * `U_n = M_n - M_{n-1}`, the number of words of length `n` without a
//!   leading zero,
//! * `δ_k = U_{k+1} - M_{k-1}`, the offset in the plain pair weight,
//! * `δ'_k = M_{k+2} - 2 M_{k+1} - U_k`, the offset in the first nest-weight.
//!
//! Values are arbitrary precision and memoized in a [`Sequences`] table. The
//! free functions share one table per thread.

use std::cell::RefCell;

use num_bigint::BigUint;
use num_traits::{CheckedSub, One};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every weight and index.
pub type Count = BigUint;

/// Growable memo table of Motzkin numbers.
#[derive(Debug, Clone)]
pub struct Sequences {
    motzkin: Vec<Count>,
}

impl Default for Sequences {
    fn default() -> Self {
        Self::new()
    }
}

impl Sequences {
    pub fn new() -> Self {
        Sequences {
            motzkin: vec![Count::one(), Count::one()],
        }
    }

    /// `M_n` from the convolution `M_n = M_{n-1} + Σ_{i=0}^{n-2} M_i M_{n-2-i}`.
    pub fn motzkin(&mut self, n: usize) -> &Count {
        while self.motzkin.len() <= n {
            let m = self.motzkin.len();
            let mut next = self.motzkin[m - 1].clone();
            for i in 0..=m - 2 {
                next += &self.motzkin[i] * &self.motzkin[m - 2 - i];
            }
            self.motzkin.push(next);
        }
        &self.motzkin[n]
    }

    /// `U_n`, with `U_1 = 1`. `U_0` is undefined.
    pub fn unique(&mut self, n: usize) -> Result<Count> {
        match n {
            0 => Err(Error::DomainViolation("U_n requires n >= 1".into())),
            1 => Ok(Count::one()),
            _ => {
                let hi = self.motzkin(n).clone();
                Ok(hi - self.motzkin(n - 1))
            }
        }
    }

    /// `δ_k = U_{k+1} - M_{k-1}` for `k >= 1`.
    pub fn delta(&mut self, k: usize) -> Result<Count> {
        if k == 0 {
            return Err(Error::DomainViolation("δ_k requires k >= 1".into()));
        }
        let u = self.unique(k + 1)?;
        let m = self.motzkin(k - 1);
        u.checked_sub(m).ok_or(Error::NegativeCount("delta"))
    }

    /// `δ'_k = M_{k+2} - 2 M_{k+1} - U_k` for `k >= 2`.
    pub fn delta_prime(&mut self, k: usize) -> Result<Count> {
        if k < 2 {
            return Err(Error::DomainViolation("δ'_k requires k >= 2".into()));
        }
        let u = self.unique(k)?;
        let twice = self.motzkin(k + 1) * 2u32;
        let top = self.motzkin(k + 2).clone();
        top.checked_sub(&(twice + u))
            .ok_or(Error::NegativeCount("delta_prime"))
    }
}

thread_local! {
    static TABLE: RefCell<Sequences> = RefCell::new(Sequences::new());
}

fn with_table<T>(f: impl FnOnce(&mut Sequences) -> T) -> T {
    TABLE.with(|t| f(&mut t.borrow_mut()))
}

pub fn motzkin_number(n: usize) -> Count {
    with_table(|t| t.motzkin(n).clone())
}

pub fn unique_count(n: usize) -> Result<Count> {
    with_table(|t| t.unique(n))
}

pub fn delta(k: usize) -> Result<Count> {
    with_table(|t| t.delta(k))
}

pub fn delta_prime(k: usize) -> Result<Count> {
    with_table(|t| t.delta_prime(k))
}
