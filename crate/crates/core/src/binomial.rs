//! Binomial coefficients over all integer arguments, under the convention
//! the bound formulas assume.
//!
//! The convention, applied in this order:
//!
//! 1. `binom(a, 0) = 1` for every `a`, including negative `a`;
//! 2. `binom(a, b) = 0` when `b < 0` or `b > a`;
//! 3. otherwise the ordinary binomial coefficient.
//!
//! Rule 1 before rule 2 matters only for `a < 0, b = 0`. That corner is
//! never exercised by the small worked examples but does fire on dense
//! graphs, so every hit is counted and surfaced in sweep summaries.

use std::cell::Cell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

thread_local! {
    /// Hits of the ambiguous `a < 0, b = 0` corner on this thread.
    static EDGE_CASE_HITS: Cell<u64> = const { Cell::new(0) };
}

/// How many times `binom` has been called with `a < 0, b = 0` on the
/// current thread.
///
/// Monotone per-thread counter; read it before and after a sweep to see how
/// often the convention's ambiguous corner carried the result. Thread-local
/// so concurrently running work cannot blur a measurement.
pub fn convention_edge_hits() -> u64 {
    EDGE_CASE_HITS.with(Cell::get)
}

/// Binomial coefficient under the convention above.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b == 0 {
        if a < 0 {
            EDGE_CASE_HITS.with(|hits| hits.set(hits.get() + 1));
        }
        return BigInt::one();
    }
    if b < 0 || b > a {
        return BigInt::zero();
    }
    // Here a >= b >= 1. Multiply up with exact division at each step.
    let k = b.min(a - b);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    result
}

/// Both sides of the finite-difference identity
/// `-binom(a, c) + binom(b, c) = -sum_{n=1}^{a-b} binom(a - n, c - 1)`,
/// valid for `a > b >= c >= 0`.
///
/// Returns `(left, right)` so callers can compare them independently.
pub fn telescoped_difference_sides(a: i64, b: i64, c: i64) -> Result<(BigInt, BigInt)> {
    if !(a > b && b >= c && c >= 0) {
        return Err(Error::InvalidParams(format!(
            "need a > b >= c >= 0, got ({a}, {b}, {c})"
        )));
    }
    let left = -binom(a, c) + binom(b, c);
    let mut right = BigInt::zero();
    for n in 1..=(a - b) {
        right -= binom(a - n, c - 1);
    }
    Ok((left, right))
}
