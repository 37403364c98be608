//! Threshold characterizations of `delta` and the record properties.
//!
//! Each characterization is paired with a direct test on `delta`. The
//! published exception lists are kept verbatim in [`data`] for the scanner;
//! the public predicates use exception sets recomputed from `delta`, so a
//! misprinted list cannot leak into their answers.

pub mod data;
mod records;
mod scan;

use std::sync::OnceLock;

use crate::arith::{check_positive, delta_unchecked, is_prime, prime_cofactor};
use crate::Result;

pub use records::{composite_left_records, left_records, right_records, RecordTable};
pub use scan::{properties, scan_statement, Domain, Mismatch, Property, ScanReport, DEFAULT_SCAN_TO, MAX_SCAN_TO};

/// The exception lists are recomputed over `1..=EXCEPTION_HORIZON`; every
/// exception to either characterization is below 100.
pub const EXCEPTION_HORIZON: u64 = 1000;

/// `4 * delta(n) < n`.
pub fn below_quarter_direct(n: u64) -> Result<bool> {
    check_positive("below_quarter_direct", n)?;
    Ok(4 * delta_unchecked(n) < n)
}

/// `n` is `p`, `2p`, `3p` or `4p` for a prime `p`.
pub fn is_small_prime_multiple(n: u64) -> bool {
    (1..=4).any(|c| prime_cofactor(n, c).is_some())
}

/// `n` is `p`, `2p`, `3p` or `4p` for an odd prime `p`.
pub fn is_small_odd_prime_multiple(n: u64) -> bool {
    (1..=4).any(|c| prime_cofactor(n, c).is_some_and(|p| p % 2 == 1))
}

fn computed_quarter_exceptions() -> &'static [u64] {
    static CELL: OnceLock<Vec<u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        (1..=EXCEPTION_HORIZON)
            .filter(|&n| !is_small_prime_multiple(n) && 4 * delta_unchecked(n) >= n)
            .collect()
    })
}

fn computed_quarter_plus_three_exceptions() -> &'static [u64] {
    static CELL: OnceLock<Vec<u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        (1..=EXCEPTION_HORIZON)
            .filter(|&n| !is_small_odd_prime_multiple(n) && 4 * delta_unchecked(n) >= n + 12)
            .collect()
    })
}

/// Exceptions to the `4 * delta(n) < n` characterization that are not of the
/// form `p, 2p, 3p, 4p`, recomputed from `delta`.
pub fn quarter_exceptions() -> &'static [u64] {
    computed_quarter_exceptions()
}

/// Exceptions to the `4 * delta(n) < n + 12` characterization that are not of
/// the form `p, 2p, 3p, 4p` with `p` odd, recomputed from `delta`.
pub fn quarter_plus_three_exceptions() -> &'static [u64] {
    computed_quarter_plus_three_exceptions()
}

/// `4 * delta(n) < n` by the characterization: `n` is none of `p, 2p, 3p, 4p`
/// and not one of the finitely many exceptions.
pub fn below_quarter_characterized(n: u64) -> Result<bool> {
    check_positive("below_quarter_characterized", n)?;
    Ok(!is_small_prime_multiple(n) && quarter_exceptions().binary_search(&n).is_err())
}

/// `4 * delta(n) < n + 12` by the characterization: `n` is none of
/// `p, 2p, 3p, 4p` for odd `p` and not one of the exceptions.
pub fn quarter_plus_three_characterized(n: u64) -> Result<bool> {
    check_positive("quarter_plus_three_characterized", n)?;
    Ok(!is_small_odd_prime_multiple(n) && quarter_plus_three_exceptions().binary_search(&n).is_err())
}

/// `4 * delta(n) < n + 12`.
pub fn quarter_plus_three_direct(n: u64) -> Result<bool> {
    check_positive("quarter_plus_three_direct", n)?;
    Ok(4 * delta_unchecked(n) < n + 12)
}

/// Position of `2 * delta(n)` relative to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderClass {
    /// `2 * delta(n) = n + c` with `-4 <= c <= 4`.
    Exact(i8),
    /// `|2 * delta(n) - n| > 4`.
    Outside,
}

pub fn half_ladder_class(n: u64) -> Result<LadderClass> {
    check_positive("half_ladder_class", n)?;
    let c = 2 * delta_unchecked(n) as i128 - n as i128;
    Ok(if (-4..=4).contains(&c) {
        LadderClass::Exact(c as i8)
    } else {
        LadderClass::Outside
    })
}

/// How `2 * delta(n)` is compared with `n + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    AtMost,
    Equal,
    NotEqual,
}

/// One rung of the ladder: `2 * delta(n) <relation> n + offset` holds iff
/// `characterization(n)`.
#[derive(Debug, Clone, Copy)]
pub struct LadderStatement {
    pub label: &'static str,
    pub offset: i64,
    pub relation: Relation,
    characterization: fn(u64) -> bool,
}

impl LadderStatement {
    pub fn characterized(&self, n: u64) -> bool {
        (self.characterization)(n)
    }

    /// Evaluates the relation given `delta(n)`.
    pub fn holds(&self, n: u64, delta: u64) -> bool {
        let lhs = 2 * i128::from(delta);
        let rhs = i128::from(n) + i128::from(self.offset);
        match self.relation {
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
            Relation::NotEqual => lhs != rhs,
        }
    }

    pub fn direct(&self, n: u64) -> bool {
        self.holds(n, delta_unchecked(n))
    }
}

/// `n = p` or `n = 2p` for a prime `p >= min_p`.
fn is_p_or_2p(n: u64, min_p: u64) -> bool {
    prime_cofactor(n, 1).is_some_and(|p| p >= min_p) || prime_cofactor(n, 2).is_some_and(|p| p >= min_p)
}

fn is_odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime(n)
}

const fn rung(label: &'static str, offset: i64, relation: Relation, characterization: fn(u64) -> bool) -> LadderStatement {
    LadderStatement {
        label,
        offset,
        relation,
        characterization,
    }
}

/// The eighteen rungs, offsets `+4` down to `-4`. Rung `xi` is read with `<=`.
pub const LADDER: [LadderStatement; 18] = [
    rung("i", 4, Relation::AtMost, |n| !is_odd_prime(n)),
    rung("ii", 4, Relation::Equal, |n| {
        matches!(n, 2 | 4 | 6 | 8 | 10 | 14) || prime_cofactor(n, 2).is_some_and(|p| p >= 11)
    }),
    rung("iii", 3, Relation::AtMost, |n| n != 8 && !is_p_or_2p(n, 2)),
    rung("iv", 3, Relation::Equal, |n| matches!(n, 1 | 9)),
    rung("v", 2, Relation::AtMost, |n| !matches!(n, 1 | 8 | 9) && !is_p_or_2p(n, 2)),
    rung("vi", 2, Relation::Equal, |n| n == 12),
    rung("vii", 1, Relation::AtMost, |n| !matches!(n, 1 | 8 | 9 | 12) && !is_p_or_2p(n, 2)),
    rung("viii", 1, Relation::Equal, |n| n == 15),
    rung("ix", 0, Relation::AtMost, |n| !matches!(n, 1 | 8 | 9 | 12 | 15) && !is_p_or_2p(n, 2)),
    rung("x", 0, Relation::Equal, |n| matches!(n, 16 | 18)),
    rung("xi", -1, Relation::AtMost, |n| n >= 20 && !is_p_or_2p(n, 11)),
    rung("xii", -1, Relation::Equal, |n| n == 21),
    rung("xiii", -2, Relation::AtMost, |n| n >= 20 && n != 21 && !is_p_or_2p(n, 11)),
    rung("xiv", -2, Relation::Equal, |n| n == 20),
    rung("xv", -3, Relation::AtMost, |n| n >= 24 && !is_p_or_2p(n, 13)),
    rung("xvi", -3, Relation::Equal, |n| n == 27),
    rung("xvii", -4, Relation::AtMost, |n| n >= 24 && n != 27 && !is_p_or_2p(n, 13)),
    rung("xviii", -4, Relation::Equal, |n| n == 24),
];

/// Rung `xi` as printed, with `!=` in place of `<=`.
pub const LADDER_XI_AS_PRINTED: LadderStatement =
    rung("xi", -1, Relation::NotEqual, |n| n >= 20 && !is_p_or_2p(n, 11));
