//! Square intervals and the minimum design size.
//!
//! For `k >= 1` let `I_k = [k^2 - k + 1, k^2]` and `J_k = [k^2 + 1, k^2 + k]`.
//! These intervals partition the positive integers, `I_1 < J_1 < I_2 < ...`,
//! and the minimum staircase weight is `phi(n) = 2k` on `I_k` and `2k + 1` on
//! `J_k`.

use std::fmt;

use crate::arith::{self, check_positive, FactorPair};
use crate::{Error, Result};

/// Which of the two intervals attached to `k` holds `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `I_k = [k^2 - k + 1, k^2]`
    Lower,
    /// `J_k = [k^2 + 1, k^2 + k]`
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "I",
            Side::Upper => "J",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareInterval {
    pub k: u64,
    pub side: Side,
}

impl SquareInterval {
    /// Inclusive bounds of the interval.
    pub fn bounds(self) -> (u64, u64) {
        let k = self.k;
        match self.side {
            Side::Lower => (k * k - k + 1, k * k),
            Side::Upper => (k * k + 1, k * k + k),
        }
    }

    pub fn contains(self, n: u64) -> bool {
        let (lo, hi) = self.bounds();
        (lo..=hi).contains(&n)
    }

    /// The least value of `delta` over the interval: `2k` or `2k + 1`.
    pub fn delta_floor(self) -> u64 {
        match self.side {
            Side::Lower => 2 * self.k,
            Side::Upper => 2 * self.k + 1,
        }
    }
}

impl fmt::Display for SquareInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.side, self.k)
    }
}

/// The unique interval `I_k` or `J_k` containing `n`.
pub fn classify(n: u64) -> Result<SquareInterval> {
    check_positive("classify", n)?;
    Ok(classify_unchecked(n))
}

pub(crate) fn classify_unchecked(n: u64) -> SquareInterval {
    let root = n.isqrt();
    if root * root == n {
        SquareInterval {
            k: root,
            side: Side::Lower,
        }
    } else if n <= root * root + root {
        SquareInterval {
            k: root,
            side: Side::Upper,
        }
    } else {
        SquareInterval {
            k: root + 1,
            side: Side::Lower,
        }
    }
}

/// The `k` minimizing `|n - k^2|`.
///
/// Consecutive squares differ by an odd number, so there is never a tie.
pub fn nearest_square_k(n: u64) -> Result<u64> {
    check_positive("nearest_square_k", n)?;
    let below = n.isqrt();
    let above = below + 1;
    Ok(if n - below * below <= above * above - n {
        below
    } else {
        above
    })
}

/// Minimum weight `r1 + s1 + ... + st` over all staircase partitions of `n`.
pub fn phi(n: u64) -> Result<u64> {
    check_positive("phi", n)?;
    Ok(classify_unchecked(n).delta_floor())
}

/// The factor pair `(eps(n), n / eps(n))`, the unique pair of `B(n)` with
/// `r + s = delta(n)`.
pub fn min_sum_factor_pair(n: u64) -> Result<FactorPair> {
    let r = arith::eps(n)?;
    Ok(FactorPair { r, s: n / r })
}

/// Largest `k` accepted by [`delta_minimizers`].
pub const MAX_K: u64 = 1_000_000;

/// Every `n` in `I_k` (resp. `J_k`) whose `delta` equals the interval floor
/// `2k` (resp. `2k + 1`), ascending, each with its witness factor pair.
///
/// On `I_k` these are `n = k^2 - l^2` with `l^2 <= k - 1`, witness
/// `(k - l, k + l)`. On `J_k` they are `n = k^2 + k - l^2 - l` with
/// `l^2 + l <= k - 1`, witness `(k - l, k + l + 1)`.
pub fn delta_minimizers(k: u64, side: Side) -> Result<Vec<(u64, FactorPair)>> {
    if k == 0 {
        return Err(Error::Domain {
            func: "delta_minimizers",
            n: k,
            reason: "requires k >= 1",
        });
    }
    if k > MAX_K {
        return Err(Error::TooLarge {
            func: "delta_minimizers",
            n: k,
            ceiling: MAX_K,
        });
    }
    let mut out: Vec<_> = (0..k)
        .take_while(|l| match side {
            Side::Lower => l * l < k,
            Side::Upper => l * l + l < k,
        })
        .map(|l| match side {
            Side::Lower => (
                k * k - l * l,
                FactorPair {
                    r: k - l,
                    s: k + l,
                },
            ),
            Side::Upper => (
                k * k + k - l * l - l,
                FactorPair {
                    r: k - l,
                    s: k + l + 1,
                },
            ),
        })
        .collect();
    out.reverse();
    Ok(out)
}
