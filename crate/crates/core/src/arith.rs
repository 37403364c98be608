//! Elementary number theory over the non-negative integers.
//!
//! `A(n)` is the set of additive pairs `r <= s, r + s = n`, `B(n)` the set of
//! factor pairs `r <= s, r * s = n`. The extremal functions are
//!
//! * `alpha(n) = max rs` over `A(n)`,
//! * `beta(n) = min rs` over `A(n)` with `r >= 1`,
//! * `gamma(n) = max (r + s)` over `B(n)`,
//! * `delta(n) = min (r + s)` over `B(n)`, attained at `(eps(n), n / eps(n))`.
//!
//! All arithmetic is exact; square-root comparisons are done by squaring.

use crate::{Error, Result};

/// Largest argument accepted by the checked functions.
pub const MAX_N: u64 = 1_000_000_000_000;

/// An element `(r, s)` of `A(n)`: `r <= s` and `r + s = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SumPair {
    pub r: u64,
    pub s: u64,
}

/// An element `(r, s)` of `B(n)`: `1 <= r <= s` and `r * s = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorPair {
    pub r: u64,
    pub s: u64,
}

impl FactorPair {
    pub fn sum(self) -> u64 {
        self.r + self.s
    }

    pub fn product(self) -> u64 {
        self.r * self.s
    }
}

pub(crate) fn check_positive(func: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            func,
            n,
            reason: "requires n >= 1",
        });
    }
    check_ceiling(func, n)
}

pub(crate) fn check_ceiling(func: &'static str, n: u64) -> Result<()> {
    if n > MAX_N {
        return Err(Error::TooLarge {
            func,
            n,
            ceiling: MAX_N,
        });
    }
    Ok(())
}

fn check_at_least_two(func: &'static str, n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain {
            func,
            n,
            reason: "requires n >= 2",
        });
    }
    check_ceiling(func, n)
}

/// The pairs of `A(n)` in ascending order of `r`; there are `n / 2 + 1` of them.
pub fn additive_pairs(n: u64) -> impl DoubleEndedIterator<Item = SumPair> {
    (0..=n / 2).map(move |r| SumPair { r, s: n - r })
}

/// The pairs of `B(n)` in ascending order of `r`.
///
/// `B(0)` is infinite, so `n = 0` is a domain error.
pub fn multiplicative_pairs(n: u64) -> Result<Vec<FactorPair>> {
    if n == 0 {
        return Err(Error::Domain {
            func: "multiplicative_pairs",
            n,
            reason: "B(0) = {(0, s)} is infinite",
        });
    }
    check_ceiling("multiplicative_pairs", n)?;
    Ok((1..=n.isqrt())
        .filter(|r| n.is_multiple_of(*r))
        .map(|r| FactorPair { r, s: n / r })
        .collect())
}

/// `n^2 / 4` for even `n`, `(n^2 - 1) / 4` for odd `n`.
pub fn alpha(n: u64) -> Result<u128> {
    check_at_least_two("alpha", n)?;
    let n = u128::from(n);
    Ok(n * n / 4)
}

/// `n - 1`, the least nonzero product over `A(n)`.
///
/// The pair `(0, n)` is excluded; with it the minimum would be `0`.
pub fn beta(n: u64) -> Result<u64> {
    check_at_least_two("beta", n)?;
    Ok(n - 1)
}

/// `n + 1`, attained by the trivial factorization `1 * n`.
pub fn gamma(n: u64) -> Result<u64> {
    check_positive("gamma", n)?;
    Ok(n + 1)
}

/// The greatest divisor `d` of `n` with `d^2 <= n`.
pub fn eps(n: u64) -> Result<u64> {
    check_positive("eps", n)?;
    Ok(eps_unchecked(n))
}

/// `eps(n) + n / eps(n)`, the least value of `r + s` over `B(n)`.
pub fn delta(n: u64) -> Result<u64> {
    check_positive("delta", n)?;
    Ok(delta_unchecked(n))
}

pub(crate) fn eps_unchecked(n: u64) -> u64 {
    debug_assert!(n >= 1);
    (1..=n.isqrt()).rev().find(|d| n.is_multiple_of(*d)).unwrap_or(1)
}

pub(crate) fn delta_unchecked(n: u64) -> u64 {
    let e = eps_unchecked(n);
    e + n / e
}

/// Exact primality test.
///
/// Trial division below one million, deterministic Miller-Rabin above.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 1_000_000 {
        let mut d = 41;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 2;
        }
        return true;
    }
    miller_rabin(n)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// These twelve bases are deterministic for every u64.
fn miller_rabin(n: u64) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// If `n = p` or `n = c * p` for a prime `p`, the prime `p`; tested for the
/// given multiplier `c`.
pub fn prime_cofactor(n: u64, c: u64) -> Option<u64> {
    (c >= 1 && n.is_multiple_of(c) && is_prime(n / c)).then(|| n / c)
}

/// `eps` and `delta` precomputed for every `n` in `1..=limit` by a divisor
/// sieve. Used by the range scans.
#[derive(Debug, Clone)]
pub struct DeltaTable {
    eps: Vec<u32>,
}

impl DeltaTable {
    /// Builds the table. `limit` is capped at `u32::MAX`.
    pub fn new(limit: u64) -> Self {
        let limit = limit.min(u64::from(u32::MAX)) as usize;
        let mut eps = vec![1u32; limit + 1];
        eps[0] = 0;
        let mut r = 2usize;
        while r * r <= limit {
            // Ascending r, so the last write at n is the largest r | n, r^2 <= n.
            let mut n = r * r;
            while n <= limit {
                eps[n] = r as u32;
                n += r;
            }
            r += 1;
        }
        Self { eps }
    }

    pub fn limit(&self) -> u64 {
        (self.eps.len() - 1) as u64
    }

    /// Panics if `n` is zero or beyond the table.
    pub fn eps(&self, n: u64) -> u64 {
        assert!(n >= 1 && n <= self.limit(), "n = {n} outside table");
        u64::from(self.eps[n as usize])
    }

    pub fn delta(&self, n: u64) -> u64 {
        let e = self.eps(n);
        e + n / e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_pair_examples() {
        let two: Vec<_> = additive_pairs(2).map(|p| (p.r, p.s)).collect();
        assert_eq!(two, [(0, 2), (1, 1)]);
        let zero: Vec<_> = additive_pairs(0).map(|p| (p.r, p.s)).collect();
        assert_eq!(zero, [(0, 0)]);
        let five: Vec<_> = additive_pairs(5).map(|p| (p.r, p.s)).collect();
        assert_eq!(five, [(0, 5), (1, 4), (2, 3)]);
        assert_eq!(additive_pairs(1).count(), 1);
    }

    #[test]
    fn multiplicative_pair_examples() {
        let pairs = |n| {
            multiplicative_pairs(n)
                .unwrap()
                .into_iter()
                .map(|p| (p.r, p.s))
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs(1), [(1, 1)]);
        assert_eq!(pairs(2), [(1, 2)]);
        assert_eq!(pairs(12), [(1, 12), (2, 6), (3, 4)]);
        assert!(matches!(
            multiplicative_pairs(0),
            Err(Error::Domain { n: 0, .. })
        ));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(alpha(2), Ok(1));
        assert_eq!(alpha(3), Ok(2));
        assert_eq!(alpha(10), Ok(25));
        assert_eq!(beta(2), Ok(1));
        assert_eq!(beta(3), Ok(2));
        assert_eq!(beta(100), Ok(99));
        assert_eq!(gamma(1), Ok(2));
        assert_eq!(gamma(7), Ok(8));
        assert_eq!(gamma(12), Ok(13));
    }

    #[test]
    fn eps_delta_examples() {
        assert_eq!(eps(12), Ok(3));
        assert_eq!(eps(64), Ok(8));
        assert_eq!(eps(97), Ok(1));
        assert_eq!(delta(12), Ok(7));
        assert_eq!(delta(111), Ok(40));
        assert_eq!(delta(49), Ok(14));
        assert_eq!(eps(1), Ok(1));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(alpha(1), Err(Error::Domain { func: "alpha", .. })));
        assert!(matches!(beta(0), Err(Error::Domain { .. })));
        assert!(matches!(gamma(0), Err(Error::Domain { .. })));
        assert!(matches!(eps(0), Err(Error::Domain { .. })));
        assert!(matches!(delta(0), Err(Error::Domain { .. })));
        assert!(matches!(
            delta(MAX_N + 1),
            Err(Error::TooLarge { ceiling: MAX_N, .. })
        ));
        assert!(delta(MAX_N).is_ok());
        assert_eq!(alpha(MAX_N), Ok(u128::from(MAX_N) * u128::from(MAX_N) / 4));
    }

    #[test]
    fn large_arguments() {
        // 10^12 = (10^6)^2
        assert_eq!(eps(MAX_N), Ok(1_000_000));
        assert_eq!(delta(MAX_N), Ok(2_000_000));
        // 999_999_999_989 is prime
        assert!(is_prime(999_999_999_989));
        assert_eq!(delta(999_999_999_989), Ok(999_999_999_990));
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 20_000usize;
        let mut composite = vec![false; limit + 1];
        for i in 2..=limit {
            if !composite[i] {
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        for (n, &c) in composite.iter().enumerate() {
            assert_eq!(is_prime(n as u64), n >= 2 && !c, "n = {n}");
        }
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in (1_000_000u64..1_003_000).chain(4_294_967_000..4_294_967_400) {
            assert_eq!(miller_rabin_or_small(n), trial(n), "n = {n}");
        }
        // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(3_215_031_751));
    }

    fn miller_rabin_or_small(n: u64) -> bool {
        if n.is_multiple_of(2) {
            return n == 2;
        }
        miller_rabin(n)
    }

    #[test]
    fn delta_table_matches_scan() {
        let table = DeltaTable::new(5000);
        for n in 1..=5000 {
            assert_eq!(table.eps(n), eps_unchecked(n), "n = {n}");
            assert_eq!(table.delta(n), delta_unchecked(n));
        }
    }

    #[test]
    fn prime_cofactor_forms() {
        assert_eq!(prime_cofactor(22, 2), Some(11));
        assert_eq!(prime_cofactor(22, 3), None);
        assert_eq!(prime_cofactor(4, 2), Some(2));
        assert_eq!(prime_cofactor(1, 1), None);
    }
}
