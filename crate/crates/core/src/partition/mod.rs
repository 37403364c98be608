//! Staircase partitions `n = r1*s1 + ... + rt*st` with `r1 > ... > rt`.
//!
//! The weight of a partition is `r1 + s1 + ... + st`, the number of blocks of
//! the design it induces. [`construct_minimal`] always reaches the minimum
//! weight `phi(n)`; the other constructors produce the multi-step optima and
//! the constrained optima for squares and pronic numbers.

mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::arith::check_positive;
use crate::classify::{classify, Side};
use crate::{Error, Result};

pub use oracle::{brute_force_min_weight, ORACLE_MAX_N};

/// One step `r x s` of a staircase: `s` columns of height `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub r: u64,
    pub s: u64,
}

impl Step {
    pub const fn new(r: u64, s: u64) -> Self {
        Self { r, s }
    }
}

/// A sequence of steps. Construction does not validate; see
/// [`StaircasePartition::check`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircasePartition {
    steps: Vec<Step>,
}

/// Why a partition fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invalid {
    Empty,
    /// Some `r` or `s` is zero.
    NonPositive,
    NotDecreasing,
    WrongSum,
}

impl Invalid {
    pub fn code(self) -> &'static str {
        match self {
            Invalid::Empty => "EMPTY",
            Invalid::NonPositive => "NON_POSITIVE",
            Invalid::NotDecreasing => "NOT_DECREASING",
            Invalid::WrongSum => "WRONG_SUM",
        }
    }
}

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl StaircasePartition {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        Self::new(pairs.iter().map(|&(r, s)| Step::new(r, s)).collect())
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps `t`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height of the tallest column, `r1`; zero when empty.
    pub fn rows(&self) -> u64 {
        self.steps.first().map_or(0, |s| s.r)
    }

    /// Number of columns `s1 + ... + st`.
    pub fn columns(&self) -> u64 {
        self.steps.iter().map(|s| s.s).sum()
    }

    /// `r1*s1 + ... + rt*st`, or `None` on overflow.
    pub fn sum(&self) -> Option<u64> {
        self.steps
            .iter()
            .try_fold(0u64, |acc, s| acc.checked_add(s.r.checked_mul(s.s)?))
    }

    /// `r1 + s1 + ... + st`.
    pub fn weight(&self) -> u64 {
        self.rows() + self.columns()
    }

    pub fn rs(&self) -> impl Iterator<Item = u64> + '_ {
        self.steps.iter().map(|s| s.r)
    }

    pub fn ss(&self) -> impl Iterator<Item = u64> + '_ {
        self.steps.iter().map(|s| s.s)
    }

    /// Checks the staircase invariants and that the partition sums to `n`.
    pub fn check(&self, n: u64) -> std::result::Result<(), Invalid> {
        self.check_shape()?;
        if self.sum() != Some(n) {
            return Err(Invalid::WrongSum);
        }
        Ok(())
    }

    /// Checks the invariants that do not depend on `n`.
    pub fn check_shape(&self) -> std::result::Result<(), Invalid> {
        if self.steps.is_empty() {
            return Err(Invalid::Empty);
        }
        if self.steps.iter().any(|s| s.r == 0 || s.s == 0) {
            return Err(Invalid::NonPositive);
        }
        if self.steps.windows(2).any(|w| w[0].r <= w[1].r) {
            return Err(Invalid::NotDecreasing);
        }
        if self.sum().is_none() {
            return Err(Invalid::WrongSum);
        }
        Ok(())
    }
}

/// Formats the steps as `r1xs1,r2xs2,...`.
impl fmt::Display for StaircasePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}x{}", step.r, step.s)?;
        }
        Ok(())
    }
}

fn parse_u64(text: &str, what: &str) -> Result<u64> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{what}: expected an integer, got `{text}`")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("{what}: `{text}` out of range")))
}

/// Parses `r1xs1,r2xs2,...`. Whitespace is not allowed.
impl FromStr for StaircasePartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::Parse("empty step list".into()));
        }
        text.split(',')
            .map(|item| {
                let (r, s) = item
                    .split_once('x')
                    .ok_or_else(|| Error::Parse(format!("step `{item}` is not of the form RxS")))?;
                Ok(Step::new(parse_u64(r, "r")?, parse_u64(s, "s")?))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// True iff `partition` is a valid staircase partition of `n`.
pub fn validate(partition: &StaircasePartition, n: u64) -> bool {
    partition.check(n).is_ok()
}

/// The line `n=<n> w=<w> steps=<r1>x<s1>,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRecord {
    pub n: u64,
    pub w: u64,
    pub partition: StaircasePartition,
}

impl PartitionRecord {
    /// Record for `partition` with `n` and `w` computed from it.
    pub fn of(partition: StaircasePartition) -> Self {
        Self {
            n: partition.sum().unwrap_or(0),
            w: partition.weight(),
            partition,
        }
    }

    /// Validates the partition against `n` and the stated weight.
    pub fn check(&self) -> std::result::Result<(), RecordError> {
        self.partition.check(self.n).map_err(RecordError::Invalid)?;
        if self.partition.weight() != self.w {
            return Err(RecordError::WrongWeight {
                stated: self.w,
                actual: self.partition.weight(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordError {
    Invalid(Invalid),
    WrongWeight { stated: u64, actual: u64 },
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordError::Invalid(reason) => write!(f, "{reason}"),
            RecordError::WrongWeight { stated, actual } => {
                write!(f, "WRONG_WEIGHT (stated {stated}, actual {actual})")
            }
        }
    }
}

impl fmt::Display for PartitionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} w={} steps={}", self.n, self.w, self.partition)
    }
}

impl FromStr for PartitionRecord {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(' ').collect();
        let [n, w, steps] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "expected `n=<n> w=<w> steps=<steps>`, got `{line}`"
            )));
        };
        let value = |item: &str, key: &str| -> Result<String> {
            item.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse(format!("expected `{key}=...`, got `{item}`")))
        };
        Ok(Self {
            n: parse_u64(&value(n, "n")?, "n")?,
            w: parse_u64(&value(w, "w")?, "w")?,
            partition: value(steps, "steps")?.parse()?,
        })
    }
}

/// A partition of weight `phi(n)`.
///
/// * `n = k^2`: `[(k, k)]`
/// * `n` in `I_k`, `n < k^2`: `[(k, k - 1), (l, 1)]` with `l = n - k^2 + k`
/// * `n = k^2 + k`: `[(k + 1, k)]`
/// * `n` in `J_k`, `n < k^2 + k`: `[(k, k), (l, 1)]` with `l = n - k^2`
pub fn construct_minimal(n: u64) -> Result<StaircasePartition> {
    let interval = classify(n)?;
    let k = interval.k;
    let steps = match interval.side {
        Side::Lower if n == k * k => vec![Step::new(k, k)],
        Side::Lower => vec![Step::new(k, k - 1), Step::new(n + k - k * k, 1)],
        Side::Upper if n == k * k + k => vec![Step::new(k + 1, k)],
        Side::Upper => vec![Step::new(k, k), Step::new(n - k * k, 1)],
    };
    Ok(StaircasePartition::new(steps))
}

/// The multi-step optimum built from `j` consecutive heights below `k`.
///
/// For `n` in `I_k` (requires `j >= 2`, `2k >= j^2 + j + 2` and
/// `n <= k^2 - (j^2 + j)/2`):
/// `[(k, k - j), (k - 1, 1), ..., (k - j + 1, 1), (l, 1)]`,
/// `l = n - k^2 + k + j(j - 1)/2`.
///
/// For `n` in `J_k` (requires `j >= 1`, `2k >= j^2 + 3j + 4` and
/// `n <= k^2 + k - (j^2 + 3j + 2)/2`):
/// `[(k, k - j), (k - 1, 1), ..., (k - j, 1), (l, 1)]`,
/// `l = n - k^2 + j(j + 1)/2`.
pub fn construct_multistep(n: u64, j: u64) -> Result<StaircasePartition> {
    let interval = classify(n)?;
    let k = interval.k;
    let fail = |what: String| Err(Error::Precondition(format!("multistep n={n} j={j}: {what}")));
    // Keeps j^2 below overflow; larger j can never satisfy the k bound.
    if j > 2_000_000 {
        return fail(format!("j exceeds the bound for k = {k}"));
    }
    match interval.side {
        Side::Lower => {
            if j < 2 {
                return fail(format!("n lies in I_{k}, which requires j >= 2"));
            }
            if 2 * k < j * j + j + 2 {
                return fail(format!(
                    "n lies in I_{k}, which requires k >= (j^2 + j + 2)/2 = {}",
                    (j * j + j + 2).div_ceil(2)
                ));
            }
            let top = k * k - (j * j + j) / 2;
            if n > top {
                return fail(format!("n lies in I_{k}, which requires n <= k^2 - (j^2 + j)/2 = {top}"));
            }
            let l = n + k + j * (j - 1) / 2 - k * k;
            let mut steps = vec![Step::new(k, k - j)];
            steps.extend((1..j).map(|i| Step::new(k - i, 1)));
            steps.push(Step::new(l, 1));
            Ok(StaircasePartition::new(steps))
        }
        Side::Upper => {
            if j < 1 {
                return fail(format!("n lies in J_{k}, which requires j >= 1"));
            }
            if 2 * k < j * j + 3 * j + 4 {
                return fail(format!(
                    "n lies in J_{k}, which requires k >= (j^2 + 3j + 4)/2 = {}",
                    (j * j + 3 * j + 4).div_ceil(2)
                ));
            }
            let top = k * k + k - (j * j + 3 * j + 2) / 2;
            if n > top {
                return fail(format!(
                    "n lies in J_{k}, which requires n <= k^2 + k - (j^2 + 3j + 2)/2 = {top}"
                ));
            }
            let l = n + j * (j + 1) / 2 - k * k;
            let mut steps = vec![Step::new(k, k - j)];
            steps.extend((1..=j).map(|i| Step::new(k - i, 1)));
            steps.push(Step::new(l, 1));
            Ok(StaircasePartition::new(steps))
        }
    }
}

/// A partition with at least two steps and least possible weight, for squares
/// and pronic numbers with `k >= 2`.
///
/// * `n = 4`: `[(2, 1), (1, 2)]`, weight 5
/// * `n = k^2`, `k >= 3`: `[(k + 2, 1), (k + 1, k - 2)]`, weight `2k + 1`
/// * `n = k^2 + k`: `[(k + 2, k - 1), (2, 1)]`, weight `2k + 2`
pub fn construct_multiblock_extremal(n: u64) -> Result<StaircasePartition> {
    check_positive("construct_multiblock_extremal", n)?;
    let interval = classify(n)?;
    let k = interval.k;
    let steps = match interval.side {
        Side::Lower if n == k * k && k == 2 => vec![Step::new(2, 1), Step::new(1, 2)],
        Side::Lower if n == k * k && k >= 3 => {
            vec![Step::new(k + 2, 1), Step::new(k + 1, k - 2)]
        }
        Side::Upper if n == k * k + k && k >= 2 => vec![Step::new(k + 2, k - 1), Step::new(2, 1)],
        _ => {
            return Err(Error::Precondition(format!(
                "multiblock: {n} is not k^2 or k^2 + k with k >= 2"
            )))
        }
    };
    Ok(StaircasePartition::new(steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::phi;

    fn p(pairs: &[(u64, u64)]) -> StaircasePartition {
        StaircasePartition::from_pairs(pairs)
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&p(&[(6, 5), (2, 1)]), 32));
        assert_eq!(p(&[(2, 1), (2, 1)]).check(4), Err(Invalid::NotDecreasing));
        assert_eq!(p(&[(3, 3)]).check(10), Err(Invalid::WrongSum));
        assert_eq!(p(&[]).check(1), Err(Invalid::Empty));
        assert_eq!(p(&[(3, 0)]).check(0), Err(Invalid::NonPositive));
        assert_eq!(p(&[(u64::MAX, 2)]).check(1), Err(Invalid::WrongSum));
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(construct_minimal(32), Ok(p(&[(6, 5), (2, 1)])));
        assert_eq!(construct_minimal(100), Ok(p(&[(10, 10)])));
        assert_eq!(construct_minimal(37), Ok(p(&[(6, 6), (1, 1)])));
        assert_eq!(construct_minimal(17), Ok(p(&[(4, 4), (1, 1)])));
        assert_eq!(construct_minimal(1), Ok(p(&[(1, 1)])));
        assert_eq!(construct_minimal(2), Ok(p(&[(2, 1)])));
        assert_eq!(construct_minimal(42), Ok(p(&[(7, 6)])));
        assert_eq!(construct_minimal(32).unwrap().weight(), 12);
        assert_eq!(construct_minimal(37).unwrap().weight(), 13);
        assert!(construct_minimal(0).is_err());
    }

    #[test]
    fn minimal_second_step_never_collides() {
        for n in 1..=3000 {
            let part = construct_minimal(n).unwrap();
            assert_eq!(part.check(n), Ok(()), "n = {n}");
            assert_eq!(part.weight(), phi(n).unwrap());
        }
    }

    #[test]
    fn multistep_examples() {
        let got = construct_multistep(43, 3).unwrap();
        assert_eq!(got, p(&[(7, 4), (6, 1), (5, 1), (4, 1)]));
        assert_eq!(got.weight(), 14);
        let got = construct_multistep(111, 4).unwrap();
        assert_eq!(got, p(&[(11, 7), (10, 1), (9, 1), (8, 1), (7, 1)]));
        assert_eq!(got.weight(), 22);
        let got = construct_multistep(122, 3).unwrap();
        assert_eq!(got, p(&[(11, 8), (10, 1), (9, 1), (8, 1), (7, 1)]));
        assert_eq!(got.weight(), 23);
    }

    #[test]
    fn multistep_preconditions() {
        // 32 in I_6: j = 3 needs k >= 7
        let err = construct_multistep(32, 3).unwrap_err();
        assert!(matches!(&err, Error::Precondition(m) if m.contains("(j^2 + j + 2)/2 = 7")));
        // j = 1 is not a multistep case on I_k
        assert!(construct_multistep(43, 1).is_err());
        // 49 = 7^2 is above k^2 - 6
        let err = construct_multistep(49, 3).unwrap_err();
        assert!(matches!(&err, Error::Precondition(m) if m.contains("n <=")));
        // 132 = 11^2 + 11 is above k^2 + k - 10
        assert!(construct_multistep(132, 3).is_err());
        assert!(construct_multistep(0, 2).is_err());
        assert!(construct_multistep(1000, 0).is_err());
        assert!(construct_multistep(1000, u64::MAX).is_err());
    }

    #[test]
    fn multiblock_examples() {
        assert_eq!(construct_multiblock_extremal(4), Ok(p(&[(2, 1), (1, 2)])));
        assert_eq!(construct_multiblock_extremal(9), Ok(p(&[(5, 1), (4, 1)])));
        assert_eq!(construct_multiblock_extremal(6), Ok(p(&[(4, 1), (2, 1)])));
        assert_eq!(construct_multiblock_extremal(4).unwrap().weight(), 5);
        assert_eq!(construct_multiblock_extremal(9).unwrap().weight(), 7);
        assert_eq!(construct_multiblock_extremal(6).unwrap().weight(), 6);
        for bad in [0, 1, 2, 5, 7, 31] {
            assert!(construct_multiblock_extremal(bad).is_err(), "n = {bad}");
        }
    }

    #[test]
    fn text_forms() {
        let rec: PartitionRecord = "n=32 w=12 steps=6x5,2x1".parse().unwrap();
        assert_eq!(rec.n, 32);
        assert_eq!(rec.w, 12);
        assert_eq!(rec.partition, p(&[(6, 5), (2, 1)]));
        assert_eq!(rec.check(), Ok(()));
        assert_eq!(rec.to_string(), "n=32 w=12 steps=6x5,2x1");
        assert_eq!(PartitionRecord::of(p(&[(6, 5), (2, 1)])), rec);

        let wrong_w: PartitionRecord = "n=32 w=11 steps=6x5,2x1".parse().unwrap();
        assert!(matches!(wrong_w.check(), Err(RecordError::WrongWeight { .. })));

        for bad in [
            "n=32 w=12 steps=6x5, 2x1",
            "n=32 w=12 steps=6x5,,2x1",
            "n=32  w=12 steps=6x5",
            "n=32 w=12",
            "n=-1 w=12 steps=1x1",
            "n=32 w=12 steps=6*5",
            "w=12 n=32 steps=6x5,2x1",
            "n=32 w=12 steps=",
            "n=32 w=12 steps=+6x5",
        ] {
            assert!(bad.parse::<PartitionRecord>().is_err(), "{bad}");
        }
    }
}
