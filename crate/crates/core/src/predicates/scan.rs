//! Recomputes printed statements, lists and tables and reports every point
//! where the printed claim and the computation disagree.

use std::collections::BTreeMap;
use std::fmt;

use super::data;
use super::records::RecordTable;
use super::{is_small_odd_prime_multiple, is_small_prime_multiple, LADDER, LADDER_XI_AS_PRINTED, EXCEPTION_HORIZON};
use crate::arith::{is_prime, prime_cofactor, DeltaTable};
use crate::classify::{classify_unchecked, delta_minimizers, nearest_square_k, phi, Side};
use crate::partition::{brute_force_min_weight, ORACLE_MAX_N};
use crate::{Error, Result};

/// Default upper end of open-ended scans.
pub const DEFAULT_SCAN_TO: u64 = 100_000;

/// Upper end accepted by open-ended scans over `delta`.
pub const MAX_SCAN_TO: u64 = 10_000_000;

/// Where a property can be evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Any `from..=to` with `to <= max`; `1..=default_to` when unspecified.
    Open { default_to: u64, max: u64 },
    /// Exactly `lo..=hi`; a requested range is clipped to it.
    Interval { lo: u64, hi: u64 },
    /// Finitely many listed points within `lo..=hi`.
    Listed { lo: u64, hi: u64 },
}

/// A checked point where the printed value and the computed value differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mismatch {
    pub n: u64,
    pub paper: i64,
    pub computed: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub property: &'static str,
    /// Inclusive range actually scanned.
    pub range: (u64, u64),
    /// Number of points evaluated in the range.
    pub checked: u64,
    pub matches: u64,
    /// Ordered by `n`.
    pub mismatches: Vec<Mismatch>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn mismatch_ns(&self) -> Vec<u64> {
        self.mismatches.iter().map(|m| m.n).collect()
    }
}

/// `# property=<id> range=<a>..<b> matches=<m>`, a header row, then one
/// tab-separated row per mismatch.
impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# property={} range={}..{} matches={}",
            self.property, self.range.0, self.range.1, self.matches
        )?;
        writeln!(f, "n\tpaper\tcomputed")?;
        for m in &self.mismatches {
            writeln!(f, "{}\t{}\t{}", m.n, m.paper, m.computed)?;
        }
        Ok(())
    }
}

struct Point {
    n: u64,
    paper: i64,
    computed: i64,
}

fn point(n: u64, paper: impl Into<i64>, computed: impl Into<i64>) -> Point {
    Point {
        n,
        paper: paper.into(),
        computed: computed.into(),
    }
}

fn flag(b: bool) -> i64 {
    i64::from(b)
}

type Eval = fn(u64, u64) -> Vec<Point>;

/// A registered statement with its evaluation.
#[derive(Clone, Copy)]
pub struct Property {
    pub id: &'static str,
    /// What the `paper` and `computed` columns hold.
    pub summary: &'static str,
    pub domain: Domain,
    eval: Eval,
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Property")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish()
    }
}

const OPEN: Domain = Domain::Open {
    default_to: DEFAULT_SCAN_TO,
    max: MAX_SCAN_TO,
};

const RECORDS: Domain = Domain::Open {
    default_to: DEFAULT_SCAN_TO,
    max: 1_000_000,
};

const TABLE_3_6_SPAN: Domain = Domain::Interval { lo: 1, hi: 111 };

fn prop(id: &'static str, summary: &'static str, domain: Domain, eval: Eval) -> Property {
    Property {
        id,
        summary,
        domain,
        eval,
    }
}

/// Every registered property, in a fixed order.
pub fn properties() -> Vec<Property> {
    let mut all = vec![
        prop("table_3_6_eps", "printed eps(n) vs computed", TABLE_3_6_SPAN, |a, b| {
            table_3_6(a, b, |row| row.1, |t, n| t.eps(n))
        }),
        prop("table_3_6_cofactor", "printed n/eps(n) vs computed", TABLE_3_6_SPAN, |a, b| {
            table_3_6(a, b, |row| row.2, |t, n| n / t.eps(n))
        }),
        prop("table_3_6_delta", "printed delta(n) vs computed", TABLE_3_6_SPAN, |a, b| {
            table_3_6(a, b, |row| row.3, |t, n| t.delta(n))
        }),
        prop("table_3_6_quarter", "printed floor(n/4) vs computed", TABLE_3_6_SPAN, |a, b| {
            table_3_6(a, b, |row| row.4, |_, n| n / 4)
        }),
        prop(
            "lemma_3_7",
            "n listed as delta(n) < n/4 (1/0) vs 4*delta(n) < n",
            TABLE_3_6_SPAN,
            |a, b| listed_vs(a, b, &data::LEMMA_3_7_BELOW, |n, d| 4 * d < n),
        ),
        prop(
            "lemma_3_7_ii",
            "n listed as delta(n) = n/4 (1/0) vs 4*delta(n) = n",
            TABLE_3_6_SPAN,
            |a, b| listed_vs(a, b, &data::LEMMA_3_7_EQUAL, |n, d| 4 * d == n),
        ),
        prop(
            "lemma_3_8",
            "for eps(n) >= 8: claim n >= 64, 4*delta(n) <= n, strict from 65 (1) vs evaluation",
            OPEN,
            lemma_3_8,
        ),
    ];
    all.extend(observation_properties());
    all.extend([
        prop(
            "prop_3_10",
            "printed characterization of delta(n) < n/4 vs 4*delta(n) < n",
            OPEN,
            |a, b| {
                direct(a, b, |n, d| {
                    let paper = !is_small_prime_multiple(n) && !data::PROP_3_10_EXCEPTIONS.contains(&n);
                    (paper, 4 * d < n)
                })
            },
        ),
        prop(
            "prop_3_10_b",
            "n not of the prime-multiple form: in printed exception list vs fails the inequality",
            Domain::Interval {
                lo: 1,
                hi: EXCEPTION_HORIZON,
            },
            |a, b| {
                exception_list(a, b, &data::PROP_3_10_EXCEPTIONS, is_small_prime_multiple, |n, d| 4 * d >= n)
            },
        ),
        prop("prop_3_10_ii", "n = 64 vs 4*delta(n) = n", OPEN, |a, b| {
            direct(a, b, |n, d| (n == 64, 4 * d == n))
        }),
        prop(
            "prop_4_1",
            "printed characterization of delta(n) < (n+12)/4 vs 4*delta(n) < n + 12",
            OPEN,
            |a, b| {
                direct(a, b, |n, d| {
                    let paper = !is_small_odd_prime_multiple(n) && !data::PROP_4_1_EXCEPTIONS.contains(&n);
                    (paper, 4 * d < n + 12)
                })
            },
        ),
        prop(
            "prop_4_1_b",
            "n not of the prime-multiple form: in printed exception list vs fails the inequality",
            Domain::Interval {
                lo: 1,
                hi: EXCEPTION_HORIZON,
            },
            |a, b| {
                exception_list(a, b, &data::PROP_4_1_EXCEPTIONS, is_small_odd_prime_multiple, |n, d| {
                    4 * d >= n + 12
                })
            },
        ),
        prop("prop_4_1_ii", "n in {4, 36, 40} vs 4*delta(n) = n + 12", OPEN, |a, b| {
            direct(a, b, |n, d| (data::PROP_4_1_EQUAL.contains(&n), 4 * d == n + 12))
        }),
    ]);
    all.extend(ladder_properties());
    all.extend([
        prop(
            "prop_5_1",
            "n = 1 or prime vs delta(m) < delta(n) for all m < n",
            RECORDS,
            |a, b| {
                let records = RecordTable::new(b);
                (a..=b)
                    .map(|n| point(n, flag(n == 1 || is_prime(n)), flag(records.left(n))))
                    .collect()
            },
        ),
        prop(
            "prop_5_2",
            "n in {1, 8, 21}, p or 2p vs delta(m) < delta(n) for all composite m < n",
            RECORDS,
            |a, b| {
                let records = RecordTable::new(b);
                (a..=b)
                    .map(|n| {
                        let paper = matches!(n, 1 | 8 | 21)
                            || prime_cofactor(n, 1).is_some()
                            || prime_cofactor(n, 2).is_some();
                        point(n, flag(paper), flag(records.composite_left(n)))
                    })
                    .collect()
            },
        ),
        prop(
            "prop_5_4",
            "n = k^2 or k^2 + k vs delta(m) > delta(n) for all m in (n, (k+2)^2]",
            RECORDS,
            |a, b| {
                let records = RecordTable::new(b);
                (a..=b)
                    .map(|n| {
                        let k = classify_unchecked(n).k;
                        point(n, flag(n == k * k || n == k * k + k), flag(records.right(n)))
                    })
                    .collect()
            },
        ),
        prop(
            "prop_6_3",
            "n in I_k: n = k^2 - l^2 with l^2 <= k - 1 (1/0) vs delta(n) = 2k (1), > 2k (0), < 2k (-1)",
            OPEN,
            |a, b| interval_minimizers(a, b, Side::Lower),
        ),
        prop(
            "prop_6_7",
            "n in J_k: n = k^2 + k - l^2 - l with l^2 + l <= k - 1 (1/0) vs delta(n) = 2k+1 (1), > (0), < (-1)",
            OPEN,
            |a, b| interval_minimizers(a, b, Side::Upper),
        ),
        prop(
            "example_6_4",
            "n listed for its I_k (1/0) vs n among the computed minimizers",
            Domain::Interval { lo: 1, hi: 100 },
            |a, b| example_rows(a, b, Side::Lower, &data::EXAMPLE_6_4),
        ),
        prop(
            "example_6_8",
            "n listed for its J_k (1/0) vs n among the computed minimizers",
            Domain::Interval { lo: 2, hi: 110 },
            |a, b| example_rows(a, b, Side::Upper, &data::EXAMPLE_6_8),
        ),
        prop(
            "theorem_8_1",
            "phi(n) by formula vs exhaustive minimum weight",
            Domain::Open {
                default_to: 90,
                max: ORACLE_MAX_N,
            },
            |a, b| {
                (a..=b)
                    .map(|n| {
                        let formula = phi(n).expect("n >= 1");
                        let (oracle, _) = brute_force_min_weight(n, 1).expect("n within oracle range");
                        point(n, formula as i64, oracle as i64)
                    })
                    .collect()
            },
        ),
        prop(
            "remark_8_2",
            "interval index k vs k minimizing |n - k^2|",
            OPEN,
            |a, b| {
                (a..=b)
                    .map(|n| {
                        let k = nearest_square_k(n).expect("n >= 1");
                        point(n, classify_unchecked(n).k as i64, k as i64)
                    })
                    .collect()
            },
        ),
        prop(
            "table_8_3_phi",
            "printed phi(n) vs formula",
            Domain::Listed { lo: 1, hi: 1_111_111 },
            |a, b| {
                data::TABLE_8_3
                    .iter()
                    .filter(|(n, _)| (a..=b).contains(n))
                    .map(|&(n, printed)| point(n, printed as i64, phi(n).expect("n >= 1") as i64))
                    .collect()
            },
        ),
    ]);
    all
}

fn table_3_6(
    a: u64,
    b: u64,
    printed: fn(&(u64, u64, u64, u64, u64)) -> u64,
    computed: fn(&DeltaTable, u64) -> u64,
) -> Vec<Point> {
    let table = DeltaTable::new(b);
    data::TABLE_3_6
        .iter()
        .filter(|row| (a..=b).contains(&row.0))
        .map(|row| point(row.0, printed(row) as i64, computed(&table, row.0) as i64))
        .collect()
}

/// `f(n, delta(n))` gives `(printed claim, computed truth)` for every `n`.
fn direct(a: u64, b: u64, f: impl Fn(u64, u64) -> (bool, bool)) -> Vec<Point> {
    let table = DeltaTable::new(b);
    (a..=b)
        .map(|n| {
            let (paper, computed) = f(n, table.delta(n));
            point(n, flag(paper), flag(computed))
        })
        .collect()
}

/// Points not covered by `form`: listed as an exception vs `fails(n, delta)`.
/// Listed entries that `form` already covers are redundant and skipped.
fn exception_list(a: u64, b: u64, listed: &[u64], form: fn(u64) -> bool, fails: fn(u64, u64) -> bool) -> Vec<Point> {
    let table = DeltaTable::new(b);
    (a..=b)
        .filter(|&n| !form(n))
        .map(|n| point(n, flag(listed.contains(&n)), flag(fails(n, table.delta(n)))))
        .collect()
}

fn listed_vs(a: u64, b: u64, listed: &[u64], f: fn(u64, u64) -> bool) -> Vec<Point> {
    direct(a, b, |n, d| (listed.contains(&n), f(n, d)))
}

fn lemma_3_8(a: u64, b: u64) -> Vec<Point> {
    let table = DeltaTable::new(b);
    (a..=b)
        .filter(|&n| table.eps(n) >= 8)
        .map(|n| {
            let d = table.delta(n);
            let holds = n >= 64 && 4 * d <= n && (n < 65 || 4 * d < n);
            point(n, 1, flag(holds))
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Claim {
    Above,
    Below,
}

impl Claim {
    fn sign(self) -> i64 {
        match self {
            Claim::Above => 1,
            Claim::Below => -1,
        }
    }
}

/// `delta(c p) = p + c` and `4 delta(c p)` above or below `c p`, for the
/// primes `p` accepted by `primes`.
struct Family {
    label: &'static str,
    multiplier: u64,
    primes: fn(u64) -> bool,
    claim: Claim,
}

/// `delta(n) = value` compared with `n / 4`.
struct Single {
    label: &'static str,
    n: u64,
    value: u64,
    claim: Claim,
}

const FAMILIES: [Family; 12] = [
    Family { label: "i", multiplier: 1, primes: |_| true, claim: Claim::Above },
    Family { label: "ii", multiplier: 2, primes: |_| true, claim: Claim::Above },
    Family { label: "iii", multiplier: 3, primes: |_| true, claim: Claim::Above },
    Family { label: "iv", multiplier: 4, primes: |_| true, claim: Claim::Above },
    Family { label: "v", multiplier: 5, primes: |p| p <= 19, claim: Claim::Above },
    Family { label: "vi", multiplier: 5, primes: |p| p >= 23, claim: Claim::Below },
    Family { label: "viii", multiplier: 6, primes: |p| (3..=11).contains(&p), claim: Claim::Above },
    Family { label: "ix", multiplier: 6, primes: |p| p >= 13, claim: Claim::Below },
    Family { label: "x", multiplier: 7, primes: |p| p <= 7, claim: Claim::Above },
    Family { label: "xi", multiplier: 7, primes: |p| p >= 11, claim: Claim::Below },
    Family { label: "xiv", multiplier: 8, primes: |p| p == 5 || p == 7, claim: Claim::Above },
    Family { label: "xv", multiplier: 8, primes: |p| p >= 11, claim: Claim::Below },
];

const SINGLES: [Single; 3] = [
    Single { label: "vii", n: 12, value: 7, claim: Claim::Above },
    Single { label: "xii", n: 16, value: 8, claim: Claim::Above },
    Single { label: "xiii", n: 24, value: 10, claim: Claim::Above },
];

/// A wrong `delta` is reported as (claimed, actual); a right `delta` on the
/// wrong side of `n / 4` as (claimed sign, actual sign).
fn observation_point(n: u64, claimed: u64, claim: Claim, actual: u64) -> Point {
    if claimed != actual {
        return point(n, claimed as i64, actual as i64);
    }
    let sign = (4 * actual as i64 - n as i64).signum();
    point(n, claim.sign(), sign)
}

macro_rules! family_eval {
    ($idx:expr) => {
        |a: u64, b: u64| -> Vec<Point> {
            let f = &FAMILIES[$idx];
            let table = DeltaTable::new(b);
            (a..=b)
                .filter_map(|n| {
                    let p = prime_cofactor(n, f.multiplier)?;
                    (f.primes)(p).then(|| observation_point(n, p + f.multiplier, f.claim, table.delta(n)))
                })
                .collect()
        }
    };
}

macro_rules! single_eval {
    ($idx:expr) => {
        |a: u64, b: u64| -> Vec<Point> {
            let s = &SINGLES[$idx];
            if !(a..=b).contains(&s.n) {
                return Vec::new();
            }
            let table = DeltaTable::new(s.n);
            vec![observation_point(s.n, s.value, s.claim, table.delta(s.n))]
        }
    };
}

const OBSERVATION_SUMMARY: &str =
    "claimed delta(n) vs actual; when equal, claimed vs actual sign of 4*delta(n) - n";

fn observation_properties() -> Vec<Property> {
    let evals: [(&str, Eval); 15] = [
        (FAMILIES[0].label, family_eval!(0)),
        (FAMILIES[1].label, family_eval!(1)),
        (FAMILIES[2].label, family_eval!(2)),
        (FAMILIES[3].label, family_eval!(3)),
        (FAMILIES[4].label, family_eval!(4)),
        (FAMILIES[5].label, family_eval!(5)),
        (SINGLES[0].label, single_eval!(0)),
        (FAMILIES[6].label, family_eval!(6)),
        (FAMILIES[7].label, family_eval!(7)),
        (FAMILIES[8].label, family_eval!(8)),
        (FAMILIES[9].label, family_eval!(9)),
        (SINGLES[1].label, single_eval!(1)),
        (SINGLES[2].label, single_eval!(2)),
        (FAMILIES[10].label, family_eval!(10)),
        (FAMILIES[11].label, family_eval!(11)),
    ];
    evals
        .into_iter()
        .map(|(label, eval)| {
            let id: &'static str = Box::leak(format!("obs_3_9_{label}").into_boxed_str());
            prop(id, OBSERVATION_SUMMARY, OPEN, eval)
        })
        .collect()
}

macro_rules! ladder_eval {
    ($idx:expr) => {
        |a: u64, b: u64| -> Vec<Point> {
            let statement = &LADDER[$idx];
            direct(a, b, |n, d| (statement.characterized(n), statement.holds(n, d)))
        }
    };
}

const LADDER_SUMMARY: &str = "characterization (1/0) vs 2*delta(n) compared with n + c";

fn ladder_properties() -> Vec<Property> {
    let evals: [Eval; 18] = [
        ladder_eval!(0),
        ladder_eval!(1),
        ladder_eval!(2),
        ladder_eval!(3),
        ladder_eval!(4),
        ladder_eval!(5),
        ladder_eval!(6),
        ladder_eval!(7),
        ladder_eval!(8),
        ladder_eval!(9),
        ladder_eval!(10),
        ladder_eval!(11),
        ladder_eval!(12),
        ladder_eval!(13),
        ladder_eval!(14),
        ladder_eval!(15),
        ladder_eval!(16),
        ladder_eval!(17),
    ];
    let mut out: Vec<Property> = LADDER
        .iter()
        .zip(evals)
        .map(|(statement, eval)| {
            let id: &'static str = Box::leak(format!("lemma_4_2_{}", statement.label).into_boxed_str());
            prop(id, LADDER_SUMMARY, OPEN, eval)
        })
        .collect();
    out.push(prop(
        "lemma_4_2_xi_as_printed",
        "characterization (1/0) vs 2*delta(n) != n - 1",
        OPEN,
        |a, b| {
            direct(a, b, |n, d| {
                (LADDER_XI_AS_PRINTED.characterized(n), LADDER_XI_AS_PRINTED.holds(n, d))
            })
        },
    ));
    out
}

fn interval_minimizers(a: u64, b: u64, side: Side) -> Vec<Point> {
    let table = DeltaTable::new(b);
    let mut cache: Option<(u64, Vec<u64>)> = None;
    (a..=b)
        .filter_map(|n| {
            let interval = classify_unchecked(n);
            if interval.side != side {
                return None;
            }
            let k = interval.k;
            if cache.as_ref().is_none_or(|(ck, _)| *ck != k) {
                let ns = delta_minimizers(k, side)
                    .expect("k within range")
                    .into_iter()
                    .map(|(m, _)| m)
                    .collect();
                cache = Some((k, ns));
            }
            let listed = cache.as_ref().is_some_and(|(_, ns)| ns.contains(&n));
            let floor = interval.delta_floor();
            let computed = match table.delta(n).cmp(&floor) {
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => 0,
                std::cmp::Ordering::Less => -1,
            };
            Some(point(n, flag(listed), computed))
        })
        .collect()
}

fn example_rows(a: u64, b: u64, side: Side, rows: &[&[u64]]) -> Vec<Point> {
    let mut points: BTreeMap<u64, (bool, bool)> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        let k = i as u64 + 1;
        let minimizers: Vec<u64> = delta_minimizers(k, side)
            .expect("k within range")
            .into_iter()
            .map(|(n, _)| n)
            .collect();
        let interval = crate::classify::SquareInterval { k, side };
        let (lo, hi) = interval.bounds();
        for n in lo..=hi {
            points.insert(n, (row.contains(&n), minimizers.contains(&n)));
        }
        // printed entries that fall outside their own interval
        for &n in row.iter().filter(|&&n| !interval.contains(n)) {
            points.insert(n, (true, minimizers.contains(&n)));
        }
    }
    points
        .into_iter()
        .filter(|(n, _)| (a..=b).contains(n))
        .map(|(n, (paper, computed))| point(n, flag(paper), flag(computed)))
        .collect()
}

fn effective_range(property: &Property, requested: Option<(u64, u64)>) -> Result<(u64, u64)> {
    if let Some((a, b)) = requested {
        if a == 0 || a > b {
            return Err(Error::Precondition(format!(
                "scan range {a}..{b} must satisfy 1 <= from <= to"
            )));
        }
    }
    let (a, b) = match property.domain {
        Domain::Open { default_to, max } => {
            let (a, b) = requested.unwrap_or((1, default_to));
            if b > max {
                return Err(Error::TooLarge {
                    func: property.id,
                    n: b,
                    ceiling: max,
                });
            }
            (a, b)
        }
        Domain::Interval { lo, hi } | Domain::Listed { lo, hi } => {
            let (a, b) = requested.unwrap_or((lo, hi));
            (a.max(lo), b.min(hi))
        }
    };
    if a > b {
        return Err(Error::Precondition(format!(
            "{} is only stated for n in {:?}",
            property.id, property.domain
        )));
    }
    Ok((a, b))
}

/// Evaluates one registered property over `range` (inclusive), or over its
/// default range when `range` is `None`.
pub fn scan_statement(property_id: &str, range: Option<(u64, u64)>) -> Result<ScanReport> {
    let property = properties()
        .into_iter()
        .find(|p| p.id == property_id)
        .ok_or_else(|| Error::UnknownProperty(property_id.to_owned()))?;
    let (a, b) = effective_range(&property, range)?;
    let points = (property.eval)(a, b);
    let mut report = ScanReport {
        property: property.id,
        range: (a, b),
        checked: points.len() as u64,
        matches: 0,
        mismatches: Vec::new(),
    };
    for p in points {
        if p.paper == p.computed {
            report.matches += 1;
        } else {
            report.mismatches.push(Mismatch {
                n: p.n,
                paper: p.paper,
                computed: p.computed,
            });
        }
    }
    report.mismatches.sort_unstable();
    Ok(report)
}
