use std::cmp::Ordering;

use super::{StaircasePartition, Step};
use crate::arith::check_positive;
use crate::{Error, Result};

/// Largest `n` the exhaustive search accepts.
pub const ORACLE_MAX_N: u64 = 120;

/// Minimum weight over all staircase partitions of `n` with at least `min_t`
/// steps, found by exhaustive depth-first search with branch and bound.
///
/// Among optimal partitions the witness is the least by
/// `(t, r-sequence, s-sequence)`, compared lexicographically.
pub fn brute_force_min_weight(n: u64, min_t: usize) -> Result<(u64, StaircasePartition)> {
    check_positive("brute_force_min_weight", n)?;
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            func: "brute_force_min_weight",
            n,
            ceiling: ORACLE_MAX_N,
        });
    }
    let min_t = min_t.max(1);
    let mut search = Search {
        min_t,
        steps: Vec::new(),
        best: None,
    };
    for r1 in 1..=n {
        // r1 * (s1 + ... + st) >= n
        if search.exceeds_best(r1 + n.div_ceil(r1)) {
            continue;
        }
        for s1 in 1..=n / r1 {
            search.steps.push(Step::new(r1, s1));
            search.descend(n - r1 * s1, r1 + s1);
            search.steps.pop();
        }
    }
    search
        .best
        .map(|(w, steps)| (w, StaircasePartition::new(steps)))
        .ok_or(Error::NoPartition { n, min_t })
}

struct Search {
    min_t: usize,
    steps: Vec<Step>,
    best: Option<(u64, Vec<Step>)>,
}

impl Search {
    /// `remaining` is still to be covered by steps with `r` below the last
    /// one; `weight` is the weight of the steps so far.
    fn descend(&mut self, remaining: u64, weight: u64) {
        let t = self.steps.len();
        if remaining == 0 {
            if t >= self.min_t {
                self.offer(weight);
            }
            return;
        }
        let below = self.steps[t - 1].r - 1;
        if below == 0 {
            return;
        }
        // Each further column has height at most `below`, and each further
        // step adds at least one column.
        let more_columns = remaining.div_ceil(below).max((self.min_t.saturating_sub(t)) as u64);
        if self.exceeds_best(weight + more_columns) {
            return;
        }
        for r in 1..=below.min(remaining) {
            for s in 1..=remaining / r {
                if self.exceeds_best(weight + s) {
                    break;
                }
                self.steps.push(Step::new(r, s));
                self.descend(remaining - r * s, weight + s);
                self.steps.pop();
            }
        }
    }

    // Ties are explored so the witness is the lexicographic least.
    fn exceeds_best(&self, lower_bound: u64) -> bool {
        self.best.as_ref().is_some_and(|(w, _)| lower_bound > *w)
    }

    fn offer(&mut self, weight: u64) {
        let better = match &self.best {
            None => true,
            Some((w, steps)) => match weight.cmp(w) {
                Ordering::Less => true,
                Ordering::Equal => witness_order(&self.steps, steps) == Ordering::Less,
                Ordering::Greater => false,
            },
        };
        if better {
            self.best = Some((weight, self.steps.clone()));
        }
    }
}

fn witness_order(a: &[Step], b: &[Step]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().map(|s| s.r).cmp(b.iter().map(|s| s.r)))
        .then_with(|| a.iter().map(|s| s.s).cmp(b.iter().map(|s| s.s)))
}
