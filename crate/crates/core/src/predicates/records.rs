use std::collections::VecDeque;

use crate::arith::{is_prime, DeltaTable};
use crate::classify::classify_unchecked;

/// Direct evaluation of the three record properties of `delta` for every
/// `n` in `1..=limit`:
///
/// * left record: `delta(m) < delta(n)` for every `m < n`;
/// * composite left record: `delta(m) < delta(n)` for every composite `m < n`;
/// * right record: `delta(m) > delta(n)` for every `m` in `(n, (k + 2)^2]`
///   where `k` is the interval index of `n`. Beyond that horizon
///   `delta(m) >= 2 sqrt(m) > 2k + 4`, so the finite window decides the
///   unbounded property.
#[derive(Debug, Clone)]
pub struct RecordTable {
    left: Vec<bool>,
    composite_left: Vec<bool>,
    right: Vec<bool>,
}

fn horizon(n: u64) -> u64 {
    let k = classify_unchecked(n).k;
    (k + 2) * (k + 2)
}

impl RecordTable {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(1);
        let table = DeltaTable::new(horizon(limit));
        Self {
            left: left_records(&table, limit),
            composite_left: composite_left_records(&table, limit),
            right: right_records(&table, limit),
        }
    }

    pub fn limit(&self) -> u64 {
        (self.left.len() - 1) as u64
    }

    pub fn left(&self, n: u64) -> bool {
        self.left[n as usize]
    }

    pub fn composite_left(&self, n: u64) -> bool {
        self.composite_left[n as usize]
    }

    pub fn right(&self, n: u64) -> bool {
        self.right[n as usize]
    }
}

/// Index `n` holds whether `n` is a left record; index 0 is unused.
pub fn left_records(table: &DeltaTable, limit: u64) -> Vec<bool> {
    let mut out = vec![false; limit as usize + 1];
    let mut best = 0;
    for n in 1..=limit {
        let d = table.delta(n);
        out[n as usize] = best < d;
        best = best.max(d);
    }
    out
}

pub fn composite_left_records(table: &DeltaTable, limit: u64) -> Vec<bool> {
    let mut out = vec![false; limit as usize + 1];
    let mut best = 0;
    for n in 1..=limit {
        let d = table.delta(n);
        out[n as usize] = best < d;
        if n > 1 && !is_prime(n) {
            best = best.max(d);
        }
    }
    out
}

/// `table` must reach `(k + 2)^2` for the interval index `k` of `limit`.
pub fn right_records(table: &DeltaTable, limit: u64) -> Vec<bool> {
    assert!(table.limit() >= horizon(limit), "delta table too short");
    let mut out = vec![false; limit as usize + 1];
    // Sliding minimum over the window (n, horizon(n)]. Both ends move left
    // as n decreases. Delta strictly increases from the back of the deque
    // (oldest index, the window minimum) to the front.
    let mut window: VecDeque<u64> = VecDeque::new();
    let mut next_in = horizon(limit);
    for n in (1..=limit).rev() {
        while next_in > n {
            let d = table.delta(next_in);
            while window.front().is_some_and(|&m| table.delta(m) >= d) {
                window.pop_front();
            }
            window.push_front(next_in);
            next_in -= 1;
        }
        let h = horizon(n);
        while window.back().is_some_and(|&m| m > h) {
            window.pop_back();
        }
        let min = window.back().map(|&m| table.delta(m));
        out[n as usize] = min.is_none_or(|min| min > table.delta(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sliding_window_matches_direct_scan() {
        let limit = 3000;
        let table = DeltaTable::new(horizon(limit));
        let fast = right_records(&table, limit);
        for n in 1..=limit {
            let slow = (n + 1..=horizon(n)).all(|m| table.delta(m) > table.delta(n));
            assert_eq!(fast[n as usize], slow, "n = {n}");
        }
    }

    #[test]
    fn small_records() {
        let records = RecordTable::new(30);
        let left: Vec<u64> = (1..=30).filter(|&n| records.left(n)).collect();
        assert_eq!(left, [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        let right: Vec<u64> = (1..=30).filter(|&n| records.right(n)).collect();
        assert_eq!(right, [1, 2, 4, 6, 9, 12, 16, 20, 25, 30]);
        let composite: Vec<u64> = (1..=30).filter(|&n| records.composite_left(n)).collect();
        assert_eq!(
            composite,
            [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 17, 19, 21, 22, 23, 26, 29]
        );
    }
}
