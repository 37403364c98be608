use proptest::prelude::*;
use staircase::classify::{classify, phi, Side};
use staircase::partition::{
    brute_force_min_weight, construct_minimal, construct_multiblock_extremal, construct_multistep, validate, Invalid,
    PartitionRecord, StaircasePartition, Step,
};

fn assert_optimal(p: &StaircasePartition, n: u64) {
    assert!(validate(p, n), "{p} is not a partition of {n}");
    assert_eq!(p.weight(), phi(n).unwrap(), "{p} for n = {n}");
}

#[test]
fn minimal_construction() {
    for n in 1..=2000 {
        assert_optimal(&construct_minimal(n).unwrap(), n);
    }
}

#[test]
fn multistep_construction() {
    let mut legal = 0;
    for n in 1..=2000u64 {
        for j in 0..=64 {
            let Ok(p) = construct_multistep(n, j) else { continue };
            legal += 1;
            assert_optimal(&p, n);
            let mut rs: Vec<u64> = p.rs().collect();
            rs.dedup();
            assert_eq!(rs.len(), p.len(), "repeated height in {p}");
            let expected_steps = match classify(n).unwrap().side {
                Side::Lower => j + 1,
                Side::Upper => j + 2,
            };
            assert_eq!(p.len() as u64, expected_steps, "{p}");
        }
    }
    assert!(legal > 1000, "only {legal} legal (n, j) pairs");
}

#[test]
fn multistep_preconditions() {
    assert!(construct_multistep(43, 3).is_ok());
    assert!(construct_multistep(43, 0).is_err());
    assert!(construct_multistep(49, 3).is_err());
    assert!(construct_multistep(0, 2).is_err());
    assert!(construct_multistep(1000, 1_000_000_000).is_err());
}

#[test]
fn oracle_agrees_with_formula() {
    for n in 1..=60 {
        let (w, p) = brute_force_min_weight(n, 1).unwrap();
        assert_eq!(w, phi(n).unwrap(), "n = {n}");
        assert_eq!(p.weight(), w);
        assert!(validate(&p, n));
    }
}

#[test]
fn constrained_minima() {
    for k in 2..=7u64 {
        for (n, w) in [(k * k, 2 * k + 1), (k * k + k, 2 * k + 2)] {
            let (oracle, witness) = brute_force_min_weight(n, 2).unwrap();
            assert_eq!(oracle, w, "n = {n}");
            assert!(witness.len() >= 2);
            let built = construct_multiblock_extremal(n).unwrap();
            assert!(validate(&built, n));
            assert!(built.len() >= 2);
            assert_eq!(built.weight(), w, "n = {n}");
        }
    }
    assert!(construct_multiblock_extremal(10).is_err());
}

/// Every staircase partition of `n`.
fn all_partitions(n: u64) -> Vec<StaircasePartition> {
    fn go(remaining: u64, below: u64, acc: &mut Vec<Step>, out: &mut Vec<StaircasePartition>) {
        if remaining == 0 {
            out.push(StaircasePartition::new(acc.clone()));
            return;
        }
        for r in 1..below {
            for s in 1..=remaining / r {
                acc.push(Step::new(r, s));
                go(remaining - r * s, r, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n + 1, &mut Vec::new(), &mut out);
    out
}

#[test]
fn bounding_rectangle() {
    for n in 1..=30 {
        for p in all_partitions(n) {
            assert!(validate(&p, n));
            let area = p.rows() * p.columns();
            assert!(area >= n);
            assert_eq!(area == n, p.len() == 1, "{p}");
        }
    }
    for n in 1..=60 {
        for min_t in 1..=2 {
            if let Ok((_, p)) = brute_force_min_weight(n, min_t) {
                assert_eq!(p.rows() * p.columns() == n, p.len() == 1);
            }
        }
    }
}

#[test]
fn validation_codes() {
    let cases: [(&[(u64, u64)], u64, Invalid); 4] = [
        (&[], 0, Invalid::Empty),
        (&[(3, 0)], 3, Invalid::NonPositive),
        (&[(2, 1), (2, 1)], 4, Invalid::NotDecreasing),
        (&[(6, 5), (2, 1)], 33, Invalid::WrongSum),
    ];
    for (pairs, n, code) in cases {
        assert_eq!(StaircasePartition::from_pairs(pairs).check(n), Err(code));
    }
}

#[test]
fn text_forms() {
    let record: PartitionRecord = "n=32 w=12 steps=6x5,2x1".parse().unwrap();
    assert!(record.check().is_ok());
    assert_eq!(record.to_string(), "n=32 w=12 steps=6x5,2x1");
    let wrong: PartitionRecord = "n=32 w=13 steps=6x5,2x1".parse().unwrap();
    assert!(wrong.check().is_err());
    for bad in ["n=32 w=12 steps=6x5, 2x1", "n=32  w=12 steps=6x5", "n=32 w=12", "steps=6x5", "n=+3 w=1 steps=1x3"] {
        assert!(bad.parse::<PartitionRecord>().is_err(), "{bad}");
    }
}

proptest! {
    #[test]
    fn minimal_is_valid_at_scale(n in 1u64..=1_000_000_000_000) {
        let p = construct_minimal(n).unwrap();
        prop_assert!(validate(&p, n));
        prop_assert_eq!(p.weight(), phi(n).unwrap());
    }

    #[test]
    fn text_round_trip(n in 1u64..=1_000_000) {
        let record = PartitionRecord::of(construct_minimal(n).unwrap());
        let parsed: PartitionRecord = record.to_string().parse().unwrap();
        prop_assert_eq!(parsed, record);
    }
}
