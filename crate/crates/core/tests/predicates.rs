use staircase::arith::DeltaTable;
use staircase::predicates::{
    below_quarter_characterized, below_quarter_direct, half_ladder_class, properties, quarter_plus_three_characterized,
    quarter_plus_three_direct, scan_statement, LadderClass, LADDER, LADDER_XI_AS_PRINTED,
};

const LIMIT: u64 = 100_000;

#[test]
fn quarter_characterization() {
    let table = DeltaTable::new(LIMIT);
    let mut equal = Vec::new();
    for n in 1..=LIMIT {
        let d = table.delta(n);
        assert_eq!(below_quarter_direct(n).unwrap(), 4 * d < n);
        assert_eq!(below_quarter_characterized(n).unwrap(), 4 * d < n, "n = {n}");
        if 4 * d == n {
            equal.push(n);
        }
        if table.eps(n) >= 8 {
            assert!(4 * d <= n, "n = {n}");
            assert!(n == 64 || 4 * d < n, "n = {n}");
        }
    }
    assert_eq!(equal, [64]);
}

#[test]
fn quarter_plus_three_characterization() {
    let table = DeltaTable::new(LIMIT);
    let mut equal = Vec::new();
    for n in 1..=LIMIT {
        let d = table.delta(n);
        assert_eq!(quarter_plus_three_direct(n).unwrap(), 4 * d < n + 12);
        assert_eq!(quarter_plus_three_characterized(n).unwrap(), 4 * d < n + 12, "n = {n}");
        if 4 * d == n + 12 {
            equal.push(n);
        }
    }
    assert_eq!(equal, [4, 36, 40]);
}

#[test]
fn ladder_holds_everywhere() {
    let table = DeltaTable::new(LIMIT);
    for n in 1..=LIMIT {
        let d = table.delta(n);
        for statement in &LADDER {
            assert_eq!(statement.characterized(n), statement.holds(n, d), "{} at n = {n}", statement.label);
        }
    }
}

#[test]
fn ladder_equality_sets() {
    let table = DeltaTable::new(LIMIT);
    let mut by_offset: std::collections::BTreeMap<i64, Vec<u64>> = Default::default();
    for n in 1..=LIMIT {
        let c = 2 * table.delta(n) as i64 - n as i64;
        if (-4..=3).contains(&c) {
            by_offset.entry(c).or_default().push(n);
        }
        match half_ladder_class(n).unwrap() {
            LadderClass::Exact(x) => assert_eq!(i64::from(x), c),
            LadderClass::Outside => assert!(c.abs() > 4),
        }
    }
    let expected: [(i64, &[u64]); 8] = [
        (3, &[1, 9]),
        (2, &[12]),
        (1, &[15]),
        (0, &[16, 18]),
        (-1, &[21]),
        (-2, &[20]),
        (-3, &[27]),
        (-4, &[24]),
    ];
    for (c, ns) in expected {
        assert_eq!(by_offset[&c], ns, "offset {c}");
    }
    let plus_four: Vec<u64> = (1..=LIMIT).filter(|&n| 2 * table.delta(n) == n + 4).collect();
    let expected: Vec<u64> = (1..=LIMIT)
        .filter(|&n| matches!(n, 2 | 4 | 6 | 8 | 10 | 14) || (n % 2 == 0 && n >= 22 && staircase::arith::is_prime(n / 2)))
        .collect();
    assert_eq!(plus_four, expected);
}

#[test]
fn printed_reading_of_xi_fails() {
    let table = DeltaTable::new(1000);
    let failures: Vec<u64> = (1..=1000)
        .filter(|&n| LADDER_XI_AS_PRINTED.characterized(n) != LADDER_XI_AS_PRINTED.holds(n, table.delta(n)))
        .collect();
    assert!(failures.contains(&21));
    assert!(failures.contains(&1));
}

#[test]
fn observations_scan_clean() {
    for p in properties().iter().filter(|p| p.id.starts_with("obs_3_9_")) {
        let report = scan_statement(p.id, None).unwrap();
        assert!(report.is_clean(), "{report}");
        assert!(report.checked > 0, "{}", p.id);
    }
}

#[test]
fn known_errata() {
    let cases: [(&str, Option<(u64, u64)>, &[u64]); 6] = [
        ("table_3_6_delta", None, &[92]),
        ("prop_4_1", None, &[32]),
        ("prop_4_1_b", None, &[32]),
        ("example_6_8", None, &[60, 66]),
        ("table_8_3_phi", None, &[1, 1_111_111]),
        ("prop_3_10", None, &[]),
    ];
    for (id, range, ns) in cases {
        assert_eq!(scan_statement(id, range).unwrap().mismatch_ns(), ns, "{id}");
    }
}

#[test]
fn scans_are_deterministic() {
    let a = scan_statement("lemma_4_2_xi_as_printed", Some((1, 5000))).unwrap();
    let b = scan_statement("lemma_4_2_xi_as_printed", Some((1, 5000))).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.matches + a.mismatches.len() as u64, a.checked);
}
