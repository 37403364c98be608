//! Values and lists as printed, kept verbatim for the statement scanner.
//!
//! Nothing here is used to answer a query; the scanner compares these
//! against recomputation and reports the differences.

/// Rows `(n, eps, n / eps, delta, floor(n / 4))` for `n = 1..=111`.
///
/// The `delta` entry for 92 is printed as 24; `eps(92) + 92 / eps(92) = 27`.
pub const TABLE_3_6: [(u64, u64, u64, u64, u64); 111] = [
    (1, 1, 1, 2, 0),
    (2, 1, 2, 3, 0),
    (3, 1, 3, 4, 0),
    (4, 2, 2, 4, 1),
    (5, 1, 5, 6, 1),
    (6, 2, 3, 5, 1),
    (7, 1, 7, 8, 1),
    (8, 2, 4, 6, 2),
    (9, 3, 3, 6, 2),
    (10, 2, 5, 7, 2),
    (11, 1, 11, 12, 2),
    (12, 3, 4, 7, 3),
    (13, 1, 13, 14, 3),
    (14, 2, 7, 9, 3),
    (15, 3, 5, 8, 3),
    (16, 4, 4, 8, 4),
    (17, 1, 17, 18, 4),
    (18, 3, 6, 9, 4),
    (19, 1, 19, 20, 4),
    (20, 4, 5, 9, 5),
    (21, 3, 7, 10, 5),
    (22, 2, 11, 13, 5),
    (23, 1, 23, 24, 5),
    (24, 4, 6, 10, 6),
    (25, 5, 5, 10, 6),
    (26, 2, 13, 15, 6),
    (27, 3, 9, 12, 6),
    (28, 4, 7, 11, 7),
    (29, 1, 29, 30, 7),
    (30, 5, 6, 11, 7),
    (31, 1, 31, 32, 7),
    (32, 4, 8, 12, 8),
    (33, 3, 11, 14, 8),
    (34, 2, 17, 19, 8),
    (35, 5, 7, 12, 8),
    (36, 6, 6, 12, 9),
    (37, 1, 37, 38, 9),
    (38, 2, 19, 21, 9),
    (39, 3, 13, 16, 9),
    (40, 5, 8, 13, 10),
    (41, 1, 41, 42, 10),
    (42, 6, 7, 13, 10),
    (43, 1, 43, 44, 10),
    (44, 4, 11, 15, 11),
    (45, 5, 9, 14, 11),
    (46, 2, 23, 25, 11),
    (47, 1, 47, 48, 11),
    (48, 6, 8, 14, 12),
    (49, 7, 7, 14, 12),
    (50, 5, 10, 15, 12),
    (51, 3, 17, 20, 12),
    (52, 4, 13, 17, 13),
    (53, 1, 53, 54, 13),
    (54, 6, 9, 15, 13),
    (55, 5, 11, 16, 13),
    (56, 7, 8, 15, 14),
    (57, 3, 19, 22, 14),
    (58, 2, 29, 31, 14),
    (59, 1, 59, 60, 14),
    (60, 6, 10, 16, 15),
    (61, 1, 61, 62, 15),
    (62, 2, 31, 33, 15),
    (63, 7, 9, 16, 15),
    (64, 8, 8, 16, 16),
    (65, 5, 13, 18, 16),
    (66, 6, 11, 17, 16),
    (67, 1, 67, 68, 16),
    (68, 4, 17, 21, 17),
    (69, 3, 23, 26, 17),
    (70, 7, 10, 17, 17),
    (71, 1, 71, 72, 17),
    (72, 8, 9, 17, 18),
    (73, 1, 73, 74, 18),
    (74, 2, 37, 39, 18),
    (75, 5, 15, 20, 18),
    (76, 4, 19, 23, 19),
    (77, 7, 11, 18, 19),
    (78, 6, 13, 19, 19),
    (79, 1, 79, 80, 19),
    (80, 8, 10, 18, 20),
    (81, 9, 9, 18, 20),
    (82, 2, 41, 43, 20),
    (83, 1, 83, 84, 20),
    (84, 7, 12, 19, 21),
    (85, 5, 17, 22, 21),
    (86, 2, 43, 45, 21),
    (87, 3, 29, 32, 21),
    (88, 8, 11, 19, 22),
    (89, 1, 89, 90, 22),
    (90, 9, 10, 19, 22),
    (91, 7, 13, 20, 22),
    (92, 4, 23, 24, 23),
    (93, 3, 31, 34, 23),
    (94, 2, 47, 49, 23),
    (95, 5, 19, 24, 23),
    (96, 8, 12, 20, 24),
    (97, 1, 97, 98, 24),
    (98, 7, 14, 21, 24),
    (99, 9, 11, 20, 24),
    (100, 10, 10, 20, 25),
    (101, 1, 101, 102, 25),
    (102, 6, 17, 23, 25),
    (103, 1, 103, 104, 25),
    (104, 8, 13, 21, 26),
    (105, 7, 15, 22, 26),
    (106, 2, 53, 55, 26),
    (107, 1, 107, 108, 26),
    (108, 9, 12, 21, 27),
    (109, 1, 109, 110, 27),
    (110, 10, 11, 21, 27),
    (111, 3, 37, 40, 27),];

/// The `n <= 111` with `4 * delta(n) < n`.
pub const LEMMA_3_7_BELOW: [u64; 19] = [
    70, 72, 77, 78, 80, 81, 84, 88, 90, 91, 96, 98, 99, 100, 102, 104, 105, 108, 110,
];

/// The `n <= 111` with `4 * delta(n) = n`.
pub const LEMMA_3_7_EQUAL: [u64; 1] = [64];

/// Exceptions to `4 * delta(n) < n` not of the form `p, 2p, 3p, 4p`.
pub const PROP_3_10_EXCEPTIONS: [u64; 27] = [
    1, 16, 18, 24, 25, 27, 30, 32, 35, 36, 40, 42, 45, 48, 49, 50, 54, 55, 56, 60, 63, 64, 65, 66,
    75, 85, 95,
];

/// Exceptions to `4 * delta(n) < n + 12` not of the form `p, 2p, 3p, 4p`
/// with `p` odd. 32 is missing from the printed list.
pub const PROP_4_1_EXCEPTIONS: [u64; 12] = [4, 6, 8, 16, 18, 24, 25, 27, 30, 35, 36, 40];

/// The `n` with `4 * delta(n) = n + 12`.
pub const PROP_4_1_EQUAL: [u64; 3] = [4, 36, 40];

/// Minimizers of `delta` on `I_k` for `k = 1..=10`.
pub const EXAMPLE_6_4: [&[u64]; 10] = [
    &[1],
    &[3, 4],
    &[8, 9],
    &[15, 16],
    &[21, 24, 25],
    &[32, 35, 36],
    &[45, 48, 49],
    &[60, 63, 64],
    &[77, 80, 81],
    &[91, 96, 99, 100],
];

/// Minimizers of `delta` on `J_k` for `k = 1..=10`. The row for `k = 8`
/// prints 60, which lies in `I_8`; the formula gives 66.
pub const EXAMPLE_6_8: [&[u64]; 10] = [
    &[2],
    &[6],
    &[10, 12],
    &[18, 20],
    &[28, 30],
    &[40, 42],
    &[50, 54, 56],
    &[60, 70, 72],
    &[84, 88, 90],
    &[104, 108, 110],
];

/// `(n, phi(n))` as printed. Two entries disagree with the formula:
/// `phi(1) = 2` and `phi(1111111) = 2109`.
pub const TABLE_8_3: [(u64, u64); 25] = [
    (1, 1),
    (2, 3),
    (3, 4),
    (4, 4),
    (5, 5),
    (6, 5),
    (7, 6),
    (8, 6),
    (9, 6),
    (10, 7),
    (11, 7),
    (12, 7),
    (13, 8),
    (14, 8),
    (15, 8),
    (16, 8),
    (17, 9),
    (18, 9),
    (19, 9),
    (20, 9),
    (100, 20),
    (1000, 64),
    (1_000_000, 2000),
    (1_001_000, 2001),
    (1_111_111, 2110),
];
