//! The staircase matrix of a partition and the block design it induces.
//!
//! Column `c` of the matrix has height `r_b` when
//! `s_1 + ... + s_{b-1} < c <= s_1 + ... + s_b`, so the `s_1` tallest columns
//! sit leftmost and row widths grow from the top row down. Symbols `1..=n`
//! are numbered row-major from the top-left cell. Every row and every column
//! is a block, so each symbol is replicated exactly twice and the number of
//! blocks is the weight of the partition.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::partition::StaircasePartition;
use crate::{Error, Result};

/// Largest number of symbols [`build_matrix`] materializes.
pub const DESIGN_MAX_N: u64 = 10_000_000;

/// Largest `blocks * symbols` that [`incidence_matrix`] materializes.
pub const INCIDENCE_MAX_CELLS: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseMatrix {
    partition: StaircasePartition,
    /// Symbols of each row, top row first; row `i` occupies columns
    /// `1..=rows[i].len()`.
    rows: Vec<Vec<u64>>,
    heights: Vec<u64>,
}

impl StaircaseMatrix {
    pub fn partition(&self) -> &StaircasePartition {
        &self.partition
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.heights.len()
    }

    /// Width of row `i` (1-based, top row is 1).
    pub fn row_width(&self, i: usize) -> usize {
        self.rows[i - 1].len()
    }

    /// Height of column `c` (1-based).
    pub fn column_height(&self, c: usize) -> u64 {
        self.heights[c - 1]
    }

    /// Symbol at row `i`, column `c` (both 1-based), if the cell is part of
    /// the staircase.
    pub fn symbol(&self, i: usize, c: usize) -> Option<u64> {
        self.rows.get(i.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    fn column(&self, c: usize) -> Vec<u64> {
        self.rows.iter().filter_map(|row| row.get(c).copied()).collect()
    }
}

/// Lays out the staircase matrix of a valid partition.
pub fn build_matrix(partition: &StaircasePartition) -> Result<StaircaseMatrix> {
    partition
        .check_shape()
        .map_err(|reason| Error::Precondition(format!("invalid partition {partition}: {reason}")))?;
    let n = partition.sum().unwrap_or(u64::MAX);
    if n > DESIGN_MAX_N {
        return Err(Error::TooLarge {
            func: "build_matrix",
            n,
            ceiling: DESIGN_MAX_N,
        });
    }
    let r1 = partition.rows();
    let heights: Vec<u64> = partition
        .steps()
        .iter()
        .flat_map(|step| std::iter::repeat_n(step.r, step.s as usize))
        .collect();
    let mut next = 1u64;
    let rows = (1..=r1)
        .map(|i| {
            // Heights are non-increasing, so the occupied columns are a prefix.
            let width = heights.iter().take_while(|&&h| h > r1 - i).count() as u64;
            let row: Vec<u64> = (next..next + width).collect();
            next += width;
            row
        })
        .collect();
    Ok(StaircaseMatrix {
        partition: partition.clone(),
        rows,
        heights,
    })
}

/// Row blocks `R1..` and column blocks `C1..` over the symbols `1..=n`,
/// together with the step heights `r` and multiplicities `s` they claim to
/// come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseDesign {
    pub n: u64,
    pub r: Vec<u64>,
    pub s: Vec<u64>,
    pub row_blocks: Vec<Vec<u64>>,
    pub column_blocks: Vec<Vec<u64>>,
}

impl StaircaseDesign {
    pub fn block_count(&self) -> usize {
        self.row_blocks.len() + self.column_blocks.len()
    }

    /// `(label, symbols)` for every block, rows first.
    pub fn blocks(&self) -> impl Iterator<Item = (String, &[u64])> {
        let rows = self
            .row_blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (format!("R{}", i + 1), b.as_slice()));
        let cols = self
            .column_blocks
            .iter()
            .enumerate()
            .map(|(j, b)| (format!("C{}", j + 1), b.as_slice()));
        rows.chain(cols)
    }
}

pub fn build_design(partition: &StaircasePartition) -> Result<StaircaseDesign> {
    let matrix = build_matrix(partition)?;
    Ok(design_of(&matrix))
}

pub fn design_of(matrix: &StaircaseMatrix) -> StaircaseDesign {
    StaircaseDesign {
        n: matrix.cell_count(),
        r: matrix.partition.rs().collect(),
        s: matrix.partition.ss().collect(),
        row_blocks: matrix.rows.clone(),
        column_blocks: (0..matrix.column_count()).map(|c| matrix.column(c)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DesignCheck {
    /// Each symbol lies in exactly one row block and one column block.
    Replication,
    /// A row block and a column block share at most one symbol.
    RowColumnIntersection,
    /// Row blocks are pairwise disjoint, as are column blocks.
    ParallelClasses,
    /// Number of blocks is `r1 + s1 + ... + st`.
    BlockCount,
    /// Column sizes are `r_b`, each repeated `s_b` times.
    ColumnSizes,
}

impl DesignCheck {
    pub const ALL: [DesignCheck; 5] = [
        DesignCheck::Replication,
        DesignCheck::RowColumnIntersection,
        DesignCheck::ParallelClasses,
        DesignCheck::BlockCount,
        DesignCheck::ColumnSizes,
    ];

    /// 1-based position in [`DesignCheck::ALL`].
    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            DesignCheck::Replication => "replication",
            DesignCheck::RowColumnIntersection => "row_column_intersection",
            DesignCheck::ParallelClasses => "parallel_classes",
            DesignCheck::BlockCount => "block_count",
            DesignCheck::ColumnSizes => "column_sizes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: DesignCheck,
    pub passed: bool,
    /// First offending item when the check fails.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl DesignReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, check: DesignCheck) -> &CheckOutcome {
        self.outcomes.iter().find(|o| o.check == check).unwrap()
    }

    pub fn failed(&self) -> impl Iterator<Item = DesignCheck> + '_ {
        self.outcomes.iter().filter(|o| !o.passed).map(|o| o.check)
    }
}

/// One line per check: `check<i>\t<name>\tpass` or `...\tFAIL\t<detail>`.
impl fmt::Display for DesignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            write!(f, "check{}\t{}\t", o.check.number(), o.check.name())?;
            match (&o.passed, &o.detail) {
                (true, _) => writeln!(f, "pass")?,
                (false, Some(d)) => writeln!(f, "FAIL\t{d}")?,
                (false, None) => writeln!(f, "FAIL")?,
            }
        }
        Ok(())
    }
}

fn outcome(check: DesignCheck, failure: Option<String>) -> CheckOutcome {
    CheckOutcome {
        check,
        passed: failure.is_none(),
        detail: failure,
    }
}

/// Runs the five design checks. Failures are reported, never repaired.
pub fn verify_design(design: &StaircaseDesign) -> DesignReport {
    DesignReport {
        outcomes: vec![
            outcome(DesignCheck::Replication, replication_failure(design)),
            outcome(DesignCheck::RowColumnIntersection, intersection_failure(design)),
            outcome(DesignCheck::ParallelClasses, parallel_failure(design)),
            outcome(DesignCheck::BlockCount, block_count_failure(design)),
            outcome(DesignCheck::ColumnSizes, column_size_failure(design)),
        ],
    }
}

fn occurrences(blocks: &[Vec<u64>]) -> HashMap<u64, Vec<usize>> {
    let mut seen: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            seen.entry(v).or_default().push(i);
        }
    }
    seen
}

fn replication_failure(d: &StaircaseDesign) -> Option<String> {
    let rows = occurrences(&d.row_blocks);
    let cols = occurrences(&d.column_blocks);
    let mut stray: Vec<u64> = rows
        .keys()
        .chain(cols.keys())
        .copied()
        .filter(|&v| v == 0 || v > d.n)
        .collect();
    stray.sort_unstable();
    if let Some(v) = stray.first() {
        return Some(format!("symbol {v} outside 1..={}", d.n));
    }
    for v in 1..=d.n {
        let in_rows = rows.get(&v).map_or(0, Vec::len);
        let in_cols = cols.get(&v).map_or(0, Vec::len);
        if in_rows != 1 || in_cols != 1 {
            return Some(format!(
                "symbol {v} in {in_rows} row blocks and {in_cols} column blocks"
            ));
        }
    }
    None
}

fn intersection_failure(d: &StaircaseDesign) -> Option<String> {
    let rows = occurrences(&d.row_blocks);
    for (j, block) in d.column_blocks.iter().enumerate() {
        let mut per_row: HashMap<usize, usize> = HashMap::new();
        for v in block {
            for &i in rows.get(v).into_iter().flatten() {
                *per_row.entry(i).or_default() += 1;
            }
        }
        let mut crowded: Vec<_> = per_row.into_iter().filter(|&(_, c)| c > 1).collect();
        crowded.sort_unstable();
        if let Some((i, c)) = crowded.first() {
            return Some(format!("R{} and C{} share {c} symbols", i + 1, j + 1));
        }
    }
    None
}

fn parallel_failure(d: &StaircaseDesign) -> Option<String> {
    for (kind, blocks) in [("R", &d.row_blocks), ("C", &d.column_blocks)] {
        let mut shared: Vec<(u64, Vec<usize>)> = occurrences(blocks)
            .into_iter()
            .filter_map(|(v, mut at)| {
                at.sort_unstable();
                at.dedup();
                (at.len() > 1).then_some((v, at))
            })
            .collect();
        shared.sort_unstable();
        if let Some((v, at)) = shared.first() {
            return Some(format!(
                "symbol {v} in both {kind}{} and {kind}{}",
                at[0] + 1,
                at[1] + 1
            ));
        }
    }
    None
}

fn block_count_failure(d: &StaircaseDesign) -> Option<String> {
    let expected = d.s.iter().fold(d.r.first().copied().unwrap_or(0), |acc, &s| acc.saturating_add(s));
    let actual = d.block_count() as u64;
    (actual != expected).then(|| format!("{actual} blocks, expected r1 + sum(s) = {expected}"))
}

fn column_size_failure(d: &StaircaseDesign) -> Option<String> {
    if d.r.len() != d.s.len() {
        return Some(format!("{} heights but {} multiplicities", d.r.len(), d.s.len()));
    }
    let columns = d.s.iter().try_fold(0u64, |acc, &s| acc.checked_add(s));
    if columns != Some(d.column_blocks.len() as u64) {
        return Some(format!(
            "{} column blocks, expected sum(s) columns",
            d.column_blocks.len()
        ));
    }
    let mut expected: Vec<u64> = d
        .r
        .iter()
        .zip(&d.s)
        .flat_map(|(&r, &s)| std::iter::repeat_n(r, s as usize))
        .collect();
    let mut actual: Vec<u64> = d.column_blocks.iter().map(|b| b.len() as u64).collect();
    expected.sort_unstable();
    actual.sort_unstable();
    (expected != actual).then(|| {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        format!("column sizes {{{}}}, expected {{{}}}", list(&actual), list(&expected))
    })
}

/// Blocks-by-symbols 0/1 matrix, rows ordered `R1..Rr1` then `C1..Cm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    symbols: usize,
    /// Row-major, `blocks * symbols` entries.
    cells: Vec<bool>,
}

impl IncidenceMatrix {
    pub fn blocks(&self) -> usize {
        self.cells.len().checked_div(self.symbols).unwrap_or(0)
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    /// Entry for block `b` and symbol `v`, both 0-based.
    pub fn get(&self, b: usize, v: usize) -> bool {
        self.cells[b * self.symbols + v]
    }

    pub fn row(&self, b: usize) -> &[bool] {
        &self.cells[b * self.symbols..(b + 1) * self.symbols]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.blocks())
            .map(|b| self.row(b).iter().filter(|&&x| x).count())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.symbols];
        for b in 0..self.blocks() {
            for (v, &x) in self.row(b).iter().enumerate() {
                sums[v] += usize::from(x);
            }
        }
        sums
    }
}

/// `# blocks=<B> symbols=<n>` then one line of `0`/`1` per block.
impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# blocks={} symbols={}", self.blocks(), self.symbols)?;
        let mut line = String::with_capacity(self.symbols);
        for b in 0..self.blocks() {
            line.clear();
            line.extend(self.row(b).iter().map(|&x| if x { '1' } else { '0' }));
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// The incidence matrix of a design that passes [`verify_design`].
pub fn incidence_matrix(design: &StaircaseDesign) -> Result<IncidenceMatrix> {
    let report = verify_design(design);
    if let Some(check) = report.failed().next() {
        return Err(Error::Precondition(format!(
            "design fails check {} ({})",
            check.number(),
            check.name()
        )));
    }
    let symbols = design.n as usize;
    let cells = design.block_count() as u64 * design.n;
    if cells > INCIDENCE_MAX_CELLS {
        return Err(Error::TooLarge {
            func: "incidence_matrix",
            n: cells,
            ceiling: INCIDENCE_MAX_CELLS,
        });
    }
    let mut matrix = IncidenceMatrix {
        symbols,
        cells: vec![false; cells as usize],
    };
    for (b, (_, block)) in design.blocks().enumerate() {
        for &v in block {
            matrix.cells[b * symbols + (v as usize - 1)] = true;
        }
    }
    Ok(matrix)
}

const MAGIC: &str = "STAIRCASE-DESIGN v1";

fn join(values: &[u64], sep: &str) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

/// The `STAIRCASE-DESIGN v1` file form, LF-terminated lines.
impl fmt::Display for StaircaseDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{MAGIC}")?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "t={}", self.r.len())?;
        writeln!(f, "r={}", join(&self.r, ","))?;
        writeln!(f, "s={}", join(&self.s, ","))?;
        for (label, block) in self.blocks() {
            if block.is_empty() {
                writeln!(f, "{label}:")?;
            } else {
                writeln!(f, "{label}: {}", join(block, " "))?;
            }
        }
        Ok(())
    }
}

fn parse_number(text: &str, line: usize) -> Result<u64> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("line {line}: `{text}` is not an integer")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("line {line}: `{text}` out of range")))
}

fn header_value<'a>(line: Option<&'a str>, key: &str, number: usize) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|l| l.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("line {number}: expected `{key}=`")))
}

fn number_list(text: &str, line: usize) -> Result<Vec<u64>> {
    text.split(',').map(|x| parse_number(x, line)).collect()
}

/// Parses the design file form. Symbol content is not validated here; that
/// is what [`verify_design`] is for.
impl FromStr for StaircaseDesign {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let body = text
            .strip_suffix('\n')
            .ok_or_else(|| Error::Parse("file must end with a newline".into()))?;
        if body.contains('\r') {
            return Err(Error::Parse("CR characters are not allowed".into()));
        }
        let mut lines = body.split('\n');
        if lines.next() != Some(MAGIC) {
            return Err(Error::Parse(format!("line 1: expected `{MAGIC}`")));
        }
        let n = parse_number(header_value(lines.next(), "n", 2)?, 2)?;
        let t = parse_number(header_value(lines.next(), "t", 3)?, 3)?;
        let r = number_list(header_value(lines.next(), "r", 4)?, 4)?;
        let s = number_list(header_value(lines.next(), "s", 5)?, 5)?;
        if r.len() as u64 != t || s.len() as u64 != t {
            return Err(Error::Parse(format!(
                "t={t} but r has {} and s has {} entries",
                r.len(),
                s.len()
            )));
        }
        let mut row_blocks = Vec::new();
        let mut column_blocks: Vec<Vec<u64>> = Vec::new();
        for (offset, line) in lines.enumerate() {
            let number = offset + 6;
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {number}: expected `<label>: ...`")))?;
            let (kind, index) = label.split_at(label.len().min(1));
            let index = parse_number(index, number)?;
            let target = match kind {
                "R" if column_blocks.is_empty() => &mut row_blocks,
                "R" => {
                    return Err(Error::Parse(format!(
                        "line {number}: row block after column blocks"
                    )))
                }
                "C" => &mut column_blocks,
                _ => return Err(Error::Parse(format!("line {number}: unknown label `{label}`"))),
            };
            if index != target.len() as u64 + 1 {
                return Err(Error::Parse(format!(
                    "line {number}: expected {kind}{}, got {label}",
                    target.len() + 1
                )));
            }
            let symbols = match rest {
                "" => Vec::new(),
                _ => rest
                    .strip_prefix(' ')
                    .ok_or_else(|| Error::Parse(format!("line {number}: expected a space after `:`")))?
                    .split(' ')
                    .map(|v| parse_number(v, number))
                    .collect::<Result<Vec<_>>>()?,
            };
            if symbols.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Parse(format!("line {number}: symbols must be ascending")));
            }
            target.push(symbols);
        }
        Ok(Self {
            n,
            r,
            s,
            row_blocks,
            column_blocks,
        })
    }
}
