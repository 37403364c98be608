//! Command-line front end. [`run`] takes the argument vector and the two
//! output streams and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, no mismatches |
//! | 2 | usage, parse or domain error |
//! | 3 | verification failed, or the oracle disagrees with the formula |
//! | 4 | the scan found errata |

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{self, DeltaTable};
use crate::classify::phi;
use crate::design::{build_design, incidence_matrix, verify_design, StaircaseDesign};
use crate::partition::{
    brute_force_min_weight, construct_minimal, construct_multiblock_extremal, construct_multistep,
    PartitionRecord, StaircasePartition,
};
use crate::predicates::{scan_statement, MAX_SCAN_TO};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_ERRATA: i32 = 4;

/// Largest number of rows `table` prints in one call.
pub const TABLE_MAX_ROWS: u64 = MAX_SCAN_TO;

#[derive(Debug, Parser)]
#[command(name = "staircase", version, about = "Minimum-size staircase designs")]
struct Cli {
    /// Output format; only `tsv` exists.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Largest product r*s with r + s = n.
    Alpha { n: u64 },
    /// Smallest product r*s with r + s = n and r, s >= 1.
    Beta { n: u64 },
    /// Largest sum r + s with r*s = n.
    Gamma { n: u64 },
    /// Smallest sum r + s with r*s = n.
    Delta { n: u64 },
    /// Greatest divisor of n not exceeding its square root.
    Eps { n: u64 },
    /// Minimum number of blocks of a staircase design on n symbols.
    Phi { n: u64 },
    /// Tab-separated table of eps, cofactor, delta, quarter and phi.
    Table {
        from: u64,
        to: u64,
        /// Comma-separated subset of eps,cofactor,delta,quarter,phi.
        #[arg(value_delimiter = ',')]
        columns: Vec<Column>,
    },
    /// Prints a staircase partition of n.
    Partition {
        n: u64,
        /// Use the multi-step construction with j extra heights.
        #[arg(long, value_name = "J", conflicts_with = "force_multiblock")]
        multistep: Option<u64>,
        /// Use the minimum-weight partition with at least two steps.
        #[arg(long)]
        force_multiblock: bool,
        /// Also print the exhaustive-search minimum as `oracle_w=<w>`.
        #[arg(long)]
        oracle: bool,
    },
    /// Writes the design of a minimal partition of n, or of --steps.
    Design {
        #[arg(required_unless_present = "steps", conflicts_with = "steps")]
        n: Option<u64>,
        /// Steps such as `6x5,2x1`.
        #[arg(long)]
        steps: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the blocks-by-symbols incidence matrix instead.
        #[arg(long)]
        incidence: bool,
    },
    /// Checks a design file or a partition line.
    Verify { path: PathBuf },
    /// Compares a printed statement, list or table with recomputation.
    Scan {
        property: String,
        #[arg(long, requires = "to")]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Column {
    Eps,
    Cofactor,
    Delta,
    Quarter,
    Phi,
}

impl Column {
    const ALL: [Column; 5] = [
        Column::Eps,
        Column::Cofactor,
        Column::Delta,
        Column::Quarter,
        Column::Phi,
    ];

    fn name(self) -> &'static str {
        match self {
            Column::Eps => "eps",
            Column::Cofactor => "cofactor",
            Column::Delta => "delta",
            Column::Quarter => "quarter",
            Column::Phi => "phi",
        }
    }
}

/// Error or exit status from a subcommand.
enum Failure {
    Usage(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let Format::Tsv = cli.format;
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Alpha { n } => value(out, arith::alpha(n)),
        Command::Beta { n } => value(out, arith::beta(n)),
        Command::Gamma { n } => value(out, arith::gamma(n)),
        Command::Delta { n } => value(out, arith::delta(n)),
        Command::Eps { n } => value(out, arith::eps(n)),
        Command::Phi { n } => value(out, phi(n)),
        Command::Table { from, to, columns } => table(out, from, to, &columns),
        Command::Partition {
            n,
            multistep,
            force_multiblock,
            oracle,
        } => partition(out, n, multistep, force_multiblock, oracle),
        Command::Design {
            n,
            steps,
            out: path,
            incidence,
        } => design(out, n, steps.as_deref(), path, incidence),
        Command::Verify { path } => verify(out, &path),
        Command::Scan { property, from, to } => scan(out, &property, from, to),
    }
}

fn value<T: std::fmt::Display>(out: &mut dyn Write, v: Result<T>) -> Outcome {
    writeln!(out, "{}", v?)?;
    Ok(EXIT_OK)
}

fn table(out: &mut dyn Write, from: u64, to: u64, columns: &[Column]) -> Outcome {
    if from == 0 || from > to {
        return Err(Error::Precondition(format!("table range {from}..{to} must satisfy 1 <= from <= to")).into());
    }
    if to - from >= TABLE_MAX_ROWS {
        return Err(Error::TooLarge {
            func: "table",
            n: to - from + 1,
            ceiling: TABLE_MAX_ROWS,
        }
        .into());
    }
    arith::delta(to)?;
    let columns = if columns.is_empty() { &Column::ALL[..] } else { columns };
    // sieve when the range starts low enough for it to pay off
    let sieve = (to <= MAX_SCAN_TO).then(|| DeltaTable::new(to));
    let mut text = String::from("n");
    for c in columns {
        text.push('\t');
        text.push_str(c.name());
    }
    text.push('\n');
    for n in from..=to {
        let eps = match &sieve {
            Some(t) => t.eps(n),
            None => arith::eps(n)?,
        };
        text.push_str(&n.to_string());
        for c in columns {
            let v = match c {
                Column::Eps => eps,
                Column::Cofactor => n / eps,
                Column::Delta => eps + n / eps,
                Column::Quarter => n / 4,
                Column::Phi => phi(n)?,
            };
            text.push('\t');
            text.push_str(&v.to_string());
        }
        text.push('\n');
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn partition(out: &mut dyn Write, n: u64, multistep: Option<u64>, force_multiblock: bool, oracle: bool) -> Outcome {
    let p = match (multistep, force_multiblock) {
        (Some(j), _) => construct_multistep(n, j)?,
        (None, true) => construct_multiblock_extremal(n)?,
        (None, false) => construct_minimal(n)?,
    };
    let oracle_weight = if oracle {
        let min_t = if force_multiblock { 2 } else { 1 };
        Some(brute_force_min_weight(n, min_t)?.0)
    } else {
        None
    };
    let record = PartitionRecord::of(p);
    writeln!(out, "{record}")?;
    match oracle_weight {
        Some(w) => {
            writeln!(out, "oracle_w={w}")?;
            Ok(if w == record.w { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        None => Ok(EXIT_OK),
    }
}

fn design(out: &mut dyn Write, n: Option<u64>, steps: Option<&str>, path: Option<PathBuf>, incidence: bool) -> Outcome {
    let partition = match (n, steps) {
        (_, Some(spec)) => spec.parse::<StaircasePartition>()?,
        (Some(n), None) => construct_minimal(n)?,
        (None, None) => unreachable!("clap requires n or --steps"),
    };
    let design = build_design(&partition)?;
    let text = if incidence {
        incidence_matrix(&design)?.to_string()
    } else {
        design.to_string()
    };
    match path {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn verify(out: &mut dyn Write, path: &std::path::Path) -> Outcome {
    let text = fs::read_to_string(path)?;
    if text.starts_with("STAIRCASE-DESIGN") {
        let design: StaircaseDesign = text.parse()?;
        let report = verify_design(&design);
        write!(out, "{report}")?;
        return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED });
    }
    let line = text.strip_suffix('\n').unwrap_or(&text);
    let record: PartitionRecord = line.parse()?;
    match record.check() {
        Ok(()) => {
            writeln!(out, "partition\tpass")?;
            Ok(EXIT_OK)
        }
        Err(reason) => {
            writeln!(out, "partition\tFAIL\t{reason}")?;
            Ok(EXIT_VERIFY_FAILED)
        }
    }
}

fn scan(out: &mut dyn Write, property: &str, from: Option<u64>, to: Option<u64>) -> Outcome {
    let range = to.map(|to| (from.unwrap_or(1), to));
    let report = scan_statement(property, range)?;
    write!(out, "{report}")?;
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_ERRATA })
}
