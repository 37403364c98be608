//! Minimum-size designs of staircase type.
//!
//! A staircase partition writes `n = r1*s1 + ... + rt*st` with
//! `r1 > r2 > ... > rt`. Laying the symbols `1..=n` out in the matching
//! staircase matrix and taking every row and every column as a block gives a
//! design in which each symbol is replicated exactly twice. The number of
//! blocks is the weight `r1 + s1 + ... + st`, and [`classify::phi`] gives its
//! minimum over all staircase partitions of `n`.
//!
//! Modules:
//!
//! * [`arith`]: pair sets, the extremal functions and the divisor function
//!   `eps`/`delta`.
//! * [`classify`]: the square intervals `I_k`/`J_k`, `phi` and the interval
//!   minimizers of `delta`.
//! * [`predicates`]: threshold characterizations of `delta`, record scans and
//!   the statement scanner that reports errata.
//! * [`partition`]: staircase partitions, minimal-weight constructions and the
//!   exhaustive search oracle.
//! * [`design`]: the staircase matrix, the induced block design, its
//!   verification and incidence export.
//! * [`cli`]: the command-line front end used by the `staircase` binary.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod design;
mod error;
pub mod partition;
pub mod predicates;

pub use error::{Error, Result};
