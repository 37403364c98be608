//! C ABI over the `staircase` library.
//!
//! Conventions:
//!
//! * Every fallible function returns [`StcStatus`]; results go through out
//!   pointers, which are written only on success.
//! * After a non-`Ok` status, [`stc_last_error`] copies a message describing
//!   the most recent failure on the calling thread.
//! * Partitions, designs and scan reports are opaque handles. Each
//!   constructor has a matching `*_free`; passing null to `*_free` is a no-op.
//! * Text is returned by copying into a caller buffer. The required size,
//!   terminating NUL included, is stored in `*needed` in every case; if
//!   `capacity` is too small the buffer is left untouched and
//!   `STC_STATUS_BUFFER_TOO_SMALL` is returned. Pass a null buffer with zero
//!   capacity to query the size.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use staircase::arith;
use staircase::classify::phi;
use staircase::design::{build_design, incidence_matrix, verify_design, StaircaseDesign};
use staircase::partition::{
    brute_force_min_weight, construct_minimal, construct_multiblock_extremal, construct_multistep,
    validate, PartitionRecord, StaircasePartition,
};
use staircase::predicates::{scan_statement, ScanReport};
use staircase::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StcStatus {
    Ok = 0,
    /// Argument outside the function's domain.
    Domain = 1,
    /// Argument above the supported ceiling.
    TooLarge = 2,
    /// Construction requested outside its parameters.
    Precondition = 3,
    /// No partition satisfies the constraints.
    NoPartition = 4,
    UnknownProperty = 5,
    Parse = 6,
    NullPointer = 7,
    /// A string argument is not valid UTF-8.
    InvalidUtf8 = 8,
    BufferTooSmall = 9,
    IndexOutOfRange = 10,
    /// A Rust panic was caught at the boundary.
    Internal = 99,
}

impl From<&Error> for StcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. } => StcStatus::Domain,
            Error::TooLarge { .. } => StcStatus::TooLarge,
            Error::Precondition(_) => StcStatus::Precondition,
            Error::NoPartition { .. } => StcStatus::NoPartition,
            Error::UnknownProperty(_) => StcStatus::UnknownProperty,
            Error::Parse(_) => StcStatus::Parse,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: StcStatus, message: impl Into<String>) -> StcStatus {
    LAST_ERROR.with(|cell| *cell.borrow_mut() = message.into());
    status
}

fn fail_with(e: Error) -> StcStatus {
    fail(StcStatus::from(&e), e.to_string())
}

/// Runs `body`, turning a panic into `Internal`.
fn guard(body: impl FnOnce() -> StcStatus) -> StcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(StcStatus::Internal, "internal error"),
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(StcStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

/// # Safety
/// `ptr` is null or a NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, StcStatus> {
    if ptr.is_null() {
        return Err(fail(StcStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(StcStatus::InvalidUtf8, "string argument is not UTF-8"))
}

/// Copies `text` without touching the last error.
///
/// # Safety
/// `buf` is null or valid for `capacity` bytes; `needed` is valid or null.
unsafe fn copy_text(text: &str, buf: *mut c_char, capacity: usize, needed: *mut usize) -> StcStatus {
    let size = text.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || capacity < size {
        return StcStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    StcStatus::Ok
}

/// # Safety
/// As for [`copy_text`].
unsafe fn write_text(text: &str, buf: *mut c_char, capacity: usize, needed: *mut usize) -> StcStatus {
    match copy_text(text, buf, capacity, needed) {
        StcStatus::BufferTooSmall => fail(
            StcStatus::BufferTooSmall,
            format!("buffer of {capacity} bytes, {} needed", text.len() + 1),
        ),
        status => status,
    }
}

/// Copies the last error message of this thread. Calling it does not
/// change the stored message.
///
/// # Safety
/// See the crate documentation for the buffer convention.
#[no_mangle]
pub unsafe extern "C" fn stc_last_error(buf: *mut c_char, capacity: usize, needed: *mut usize) -> StcStatus {
    let message = LAST_ERROR.with(|cell| cell.borrow().clone());
    copy_text(&message, buf, capacity, needed)
}

/// Static name of a status code, e.g. `"STC_STATUS_DOMAIN"`.
#[no_mangle]
pub extern "C" fn stc_status_name(status: StcStatus) -> *const c_char {
    let name: &'static CStr = match status {
        StcStatus::Ok => c"STC_STATUS_OK",
        StcStatus::Domain => c"STC_STATUS_DOMAIN",
        StcStatus::TooLarge => c"STC_STATUS_TOO_LARGE",
        StcStatus::Precondition => c"STC_STATUS_PRECONDITION",
        StcStatus::NoPartition => c"STC_STATUS_NO_PARTITION",
        StcStatus::UnknownProperty => c"STC_STATUS_UNKNOWN_PROPERTY",
        StcStatus::Parse => c"STC_STATUS_PARSE",
        StcStatus::NullPointer => c"STC_STATUS_NULL_POINTER",
        StcStatus::InvalidUtf8 => c"STC_STATUS_INVALID_UTF8",
        StcStatus::BufferTooSmall => c"STC_STATUS_BUFFER_TOO_SMALL",
        StcStatus::IndexOutOfRange => c"STC_STATUS_INDEX_OUT_OF_RANGE",
        StcStatus::Internal => c"STC_STATUS_INTERNAL",
    };
    name.as_ptr()
}

unsafe fn value(out: *mut u64, f: impl FnOnce() -> staircase::Result<u64>) -> StcStatus {
    non_null!(out);
    guard(|| match f() {
        Ok(v) => {
            *out = v;
            StcStatus::Ok
        }
        Err(e) => fail_with(e),
    })
}

/// Largest product `r*s` with `r + s = n`, split into 64-bit halves.
///
/// # Safety
/// `hi` and `lo` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_alpha(n: u64, hi: *mut u64, lo: *mut u64) -> StcStatus {
    non_null!(hi, lo);
    guard(|| match arith::alpha(n) {
        Ok(v) => {
            *hi = (v >> 64) as u64;
            *lo = v as u64;
            StcStatus::Ok
        }
        Err(e) => fail_with(e),
    })
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_beta(n: u64, out: *mut u64) -> StcStatus {
    value(out, || arith::beta(n))
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_gamma(n: u64, out: *mut u64) -> StcStatus {
    value(out, || arith::gamma(n))
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_delta(n: u64, out: *mut u64) -> StcStatus {
    value(out, || arith::delta(n))
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_eps(n: u64, out: *mut u64) -> StcStatus {
    value(out, || arith::eps(n))
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_phi(n: u64, out: *mut u64) -> StcStatus {
    value(out, || phi(n))
}

/// Opaque staircase partition.
pub struct StcPartition(StaircasePartition);

/// Opaque staircase design.
pub struct StcDesign(StaircaseDesign);

/// Opaque scan report.
pub struct StcScanReport(ScanReport);

unsafe fn emit<T>(out: *mut *mut T, f: impl FnOnce() -> staircase::Result<T>) -> StcStatus {
    non_null!(out);
    guard(|| match f() {
        Ok(v) => {
            *out = Box::into_raw(Box::new(v));
            StcStatus::Ok
        }
        Err(e) => fail_with(e),
    })
}

/// Minimum-weight partition of `n`.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_minimal(n: u64, out: *mut *mut StcPartition) -> StcStatus {
    emit(out, || construct_minimal(n).map(StcPartition))
}

/// Multi-step partition of `n` with `j` extra heights.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_multistep(n: u64, j: u64, out: *mut *mut StcPartition) -> StcStatus {
    emit(out, || construct_multistep(n, j).map(StcPartition))
}

/// Minimum-weight partition with at least two steps, for squares and pronic
/// numbers.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_multiblock(n: u64, out: *mut *mut StcPartition) -> StcStatus {
    emit(out, || construct_multiblock_extremal(n).map(StcPartition))
}

/// Exhaustive-search minimum over partitions of `n` with at least `min_t`
/// steps; `n` is at most 120.
///
/// # Safety
/// `weight` and `out` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_oracle(
    n: u64,
    min_t: usize,
    weight: *mut u64,
    out: *mut *mut StcPartition,
) -> StcStatus {
    non_null!(weight, out);
    guard(|| match brute_force_min_weight(n, min_t) {
        Ok((w, p)) => {
            *weight = w;
            *out = Box::into_raw(Box::new(StcPartition(p)));
            StcStatus::Ok
        }
        Err(e) => fail_with(e),
    })
}

/// Parses steps such as `6x5,2x1`, or a full `n=.. w=.. steps=..` line. The
/// result is not validated.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_parse(text: *const c_char, out: *mut *mut StcPartition) -> StcStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    emit(out, || {
        if text.starts_with("n=") {
            text.parse::<PartitionRecord>().map(|r| StcPartition(r.partition))
        } else {
            text.parse::<StaircasePartition>().map(StcPartition)
        }
    })
}

/// # Safety
/// `p` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_free(p: *mut StcPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of steps, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_len(p: *const StcPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Weight `r1 + s1 + ... + st`, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_weight(p: *const StcPartition) -> u64 {
    p.as_ref().map_or(0, |p| p.0.weight())
}

/// Step `index` (0-based).
///
/// # Safety
/// `p` is a live handle; `r` and `s` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_step(p: *const StcPartition, index: usize, r: *mut u64, s: *mut u64) -> StcStatus {
    non_null!(p, r, s);
    match (&*p).0.steps().get(index) {
        Some(step) => {
            *r = step.r;
            *s = step.s;
            StcStatus::Ok
        }
        None => fail(StcStatus::IndexOutOfRange, format!("no step {index}")),
    }
}

/// 1 if `p` is a valid staircase partition of `n`, 0 otherwise or for null.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_validate(p: *const StcPartition, n: u64) -> i32 {
    p.as_ref().map_or(0, |p| i32::from(validate(&p.0, n)))
}

/// The line `n=<n> w=<w> steps=...`.
///
/// # Safety
/// `p` is a live handle; see the crate documentation for the buffer.
#[no_mangle]
pub unsafe extern "C" fn stc_partition_to_string(
    p: *const StcPartition,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> StcStatus {
    non_null!(p);
    let text = PartitionRecord::of((&*p).0.clone()).to_string();
    write_text(&text, buf, capacity, needed)
}

/// Design induced by a valid partition.
///
/// # Safety
/// `p` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_design_build(p: *const StcPartition, out: *mut *mut StcDesign) -> StcStatus {
    non_null!(p);
    emit(out, || build_design(&(&*p).0).map(StcDesign))
}

/// Parses the design file form.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_design_parse(text: *const c_char, out: *mut *mut StcDesign) -> StcStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    emit(out, || text.parse::<StaircaseDesign>().map(StcDesign))
}

/// # Safety
/// `d` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stc_design_free(d: *mut StcDesign) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of blocks, or 0 for a null handle.
///
/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_design_block_count(d: *const StcDesign) -> usize {
    d.as_ref().map_or(0, |d| d.0.block_count())
}

/// Runs the five checks. Bit `i - 1` of `*failed` is set when check `i`
/// fails, so 0 means the design passed.
///
/// # Safety
/// `d` is a live handle; `failed` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_design_verify(d: *const StcDesign, failed: *mut u32) -> StcStatus {
    non_null!(d, failed);
    guard(|| {
        let report = verify_design(&(&*d).0);
        *failed = report.failed().map(|c| 1u32 << (c.number() - 1)).fold(0, |a, b| a | b);
        StcStatus::Ok
    })
}

/// The design file form.
///
/// # Safety
/// `d` is a live handle; see the crate documentation for the buffer.
#[no_mangle]
pub unsafe extern "C" fn stc_design_to_string(
    d: *const StcDesign,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> StcStatus {
    non_null!(d);
    write_text(&(&*d).0.to_string(), buf, capacity, needed)
}

/// The incidence export; fails with `Precondition` for a design that does
/// not verify.
///
/// # Safety
/// `d` is a live handle; see the crate documentation for the buffer.
#[no_mangle]
pub unsafe extern "C" fn stc_design_incidence_to_string(
    d: *const StcDesign,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> StcStatus {
    non_null!(d);
    match incidence_matrix(&(&*d).0) {
        Ok(m) => write_text(&m.to_string(), buf, capacity, needed),
        Err(e) => fail_with(e),
    }
}

/// Scans `property` over `from..=to`; `to = 0` selects the default range and
/// ignores `from`.
///
/// # Safety
/// `property` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_scan(property: *const c_char, from: u64, to: u64, out: *mut *mut StcScanReport) -> StcStatus {
    let property = match read_str(property) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let range = (to != 0).then_some((from, to));
    emit(out, || scan_statement(property, range).map(StcScanReport))
}

/// # Safety
/// `r` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_free(r: *mut StcScanReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Points evaluated.
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_checked(r: *const StcScanReport) -> u64 {
    r.as_ref().map_or(0, |r| r.0.checked)
}

/// Points where the printed and computed values agree.
///
/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_matches(r: *const StcScanReport) -> u64 {
    r.as_ref().map_or(0, |r| r.0.matches)
}

/// # Safety
/// `r` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_mismatch_count(r: *const StcScanReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.mismatches.len())
}

/// Mismatch `index` (0-based, ordered by `n`).
///
/// # Safety
/// `r` is a live handle; the out pointers are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_mismatch(
    r: *const StcScanReport,
    index: usize,
    n: *mut u64,
    paper: *mut i64,
    computed: *mut i64,
) -> StcStatus {
    non_null!(r, n, paper, computed);
    match (&*r).0.mismatches.get(index) {
        Some(m) => {
            *n = m.n;
            *paper = m.paper;
            *computed = m.computed;
            StcStatus::Ok
        }
        None => fail(StcStatus::IndexOutOfRange, format!("no mismatch {index}")),
    }
}

/// The TSV rendering.
///
/// # Safety
/// `r` is a live handle; see the crate documentation for the buffer.
#[no_mangle]
pub unsafe extern "C" fn stc_scan_report_to_string(
    r: *const StcScanReport,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> StcStatus {
    non_null!(r);
    write_text(&(&*r).0.to_string(), buf, capacity, needed)
}
