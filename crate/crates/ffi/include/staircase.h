#ifndef STAIRCASE_H
#define STAIRCASE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StcStatus {
  STC_STATUS_OK = 0,
  /**
   * Argument outside the function's domain.
   */
  STC_STATUS_DOMAIN = 1,
  /**
   * Argument above the supported ceiling.
   */
  STC_STATUS_TOO_LARGE = 2,
  /**
   * Construction requested outside its parameters.
   */
  STC_STATUS_PRECONDITION = 3,
  /**
   * No partition satisfies the constraints.
   */
  STC_STATUS_NO_PARTITION = 4,
  STC_STATUS_UNKNOWN_PROPERTY = 5,
  STC_STATUS_PARSE = 6,
  STC_STATUS_NULL_POINTER = 7,
  /**
   * A string argument is not valid UTF-8.
   */
  STC_STATUS_INVALID_UTF8 = 8,
  STC_STATUS_BUFFER_TOO_SMALL = 9,
  STC_STATUS_INDEX_OUT_OF_RANGE = 10,
  /**
   * A Rust panic was caught at the boundary.
   */
  STC_STATUS_INTERNAL = 99,
} StcStatus;

/**
 * Opaque staircase design.
 */
typedef struct StcDesign StcDesign;

/**
 * Opaque staircase partition.
 */
typedef struct StcPartition StcPartition;

/**
 * Opaque scan report.
 */
typedef struct StcScanReport StcScanReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread. Calling it does not
 * change the stored message.
 *
 * # Safety
 * See the crate documentation for the buffer convention.
 */
enum StcStatus stc_last_error(char *buf, size_t capacity, size_t *needed);

/**
 * Static name of a status code, e.g. `"STC_STATUS_DOMAIN"`.
 */
const char *stc_status_name(enum StcStatus status);

/**
 * Largest product `r*s` with `r + s = n`, split into 64-bit halves.
 *
 * # Safety
 * `hi` and `lo` are valid for writes.
 */
enum StcStatus stc_alpha(uint64_t n, uint64_t *hi, uint64_t *lo);

/**
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_beta(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_gamma(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_delta(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_eps(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_phi(uint64_t n, uint64_t *out);

/**
 * Minimum-weight partition of `n`.
 *
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_partition_minimal(uint64_t n, struct StcPartition **out);

/**
 * Multi-step partition of `n` with `j` extra heights.
 *
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_partition_multistep(uint64_t n, uint64_t j, struct StcPartition **out);

/**
 * Minimum-weight partition with at least two steps, for squares and pronic
 * numbers.
 *
 * # Safety
 * `out` is valid for writes.
 */
enum StcStatus stc_partition_multiblock(uint64_t n, struct StcPartition **out);

/**
 * Exhaustive-search minimum over partitions of `n` with at least `min_t`
 * steps; `n` is at most 120.
 *
 * # Safety
 * `weight` and `out` are valid for writes.
 */
enum StcStatus stc_partition_oracle(uint64_t n,
                                    size_t min_t,
                                    uint64_t *weight,
                                    struct StcPartition **out);

/**
 * Parses steps such as `6x5,2x1`, or a full `n=.. w=.. steps=..` line. The
 * result is not validated.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is valid for writes.
 */
enum StcStatus stc_partition_parse(const char *text, struct StcPartition **out);

/**
 * # Safety
 * `p` is null or a handle from this library not yet freed.
 */
void stc_partition_free(struct StcPartition *p);

/**
 * Number of steps, or 0 for a null handle.
 *
 * # Safety
 * `p` is null or a live handle.
 */
size_t stc_partition_len(const struct StcPartition *p);

/**
 * Weight `r1 + s1 + ... + st`, or 0 for a null handle.
 *
 * # Safety
 * `p` is null or a live handle.
 */
uint64_t stc_partition_weight(const struct StcPartition *p);

/**
 * Step `index` (0-based).
 *
 * # Safety
 * `p` is a live handle; `r` and `s` are valid for writes.
 */
enum StcStatus stc_partition_step(const struct StcPartition *p,
                                  size_t index,
                                  uint64_t *r,
                                  uint64_t *s);

/**
 * 1 if `p` is a valid staircase partition of `n`, 0 otherwise or for null.
 *
 * # Safety
 * `p` is null or a live handle.
 */
int32_t stc_partition_validate(const struct StcPartition *p, uint64_t n);

/**
 * The line `n=<n> w=<w> steps=...`.
 *
 * # Safety
 * `p` is a live handle; see the crate documentation for the buffer.
 */
enum StcStatus stc_partition_to_string(const struct StcPartition *p,
                                       char *buf,
                                       size_t capacity,
                                       size_t *needed);

/**
 * Design induced by a valid partition.
 *
 * # Safety
 * `p` is a live handle; `out` is valid for writes.
 */
enum StcStatus stc_design_build(const struct StcPartition *p, struct StcDesign **out);

/**
 * Parses the design file form.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is valid for writes.
 */
enum StcStatus stc_design_parse(const char *text, struct StcDesign **out);

/**
 * # Safety
 * `d` is null or a handle from this library not yet freed.
 */
void stc_design_free(struct StcDesign *d);

/**
 * Number of blocks, or 0 for a null handle.
 *
 * # Safety
 * `d` is null or a live handle.
 */
size_t stc_design_block_count(const struct StcDesign *d);

/**
 * Runs the five checks. Bit `i - 1` of `*failed` is set when check `i`
 * fails, so 0 means the design passed.
 *
 * # Safety
 * `d` is a live handle; `failed` is valid for writes.
 */
enum StcStatus stc_design_verify(const struct StcDesign *d, uint32_t *failed);

/**
 * The design file form.
 *
 * # Safety
 * `d` is a live handle; see the crate documentation for the buffer.
 */
enum StcStatus stc_design_to_string(const struct StcDesign *d,
                                    char *buf,
                                    size_t capacity,
                                    size_t *needed);

/**
 * The incidence export; fails with `Precondition` for a design that does
 * not verify.
 *
 * # Safety
 * `d` is a live handle; see the crate documentation for the buffer.
 */
enum StcStatus stc_design_incidence_to_string(const struct StcDesign *d,
                                              char *buf,
                                              size_t capacity,
                                              size_t *needed);

/**
 * Scans `property` over `from..=to`; `to = 0` selects the default range and
 * ignores `from`.
 *
 * # Safety
 * `property` is a NUL-terminated string; `out` is valid for writes.
 */
enum StcStatus stc_scan(const char *property,
                        uint64_t from,
                        uint64_t to,
                        struct StcScanReport **out);

/**
 * # Safety
 * `r` is null or a handle from this library not yet freed.
 */
void stc_scan_report_free(struct StcScanReport *r);

/**
 * Points evaluated.
 *
 * # Safety
 * `r` is null or a live handle.
 */
uint64_t stc_scan_report_checked(const struct StcScanReport *r);

/**
 * Points where the printed and computed values agree.
 *
 * # Safety
 * `r` is null or a live handle.
 */
uint64_t stc_scan_report_matches(const struct StcScanReport *r);

/**
 * # Safety
 * `r` is null or a live handle.
 */
size_t stc_scan_report_mismatch_count(const struct StcScanReport *r);

/**
 * Mismatch `index` (0-based, ordered by `n`).
 *
 * # Safety
 * `r` is a live handle; the out pointers are valid for writes.
 */
enum StcStatus stc_scan_report_mismatch(const struct StcScanReport *r,
                                        size_t index,
                                        uint64_t *n,
                                        int64_t *paper,
                                        int64_t *computed);

/**
 * The TSV rendering.
 *
 * # Safety
 * `r` is a live handle; see the crate documentation for the buffer.
 */
enum StcStatus stc_scan_report_to_string(const struct StcScanReport *r,
                                         char *buf,
                                         size_t capacity,
                                         size_t *needed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STAIRCASE_H */
