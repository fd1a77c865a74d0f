#ifndef PSIK_H
#define PSIK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum PsikStatus {
  PSIK_STATUS_OK = 0,
  // A required pointer argument was null.
  PSIK_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  PSIK_STATUS_INVALID_UTF8 = 2,
  // No built-in group has the requested name.
  PSIK_STATUS_UNKNOWN_GROUP = 3,
  // The input was rejected (bad table, bad document, bad parameter).
  PSIK_STATUS_INVALID_INPUT = 4,
  // The group would exceed the size cap.
  PSIK_STATUS_TOO_LARGE = 5,
  // An index was outside the valid range.
  PSIK_STATUS_OUT_OF_RANGE = 6,
  // An internal error was caught at the boundary.
  PSIK_STATUS_INTERNAL = 7,
} PsikStatus;

// A finite group.
typedef struct PsikGroup PsikGroup;

// The groups defined by one document, in document order.
typedef struct PsikGroupList PsikGroupList;

// Builds a catalog group by name. `cap` of 0 selects the default cap.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum PsikStatus psik_catalog(const char *name, size_t cap, struct PsikGroup **out);

// Builds the cyclic group of order `n`.
//
// # Safety
// `out` must be a valid pointer.
enum PsikStatus psik_cyclic(size_t n, struct PsikGroup **out);

// Imports an `n × n` row-major Cayley table whose identity is element 0.
//
// # Safety
// `name` must be a NUL-terminated string, `table` must point to `n * n`
// readable values and `out` must be a valid pointer.
enum PsikStatus psik_group_from_table(const char *name,
                                      const uint32_t *table,
                                      size_t n,
                                      struct PsikGroup **out);

// Releases a group handle. Null is ignored.
//
// # Safety
// `group` must be null or a handle not yet freed.
void psik_group_free(struct PsikGroup *group);

// Parses and builds every group in a definition document.
//
// # Safety
// `document` must be a NUL-terminated string and `out` a valid pointer.
enum PsikStatus psik_defs_load(const char *document, size_t cap, struct PsikGroupList **out);

// Number of groups in a list; 0 for null.
//
// # Safety
// `list` must be null or a live list handle.
size_t psik_group_list_len(const struct PsikGroupList *list);

// Copies group `index` of a list into a new handle.
//
// # Safety
// `list` must be a live list handle and `out` a valid pointer.
enum PsikStatus psik_group_list_get(const struct PsikGroupList *list,
                                    size_t index,
                                    struct PsikGroup **out);

// Releases a list handle. Null is ignored.
//
// # Safety
// `list` must be null or a list handle not yet freed.
void psik_group_list_free(struct PsikGroupList *list);

// Writes the order of `group` to `out`.
//
// # Safety
// `group` must be a live handle and `out` a valid pointer.
enum PsikStatus psik_group_order(const struct PsikGroup *group, size_t *out);

// Writes `ψ_k(group)` as a decimal string. Free it with `psik_string_free`.
//
// # Safety
// `group` must be a live handle and `out` a valid pointer.
enum PsikStatus psik_psi_k(const struct PsikGroup *group, uint32_t k, char **out);

// Writes whether the derived series of `group` reaches the trivial group.
//
// # Safety
// `group` must be a live handle and `out` a valid pointer.
enum PsikStatus psik_is_solvable(const struct PsikGroup *group, bool *out);

// Runs every criterion with `k` scanned over `k_lo..=k_hi` and writes the
// TSV report, header included. Free it with `psik_string_free`.
//
// # Safety
// `group` must be a live handle and `out` a valid pointer.
enum PsikStatus psik_report_tsv(const struct PsikGroup *group,
                                uint32_t k_lo,
                                uint32_t k_hi,
                                char **out);

// Writes whether `D_k > 1/(2^k p^(k-1))` for prime `p`.
//
// # Safety
// `out` must be a valid pointer.
enum PsikStatus psik_claim_holds(uint64_t p, uint32_t k, bool *out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void psik_string_free(char *s);

// Message for the last failed call on this thread, or the empty string.
// Valid until the next call into this library from the same thread.
const char *psik_last_error(void);

#endif  /* PSIK_H */
