#ifndef STICKKIT_H
#define STICKKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StickkitFamily {
  STICKKIT_FAMILY_LITTLE_STICK = 0,
  STICKKIT_FAMILY_BIG_STICK_PUCK = 1,
  STICKKIT_FAMILY_PASCAL_HOCKEY = 2,
  STICKKIT_FAMILY_TRINOMIAL_HOCKEY = 3,
  STICKKIT_FAMILY_PYRAMID = 4,
} StickkitFamily;

typedef enum StickkitKind {
  STICKKIT_KIND_PASCAL = 0,
  STICKKIT_KIND_TRINOMIAL = 1,
} StickkitKind;

typedef enum StickkitStatus {
  STICKKIT_STATUS_OK = 0,
  STICKKIT_STATUS_INVALID_ARGUMENT = 1,
  STICKKIT_STATUS_NULL_POINTER = 2,
  STICKKIT_STATUS_OUT_OF_RANGE = 3,
  STICKKIT_STATUS_INTERNAL = 4,
} StickkitStatus;

// Opaque verification report.
typedef struct StickkitReport StickkitReport;

// Opaque triangle row.
typedef struct StickkitRow StickkitRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. Valid until the next
// stickkit call on the same thread; never NULL.
const char *stickkit_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void stickkit_string_free(char *s);

// Binomial coefficient `C(n, k)` as a decimal string; 0 outside `0 <= k <= n`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum StickkitStatus stickkit_binomial(int64_t n, int64_t k, char **out);

// Trinomial coefficient as a decimal string; 0 outside `|k| <= n`.
//
// # Safety
// `out` must be valid for writing one pointer.
enum StickkitStatus stickkit_trinomial(int64_t n, int64_t k, char **out);

// Multinomial coefficient `n! / prod(parts[i]!)`; 0 unless the parts are
// non-negative and sum to `n`.
//
// # Safety
// `parts` must point to `len` readable values (it may be NULL when `len`
// is 0) and `out` must be valid for writing one pointer.
enum StickkitStatus stickkit_multinomial(int64_t n, const int64_t *parts, size_t len, char **out);

// Builds row `n` of the requested triangle.
//
// # Safety
// `out` must be valid for writing one pointer.
enum StickkitStatus stickkit_row_new(enum StickkitKind kind, int64_t n, struct StickkitRow **out);

// Number of entries; 0 for NULL.
//
// # Safety
// `row` must be NULL or a live handle from [`stickkit_row_new`].
size_t stickkit_row_len(const struct StickkitRow *row);

// Triangle position of entry 0: 0 for Pascal rows, `-n` for trinomial rows.
//
// # Safety
// `row` must be NULL or a live handle from [`stickkit_row_new`].
int64_t stickkit_row_first_position(const struct StickkitRow *row);

// Entry `index` (0-based, left to right) as a decimal string.
//
// # Safety
// `row` must be a live handle and `out` valid for writing one pointer.
enum StickkitStatus stickkit_row_entry(const struct StickkitRow *row, size_t index, char **out);

// # Safety
// `row` must be NULL or a live handle; it is invalid afterwards.
void stickkit_row_free(struct StickkitRow *row);

// Sweeps `family` over `[0, n_max] x [0, k_max]`. A report with failing
// cases still returns `STICKKIT_STATUS_OK`; inspect
// [`stickkit_report_failed`].
//
// # Safety
// `out` must be valid for writing one pointer.
enum StickkitStatus stickkit_verify(enum StickkitFamily family,
                                    int64_t n_max,
                                    int64_t k_max,
                                    bool fail_fast,
                                    struct StickkitReport **out);

// # Safety
// `report` must be NULL or a live handle.
uint64_t stickkit_report_checked(const struct StickkitReport *report);

// # Safety
// `report` must be NULL or a live handle.
uint64_t stickkit_report_failed(const struct StickkitReport *report);

// The report in its JSON form.
//
// # Safety
// `report` must be a live handle and `out` valid for writing one pointer.
enum StickkitStatus stickkit_report_json(const struct StickkitReport *report, char **out);

// # Safety
// `report` must be NULL or a live handle; it is invalid afterwards.
void stickkit_report_free(struct StickkitReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STICKKIT_H */
