#ifndef QUADGENUS_H
#define QUADGENUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_POINTER = 1,
  /**
   * The form is zero, indefinite or of the wrong discriminant.
   */
  QG_STATUS_INVALID_FORM = 2,
  QG_STATUS_INVALID_DISCRIMINANT = 3,
  QG_STATUS_OVERFLOW = 4,
  QG_STATUS_OUT_OF_RANGE = 5,
  QG_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A table row did not verify.
   */
  QG_STATUS_VERIFICATION_FAILED = 7,
  QG_STATUS_OTHER = 8,
} QgStatus;

/**
 * Opaque class group handle.
 */
typedef struct QgClassGroup QgClassGroup;

/**
 * `a x² + b xy + c y²`
 */
typedef struct QgForm {
  int64_t a;
  int64_t b;
  int64_t c;
} QgForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *qg_status_message(enum QgStatus status);

/**
 * `b² − 4ac`.
 *
 * # Safety
 * `out` must be null or point to writable memory.
 */
enum QgStatus qg_form_discriminant(struct QgForm form, int64_t *out);

/**
 * Reduced form `R` and witness `g = [[p,q],[r,s]]` (row-major in
 * `witness`) with `F·g = R`. `witness` may be null.
 *
 * # Safety
 * `out` must be writable; `witness` must be null or point to 4 writable `int64_t`.
 */
enum QgStatus qg_form_reduce(struct QgForm form, struct QgForm *out, int64_t *witness);

/**
 * Whether the two forms lie in one genus.
 *
 * # Safety
 * `out` must be null or point to writable memory.
 */
enum QgStatus qg_same_genus(struct QgForm f1, struct QgForm f2, bool *out);

/**
 * Oriented (`SL₂`) and unoriented (`GL₂`) class counts of the genus of `form`.
 *
 * # Safety
 * `g_sl2` and `g_gl2` must be writable.
 */
enum QgStatus qg_genus_size(struct QgForm form, size_t *g_sl2, size_t *g_gl2);

/**
 * Reduced representative of `[f1][f2]`. Both forms must be primitive of
 * discriminant `d`.
 *
 * # Safety
 * `out` must be null or point to writable memory.
 */
enum QgStatus qg_compose(int64_t d, struct QgForm f1, struct QgForm f2, struct QgForm *out);

/**
 * Builds the class group of discriminant `d`. Release with [`qg_class_group_free`].
 *
 * # Safety
 * `out` must be null or point to writable memory.
 */
enum QgStatus qg_class_group_new(int64_t d, struct QgClassGroup **out);

/**
 * # Safety
 * `group` must be null or a handle from [`qg_class_group_new`] not yet freed.
 */
void qg_class_group_free(struct QgClassGroup *group);

/**
 * Class number `h`.
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_class_group_order(const struct QgClassGroup *group, size_t *out);

/**
 * Reduced representative of the `index`-th class (sorted order).
 *
 * # Safety
 * `group` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_class_group_class(const struct QgClassGroup *group,
                                   size_t index,
                                   struct QgForm *out);

/**
 * Elementary divisors `n₁ | n₂ | …` of the group. `len` receives the
 * count; `BUFFER_TOO_SMALL` is returned when it exceeds `cap`.
 *
 * # Safety
 * `group` must be a live handle; `buf` must hold `cap` writable `int64_t`
 * (it may be null when `cap` is 0); `len` must be writable.
 */
enum QgStatus qg_class_group_structure(const struct QgClassGroup *group,
                                       int64_t *buf,
                                       size_t cap,
                                       size_t *len);

/**
 * Checks every row of the built-in table; `VERIFICATION_FAILED` when any row fails.
 *
 * # Safety
 * `passed` and `total` must be writable.
 */
enum QgStatus qg_table_verify(size_t *passed, size_t *total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADGENUS_H */
