/* C interface to qkflag: quantum K-theory of flag manifolds. */

#ifndef QKFLAG_H
#define QKFLAG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum QkStatus {
  QK_STATUS_OK = 0,
  QK_STATUS_NULL_ARGUMENT = 1,
  QK_STATUS_INVALID_UTF8 = 2,
  QK_STATUS_INVALID_INPUT = 3,
  QK_STATUS_PRECONDITION = 4,
  QK_STATUS_TOO_LARGE = 5,
  QK_STATUS_BUFFER_TOO_SMALL = 6,
  QK_STATUS_INTERNAL = 7,
  QK_STATUS_PANIC = 8,
} QkStatus;

/**
 * Opaque handle for one flag manifold `G/B` and its parabolic quotients.
 */
typedef struct QkFlag QkFlag;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the handle for a Cartan type such as `"G2"`.
 *
 * # Safety
 * `lie_type` is a nul-terminated string and `out` is writable. The handle
 * written to `out` must be released with [`qk_flag_free`].
 */
enum QkStatus qk_flag_new(const char *lie_type, struct QkFlag **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `flag` is NULL or a handle from [`qk_flag_new`] not yet freed.
 */
void qk_flag_free(struct QkFlag *flag);

/**
 * Rank of the root system, or 0 for a NULL handle.
 *
 * # Safety
 * `flag` is NULL or a live handle.
 */
uintptr_t qk_flag_rank(const struct QkFlag *flag);

/**
 * `<O^{s_i}, O^w, O_x>_d` on `G/P_K`. `method` is `"pairing"`, `"full"`
 * or `"reduced"` (NULL selects `"reduced"`). Writes
 * `{"value": [{"wt": [...], "c": n}, ...], "text": "..."}` to `out`.
 *
 * # Safety
 * `flag` is a live handle, the strings are NULL or nul-terminated (`w`, `x`
 * and `d` must be non-null) and `out` is writable.
 */
enum QkStatus qk_three_point(const struct QkFlag *flag,
                             uint32_t i,
                             const char *w,
                             const char *x,
                             const char *d,
                             const char *k,
                             const char *method,
                             char **out);

/**
 * `<O^z, O_x>_d` on `G/P_K`, in the same JSON shape as [`qk_three_point`].
 *
 * # Safety
 * As for [`qk_three_point`].
 */
enum QkStatus qk_two_point(const struct QkFlag *flag,
                           const char *z,
                           const char *x,
                           const char *d,
                           const char *k,
                           char **out);

/**
 * `O^{s_i} * O^w` in `QK_T(G/P_K)` as JSON
 * `{"type", "K", "terms": [{"w", "Q", "coeff"}]}`.
 *
 * # Safety
 * `flag` is a live handle, `w` is nul-terminated, `k` is NULL or
 * nul-terminated and `out` is writable.
 */
enum QkStatus qk_chevalley(const struct QkFlag *flag,
                           uint32_t i,
                           const char *w,
                           const char *k,
                           char **out);

/**
 * Peterson lift of `d` (one entry per node of `K`) to a degree on `G/B`,
 * written as `rank` integers into `out`.
 *
 * # Safety
 * `flag` is a live handle, `d` is nul-terminated, `k` is NULL or
 * nul-terminated and `out` has room for `out_len` integers.
 */
enum QkStatus qk_peterson_lift(const struct QkFlag *flag,
                               const char *d,
                               const char *k,
                               int64_t *out,
                               uintptr_t out_len);

/**
 * Releases a string returned through an `out` parameter. NULL is ignored.
 *
 * # Safety
 * `s` is NULL or a string from this library not yet freed.
 */
void qk_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *qk_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QKFLAG_H */
