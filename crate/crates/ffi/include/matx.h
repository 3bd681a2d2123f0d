#ifndef MATX_H
#define MATX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MatxStatus {
  MATX_STATUS_OK = 0,
  MATX_STATUS_NULL_POINTER = 1,
  MATX_STATUS_INVALID_UTF8 = 2,
  MATX_STATUS_INVALID_INPUT = 3,
  MATX_STATUS_NOT_A_MATROID = 4,
  MATX_STATUS_TOO_LARGE = 5,
  MATX_STATUS_HAS_LOOPS = 6,
  MATX_STATUS_BUFFER_TOO_SMALL = 7,
  MATX_STATUS_OVERFLOW = 8,
  MATX_STATUS_PANIC = 9,
} MatxStatus;

/**
 * Opaque matroid handle.
 */
typedef struct MatxMatroid MatxMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the next call.
 */
const char *matx_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *matx_version(void);

/**
 * Parses a matroid document (explicit bases, graph edges or a construction).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum MatxStatus matx_matroid_from_json(const char *json, struct MatxMatroid **out);

/**
 * `U_{r,n}`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MatxStatus matx_matroid_uniform(uint32_t r, uint32_t n, struct MatxMatroid **out);

/**
 * # Safety
 * `m` must be a handle from this library or NULL; `out` must be a valid pointer.
 */
enum MatxStatus matx_matroid_dual(const struct MatxMatroid *m, struct MatxMatroid **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `m` must come from this library and not be used afterwards.
 */
void matx_matroid_free(struct MatxMatroid *m);

/**
 * Ground-set size, or 0 for NULL.
 *
 * # Safety
 * `m` must be a handle from this library or NULL.
 */
uint32_t matx_matroid_size(const struct MatxMatroid *m);

/**
 * Rank, or 0 for NULL.
 *
 * # Safety
 * `m` must be a handle from this library or NULL.
 */
uint32_t matx_matroid_rank(const struct MatxMatroid *m);

/**
 * Number of bases, or 0 for NULL.
 *
 * # Safety
 * `m` must be a handle from this library or NULL.
 */
uint64_t matx_matroid_num_bases(const struct MatxMatroid *m);

/**
 * Writes `h_0..h_r` into `buf`. `*written` receives the required length even when the
 * buffer is too small.
 *
 * # Safety
 * `buf` must hold `len` values; `m` and `written` must be valid.
 */
enum MatxStatus matx_h_vector(const struct MatxMatroid *m,
                              int64_t *buf,
                              size_t len,
                              size_t *written);

/**
 * Tutte polynomial as a JSON array of `[i, j, coefficient]` terms.
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer.
 */
enum MatxStatus matx_tutte_json(const struct MatxMatroid *m, char **out);

/**
 * Runs a check suite (`"all"`, `"eq1"`, ...) and returns the results as JSON.
 * `*violations` receives the number of violated checks.
 *
 * # Safety
 * `m`, `suite`, `out` and `violations` must be valid.
 */
enum MatxStatus matx_verify_json(const struct MatxMatroid *m,
                                 const char *suite,
                                 char **out,
                                 uint32_t *violations);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void matx_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATX_H */
