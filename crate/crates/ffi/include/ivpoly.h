#ifndef IVPOLY_H
#define IVPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IvpStatus {
  IVP_STATUS_OK = 0,
  IVP_STATUS_NULL_POINTER = 1,
  IVP_STATUS_INVALID_ARGUMENT = 2,
  IVP_STATUS_COMPUTATION_FAILED = 3,
  IVP_STATUS_BUFFER_TOO_SMALL = 4,
  IVP_STATUS_PANIC = 5,
} IvpStatus;

typedef enum IvpFamily {
  /**
   * All interval lengths `1..n`; `include_origin` adds the origin.
   */
  IVP_FAMILY_COMPLETE = 0,
  /**
   * Intervals of length `i`.
   */
  IVP_FAMILY_FIXED = 1,
  /**
   * Intervals of length 1 or `n - i`.
   */
  IVP_FAMILY_PYRAMIDAL = 2,
  /**
   * Origin and all `e_j - e_k`, `j < k`, in dimension `n`.
   */
  IVP_FAMILY_ROOT = 3,
} IvpFamily;

/**
 * Opaque polytope handle.
 */
typedef struct IvpPolytope IvpPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. The pointer stays valid until the next call on the same thread.
 */
const char *ivp_last_error_message(void);

/**
 * Builds a named family. `i` is ignored by `Complete` and `Root`;
 * `include_origin` only affects `Complete`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum IvpStatus ivp_polytope_new_family(enum IvpFamily family,
                                       size_t n,
                                       size_t i,
                                       bool include_origin,
                                       struct IvpPolytope **out);

/**
 * Convex hull of `m` points in dimension `n`, given row-major in `coords`.
 *
 * # Safety
 * `coords` must point to `m * n` readable `int64_t` values and `out` to
 * writable storage for one handle.
 */
enum IvpStatus ivp_polytope_from_vertices(size_t n,
                                          size_t m,
                                          const int64_t *coords,
                                          struct IvpPolytope **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void ivp_polytope_free(struct IvpPolytope *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_dim(const struct IvpPolytope *p, size_t *out);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_vertex_count(const struct IvpPolytope *p, size_t *out);

/**
 * Ambient dimension `n`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_ambient_dim(const struct IvpPolytope *p, size_t *out);

/**
 * Copies the vertices row-major into `buf`, which must hold
 * `vertex_count * ambient_dim` values.
 *
 * # Safety
 * `p` must be a live handle and `buf` must have room for `len` values.
 */
enum IvpStatus ivp_polytope_vertices(const struct IvpPolytope *p, int64_t *buf, size_t len);

/**
 * Writes `f_{-1}, f_0, ..., f_d` (that is `d + 2` values) into `buf` and
 * the count into `written`.
 *
 * # Safety
 * `p` must be a live handle, `buf` must have room for `len` values and
 * `written` must be writable.
 */
enum IvpStatus ivp_polytope_f_vector(const struct IvpPolytope *p,
                                     uint64_t *buf,
                                     size_t len,
                                     size_t *written);

/**
 * Normalized volume as a decimal string.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_normalized_volume(const struct IvpPolytope *p, char **out);

/**
 * Ehrhart coefficients, constant term first, as a JSON array of
 * `"num/den"` strings.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_ehrhart_json(const struct IvpPolytope *p, char **out);

/**
 * Lattice points in the `t`-th dilate, as a decimal string.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum IvpStatus ivp_polytope_count(const struct IvpPolytope *p, uint64_t t, char **out);

/**
 * Runs the verification suite with every claim swept up to `n_max` and
 * returns the JSON report. `claims` is null for all claims, or a
 * comma-separated list of claim identifiers. `failures` receives the number
 * of failed non-conjecture checks.
 *
 * # Safety
 * `claims` must be null or a NUL-terminated string; `out` and `failures`
 * must be writable.
 */
enum IvpStatus ivp_verify_suite_json(size_t n_max,
                                     const char *claims,
                                     char **out,
                                     size_t *failures);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void ivp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IVPOLY_H */
