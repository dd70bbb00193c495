#ifndef LIEBIAL_H
#define LIEBIAL_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum LbStatus {
  LB_STATUS_OK = 0,
  LB_STATUS_NULL_POINTER = 1,
  LB_STATUS_INVALID_INPUT = 2,
  LB_STATUS_PARSE_ERROR = 3,
  LB_STATUS_DIMENSION_MISMATCH = 4,
  LB_STATUS_JACOBI_FAILURE = 5,
  LB_STATUS_NOT_A_SOLUTION = 6,
  LB_STATUS_PANIC = 7,
} LbStatus;

/**
 * A validated Lie algebra.
 */
typedef struct LbAlgebra LbAlgebra;

/**
 * A bivector in `∧²g`.
 */
typedef struct LbBivector LbBivector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the oscillator algebra for `lambda[0..n]`, each entry a scalar string.
 *
 * # Safety
 * `lambda` must point to `n` valid C strings and `out` must be writable.
 */
enum LbStatus lb_oscillator_new(const char *const *lambda, size_t n, struct LbAlgebra **out);

/**
 * Reads an algebra from a JSON document with an `algebra` field.
 *
 * # Safety
 * `json` must be a valid C string and `out` must be writable.
 */
enum LbStatus lb_algebra_from_json(const char *json, struct LbAlgebra **out);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t lb_algebra_dim(const struct LbAlgebra *alg);

/**
 * # Safety
 * `alg` must be null or a handle not yet freed.
 */
void lb_algebra_free(struct LbAlgebra *alg);

/**
 * A zero bivector of dimension `dim`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LbStatus lb_bivector_new(size_t dim, struct LbBivector **out);

/**
 * Sets the `b_i∧b_j` coefficient; `(j, i)` gets the negative.
 *
 * # Safety
 * `r` must be a live handle and `value` a valid C string.
 */
enum LbStatus lb_bivector_set(struct LbBivector *r, size_t i, size_t j, const char *value);

/**
 * Reads `{"entries": [{"i", "j", "value"}]}` as a bivector on `alg`.
 *
 * # Safety
 * `alg` must be a live handle, `json` a valid C string, `out` writable.
 */
enum LbStatus lb_bivector_from_json(const struct LbAlgebra *alg,
                                    const char *json,
                                    struct LbBivector **out);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void lb_bivector_free(struct LbBivector *r);

/**
 * Writes whether `[r, r] = 0`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum LbStatus lb_check_cybe(const struct LbAlgebra *alg, const struct LbBivector *r, bool *out);

/**
 * Writes whether `[r, r]` is ad-invariant.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum LbStatus lb_check_gybe(const struct LbAlgebra *alg, const struct LbBivector *r, bool *out);

/**
 * The document `{algebra, bivector, dual}` with the dual bracket of `r`.
 * Free the string with [`lb_string_free`].
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum LbStatus lb_dualize_json(const struct LbAlgebra *alg, const struct LbBivector *r, char **out);

/**
 * Geometry summary of the dual group as JSON. `form_json` is a form spec
 * such as `{"builtin": "k_lambda"}`; null selects `k_lambda`.
 *
 * # Safety
 * Handles must be live, `form_json` null or a valid C string, `out` writable.
 */
enum LbStatus lb_geometry_json(const struct LbAlgebra *alg,
                               const struct LbBivector *r,
                               const char *form_json,
                               char **out);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void lb_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *lb_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEBIAL_H */
