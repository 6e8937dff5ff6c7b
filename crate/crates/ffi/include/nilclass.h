#ifndef NILCLASS_H
#define NILCLASS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum NilStatus {
  NIL_STATUS_OK = 0,
  NIL_STATUS_NULL_POINTER = 1,
  NIL_STATUS_INVALID_UTF8 = 2,
  /**
   * Syntax, index or bidegree error in the input text.
   */
  NIL_STATUS_PARSE = 3,
  /**
   * Unknown algebra or table, missing or out-of-domain parameter.
   */
  NIL_STATUS_INVALID_INPUT = 4,
  /**
   * Division by zero, irrational radicand or a non-real value.
   */
  NIL_STATUS_ARITHMETIC = 5,
  NIL_STATUS_NOT_NILPOTENT = 6,
  /**
   * The output buffer is too small; the needed length was written.
   */
  NIL_STATUS_BUFFER_TOO_SMALL = 7,
  NIL_STATUS_INTERNAL = 8,
  NIL_STATUS_PANIC = 9,
} NilStatus;

/**
 * A real Lie algebra with rational structure constants.
 */
typedef struct NilAlgebra NilAlgebra;

/**
 * Complex structure equations with Gaussian rational coefficients.
 */
typedef struct NilComplex NilComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or null. Valid until the next failing call.
 */
const char *nil_last_error(void);

/**
 * Static description of a status code.
 */
const char *nil_status_str(enum NilStatus s);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void nil_string_free(char *s);

/**
 * Parses abbreviated notation such as `(0^4, 12, 15+(a+1)*24, ...)`.
 *
 * # Safety
 * `notation` must be a valid C string; `params` a valid C string or null; `out` writable.
 */
enum NilStatus nil_algebra_parse(const char *notation, const char *params, struct NilAlgebra **out);

/**
 * A catalog algebra by name (`g1..g12`, `n1..n8`, `m1..m4`).
 *
 * # Safety
 * As [`nil_algebra_parse`].
 */
enum NilStatus nil_algebra_catalog(const char *name, const char *params, struct NilAlgebra **out);

/**
 * # Safety
 * `g` must come from this library or be null; it is invalid afterwards.
 */
void nil_algebra_free(struct NilAlgebra *g);

/**
 * Dimension, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t nil_algebra_dim(const struct NilAlgebra *g);

/**
 * Canonical abbreviated notation; free with [`nil_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum NilStatus nil_algebra_notation(const struct NilAlgebra *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `passes` writable.
 */
enum NilStatus nil_algebra_jacobi(const struct NilAlgebra *g, bool *passes);

/**
 * Dimensions of the ascending central series `g_1, g_2, ...`.
 *
 * `len` receives the tuple length even when `cap` is too small.
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `cap` entries; `len` writable.
 */
enum NilStatus nil_algebra_ascending_type(const struct NilAlgebra *g,
                                          size_t *buf,
                                          size_t cap,
                                          size_t *len);

/**
 * Dimensions of `[g,g], [g,[g,g]], ...` down to 0.
 *
 * # Safety
 * As [`nil_algebra_ascending_type`].
 */
enum NilStatus nil_algebra_descending_type(const struct NilAlgebra *g,
                                           size_t *buf,
                                           size_t cap,
                                           size_t *len);

/**
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum NilStatus nil_algebra_betti(const struct NilAlgebra *g, size_t k, size_t *out);

/**
 * Number of independent Casimir invariants; `seed` drives the generic-rank test.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum NilStatus nil_algebra_casimir(const struct NilAlgebra *g, uint64_t seed, size_t *out);

/**
 * Fingerprint as JSON; free with [`nil_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum NilStatus nil_algebra_fingerprint_json(const struct NilAlgebra *g, char **out);

/**
 * Parses complex equations `dw1 = ...` with `w1~2` for a conjugate index.
 *
 * # Safety
 * As [`nil_algebra_parse`].
 */
enum NilStatus nil_complex_parse(const char *eqs, const char *params, struct NilComplex **out);

/**
 * # Safety
 * `c` must come from this library or be null; it is invalid afterwards.
 */
void nil_complex_free(struct NilComplex *c);

/**
 * Whether `d^2 = 0` on every generator.
 *
 * # Safety
 * `c` must be a live handle; `valid` writable.
 */
enum NilStatus nil_complex_validate(const struct NilComplex *c, bool *valid);

/**
 * Real algebra under `w^k = e^(2k-1) + i e^(2k)`.
 *
 * # Safety
 * `c` must be a live handle; `out` writable.
 */
enum NilStatus nil_complex_realify(const struct NilComplex *c, struct NilAlgebra **out);

/**
 * Verifies one certificate or a list given as JSON; `all_passed` is false if any fails.
 *
 * # Safety
 * `json` must be a valid C string; `all_passed` writable.
 */
enum NilStatus nil_certify_json(const char *json, bool *all_passed);

/**
 * Table report as JSON from the built-in samples; `pass` tells whether every row passed.
 *
 * # Safety
 * `table` must be a valid C string; `out` and `pass` writable.
 */
enum NilStatus nil_table_report_json(const char *table, uint64_t seed, char **out, bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILCLASS_H */
