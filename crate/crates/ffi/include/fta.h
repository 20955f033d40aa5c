#ifndef FTA_H
#define FTA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FtaStatus {
  FTA_STATUS_OK = 0,
  FTA_STATUS_NULL_POINTER = 1,
  FTA_STATUS_INVALID_ARGUMENT = 2,
  FTA_STATUS_ZERO_POLYNOMIAL = 3,
  FTA_STATUS_CONSTANT_POLYNOMIAL = 4,
  FTA_STATUS_CONVERGENCE_FAILURE = 5,
  FTA_STATUS_OUT_OF_RANGE = 6,
  FTA_STATUS_PANIC = 99,
} FtaStatus;

/**
 * Polynomial with complex double coefficients.
 */
typedef struct FtaPolynomial FtaPolynomial;

/**
 * Roots returned by [`fta_solve`], sorted by real then imaginary part.
 */
typedef struct FtaRootSet FtaRootSet;

typedef struct FtaRoot {
  double re;
  double im;
  double residual;
  size_t multiplicity;
  size_t iterations;
} FtaRoot;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next `fta_*` call on the same thread.
 */
const char *fta_last_error_message(void);

/**
 * Builds a polynomial from `len` coefficients, constant term first.
 *
 * # Safety
 * `re` and `im` must point to `len` readable doubles; `out` must be writable.
 */
enum FtaStatus fta_poly_new(const double *re,
                            const double *im,
                            size_t len,
                            struct FtaPolynomial **out);

/**
 * Degree of `poly`, or -1 for the zero polynomial or a NULL handle.
 *
 * # Safety
 * `poly` must be NULL or a live handle from [`fta_poly_new`].
 */
int64_t fta_poly_degree(const struct FtaPolynomial *poly);

/**
 * # Safety
 * `poly` must be NULL or a handle from [`fta_poly_new`] not yet freed.
 */
void fta_poly_free(struct FtaPolynomial *poly);

/**
 * Finds all roots of `poly` with the default configuration and the given
 * restart seed.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be writable.
 */
enum FtaStatus fta_solve(const struct FtaPolynomial *poly, uint64_t seed, struct FtaRootSet **out);

/**
 * # Safety
 * `set` must be NULL or a live handle from [`fta_solve`].
 */
size_t fta_roots_len(const struct FtaRootSet *set);

/**
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum FtaStatus fta_roots_get(const struct FtaRootSet *set, size_t index, struct FtaRoot *out);

/**
 * # Safety
 * `set` must be NULL or a handle from [`fta_solve`] not yet freed.
 */
void fta_roots_free(struct FtaRootSet *set);

/**
 * Checks the direction lemma exactly for even `k >= 2`; writes 1 to
 * `pass` when it holds, 0 otherwise.
 *
 * # Safety
 * `pass` must be writable.
 */
enum FtaStatus fta_verify_lemma(uint64_t k, int32_t *pass);

/**
 * Nonnegative `n`-th root of `a >= 0`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FtaStatus fta_nth_root(double a, uint32_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FTA_H */
