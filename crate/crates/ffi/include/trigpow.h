#ifndef TRIGPOW_H
#define TRIGPOW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TRIGPOW_BASE_COS 0

#define TRIGPOW_BASE_SIN 1

#define TRIGPOW_KERNEL_ALPHA 0

#define TRIGPOW_KERNEL_ALPHA_PRIME 1

#define TRIGPOW_KERNEL_ALPHA_DOUBLE_PRIME 2

#define TRIGPOW_TARGET_COS 0

#define TRIGPOW_TARGET_SIN 1

/**
 * Result code of every fallible call.
 */
typedef enum TrigpowStatus {
  TRIGPOW_STATUS_OK = 0,
  TRIGPOW_STATUS_NULL_POINTER = 1,
  TRIGPOW_STATUS_DOMAIN = 2,
  TRIGPOW_STATUS_EVALUATION = 3,
  TRIGPOW_STATUS_PARSE = 4,
  TRIGPOW_STATUS_INVALID_ARGUMENT = 5,
  TRIGPOW_STATUS_PANIC = 6,
} TrigpowStatus;

/**
 * Polynomial in `cos t` or `sin t`, optionally times `cos t`.
 */
typedef struct TrigpowExpansion TrigpowExpansion;

/**
 * Exact trigonometric polynomial.
 */
typedef struct TrigpowPoly TrigpowPoly;

/**
 * Validated parameter of the `1/(a - cos t)` series.
 */
typedef struct TrigpowReciprocal TrigpowReciprocal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *trigpow_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void trigpow_string_free(char *s);

/**
 * Kernel value as a decimal string.
 */
enum TrigpowStatus trigpow_kernel(uint32_t kind, int64_t n, int64_t s, bool brute, char **out);

/**
 * `sum_{j=1}^{s} C(2k, 2j-1) C(k-j, s-j)` as a decimal string.
 */
enum TrigpowStatus trigpow_lemma2(int64_t k, int64_t s, bool brute, char **out);

/**
 * Alternating binomial sum that vanishes for `t >= 1`.
 */
enum TrigpowStatus trigpow_cooc(int64_t ell, int64_t t, char **out);

/**
 * Binomial convolution equal to `C(n+2l, l)`.
 */
enum TrigpowStatus trigpow_cheie(int64_t n, int64_t ell, bool brute, char **out);

/**
 * Fourier form of `cos^n t` or `sin^n t`.
 */
enum TrigpowStatus trigpow_power_fourier(uint32_t base, int64_t n, struct TrigpowPoly **out);

/**
 * Parses `{"constant":"p/q","cos":{"n":"p/q"},"sin":{..}}`.
 */
enum TrigpowStatus trigpow_poly_from_json(const char *json, struct TrigpowPoly **out);

enum TrigpowStatus trigpow_poly_mul(const struct TrigpowPoly *lhs,
                                    const struct TrigpowPoly *rhs,
                                    struct TrigpowPoly **out);

enum TrigpowStatus trigpow_poly_eval(const struct TrigpowPoly *poly, double t, double *out);

enum TrigpowStatus trigpow_poly_to_json(const struct TrigpowPoly *poly, char **out);

void trigpow_poly_free(struct TrigpowPoly *poly);

/**
 * `cos(n t)` or `sin(n t)` as a polynomial in the same base.
 */
enum TrigpowStatus trigpow_multiple_angle(uint32_t base, int64_t n, struct TrigpowExpansion **out);

enum TrigpowStatus trigpow_expansion_eval(const struct TrigpowExpansion *e, double t, double *out);

enum TrigpowStatus trigpow_expansion_to_json(const struct TrigpowExpansion *e, char **out);

/**
 * Converts a power expansion back to its Fourier form.
 */
enum TrigpowStatus trigpow_expansion_to_fourier(const struct TrigpowExpansion *e,
                                                struct TrigpowPoly **out);

void trigpow_expansion_free(struct TrigpowExpansion *e);

/**
 * Fails with [`TrigpowStatus::Domain`] unless `|a| > 1`.
 */
enum TrigpowStatus trigpow_reciprocal_new(double a, struct TrigpowReciprocal **out);

/**
 * Cosine coefficient `a_n` of `1/(a - cos t)`.
 */
enum TrigpowStatus trigpow_reciprocal_cos_coeff(const struct TrigpowReciprocal *p,
                                                uint64_t n,
                                                double *out);

enum TrigpowStatus trigpow_reciprocal_ratio(const struct TrigpowReciprocal *p, double *out);

/**
 * Upper bound on the sup-norm error after truncating at harmonic `n`.
 */
enum TrigpowStatus trigpow_reciprocal_tail_bound(const struct TrigpowReciprocal *p,
                                                 uint64_t n,
                                                 double *out);

/**
 * Truncated series of `1/(a - cos t)` or `1/(a - sin t)` as JSON.
 */
enum TrigpowStatus trigpow_reciprocal_series_json(const struct TrigpowReciprocal *p,
                                                  uint32_t target,
                                                  uint64_t n,
                                                  char **out);

void trigpow_reciprocal_free(struct TrigpowReciprocal *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIGPOW_H */
