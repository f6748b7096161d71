#ifndef BOHRLAB_H
#define BOHRLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define BOHR_RADIUS_CLASSICAL 0

#define BOHR_RADIUS_ODD 1

#define BOHR_RADIUS_P_SYMMETRIC 2

#define BOHR_RADIUS_ANALYTIC 3

#define BOHR_RADIUS_HARMONIC 4

#define BOHR_SUITE_CLASSICAL 0

#define BOHR_SUITE_QUASI_SUBORDINATION 1

#define BOHR_SUITE_ODD_SUBORDINATION 2

#define BOHR_SUITE_HARMONIC_MAJORANT 3

#define BOHR_SUITE_ANALYTIC_POINTWISE 4

#define BOHR_SUITE_HARMONIC_POINTWISE 5

#define BOHR_SHARP_AUTOMORPHISM 0

#define BOHR_SHARP_HARMONIC_MAJORANT 1

#define BOHR_SHARP_ANALYTIC_POINTWISE 2

#define BOHR_SHARP_HARMONIC_POINTWISE 3

#define BOHR_SHARP_ODD 4

typedef enum BohrStatus {
  BOHR_STATUS_OK = 0,
  BOHR_STATUS_NULL_POINTER = 1,
  BOHR_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A value outside its admitted range, e.g. `r >= 1`.
   */
  BOHR_STATUS_DOMAIN = 3,
  /**
   * Truncation orders that do not fit together.
   */
  BOHR_STATUS_ORDER = 4,
  /**
   * `a` below the admissibility threshold of a radius statement.
   */
  BOHR_STATUS_INADMISSIBLE = 5,
  BOHR_STATUS_NO_EXTREMAL = 6,
  /**
   * An internal consistency check failed.
   */
  BOHR_STATUS_NUMERIC = 7,
  BOHR_STATUS_PANIC = 99,
} BohrStatus;

/**
 * Opaque verification report.
 */
typedef struct BohrReport BohrReport;

/**
 * Opaque truncated power series.
 */
typedef struct BohrSeries BohrSeries;

/**
 * Radius with its optional fields flattened: `threshold_a` is NaN and
 * `admissible` is -1 when not applicable.
 */
typedef struct BohrRadius {
  double value;
  double residual;
  double threshold_a;
  double binding_cap;
  int admissible;
} BohrRadius;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bohr_last_error(void);

/**
 * Series from `len` coefficients (`im` may be null for real input),
 * truncated at `order`; `len` may not exceed `order + 1`.
 */
enum BohrStatus bohr_series_new(const double *re,
                                const double *im,
                                size_t len,
                                size_t order,
                                struct BohrSeries **out);

/**
 * Disk automorphism `(z + a0) / (1 + conj(a0) z)` with `|a0| < 1`.
 */
enum BohrStatus bohr_series_mobius(double re, double im, size_t order, struct BohrSeries **out);

void bohr_series_free(struct BohrSeries *series);

/**
 * Truncation order, or 0 for a null handle.
 */
size_t bohr_series_order(const struct BohrSeries *series);

/**
 * Coefficient `n`; indices above the order read as zero.
 */
enum BohrStatus bohr_series_coeff(const struct BohrSeries *series,
                                  size_t n,
                                  double *re,
                                  double *im);

enum BohrStatus bohr_series_add(const struct BohrSeries *a,
                                const struct BohrSeries *b,
                                struct BohrSeries **out);

enum BohrStatus bohr_series_mul(const struct BohrSeries *a,
                                const struct BohrSeries *b,
                                struct BohrSeries **out);

/**
 * `outer ∘ inner`; `inner` must vanish at the origin.
 */
enum BohrStatus bohr_series_compose(const struct BohrSeries *outer,
                                    const struct BohrSeries *inner,
                                    struct BohrSeries **out);

enum BohrStatus bohr_series_power(const struct BohrSeries *series,
                                  uint32_t k,
                                  struct BohrSeries **out);

enum BohrStatus bohr_series_derivative(const struct BohrSeries *series, struct BohrSeries **out);

enum BohrStatus bohr_series_integrate(const struct BohrSeries *series, struct BohrSeries **out);

/**
 * `sum |c_k| r^k`, from `k = 1` when `skip_constant` is nonzero.
 */
enum BohrStatus bohr_series_majorant(const struct BohrSeries *series,
                                     double r,
                                     int skip_constant,
                                     double *out);

enum BohrStatus bohr_series_eval(const struct BohrSeries *series,
                                 double re,
                                 double im,
                                 double *out_re,
                                 double *out_im);

/**
 * Radius of kind `BOHR_RADIUS_*`; `a`, `k` and `p` are read only by the
 * kinds that take them.
 */
enum BohrStatus bohr_radius(uint32_t kind, double a, double k, uint32_t p, struct BohrRadius *out);

/**
 * Runs suite `BOHR_SUITE_*` on its default parameter grids. An order of 0
 * selects the default truncation order.
 */
enum BohrStatus bohr_verify(uint32_t suite,
                            size_t trials,
                            uint64_t seed,
                            size_t order,
                            struct BohrReport **out);

/**
 * Sharpness certificate `BOHR_SHARP_*` for `(a, k)`.
 */
enum BohrStatus bohr_sharpness(uint32_t statement,
                               double a,
                               double k,
                               size_t order,
                               struct BohrReport **out);

/**
 * 1 when the report passed, 0 otherwise (including a null handle).
 */
int bohr_report_passed(const struct BohrReport *report);

/**
 * Largest `LHS - RHS` observed, NaN for a null handle.
 */
double bohr_report_max_residual(const struct BohrReport *report);

/**
 * The report as JSON with sorted keys; free with [`bohr_string_free`].
 * Null for a null handle.
 */
char *bohr_report_json(const struct BohrReport *report);

void bohr_report_free(struct BohrReport *report);

void bohr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOHRLAB_H */
