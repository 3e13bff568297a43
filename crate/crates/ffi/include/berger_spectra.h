#ifndef BERGER_SPECTRA_H
#define BERGER_SPECTRA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum BergerStatus {
  BERGER_STATUS_OK = 0,
  BERGER_STATUS_NULL_POINTER = 1,
  BERGER_STATUS_INVALID_INPUT = 2,
  BERGER_STATUS_DOMAIN = 3,
  BERGER_STATUS_UNSUPPORTED = 4,
  BERGER_STATUS_OUT_OF_SCOPE = 5,
  BERGER_STATUS_TRUNCATION = 6,
  BERGER_STATUS_CAP_EXCEEDED = 7,
  BERGER_STATUS_OVERFLOW = 8,
  BERGER_STATUS_PANIC = 9,
} BergerStatus;

typedef enum BergerVerdict {
  BERGER_VERDICT_STABLE = 0,
  BERGER_VERDICT_UNSTABLE = 1,
  BERGER_VERDICT_BOUNDARY = 2,
  BERGER_VERDICT_UNDETERMINED = 3,
} BergerVerdict;

typedef struct BergerIndexReport BergerIndexReport;

typedef struct BergerModel BergerModel;

/**
 * Exact τ² in (0, 1].
 */
typedef struct BergerParam BergerParam;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *berger_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library or be NULL.
 */
void berger_string_free(char *s);

/**
 * τ² = num/den.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_param_new(int64_t num, int64_t den, struct BergerParam **out);

/**
 * τ² from text such as "3/10". Decimal input is refused.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BergerStatus berger_param_parse(const char *text, struct BergerParam **out);

/**
 * Reduced numerator and denominator of τ².
 *
 * # Safety
 * `param` must be a live handle; `num` and `den` valid pointers.
 */
enum BergerStatus berger_param_tau_sq(const struct BergerParam *param, int64_t *num, int64_t *den);

/**
 * # Safety
 * `param` must come from this library or be NULL; it is invalid afterwards.
 */
void berger_param_free(struct BergerParam *param);

/**
 * Totally geodesic S^{2m+1} in S^{2n+1}, m < n.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_model_tg_berger(uint32_t n, uint32_t m, struct BergerModel **out);

/**
 * Hopf circle covered s times, in S^{2n+1}.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_model_circle(uint32_t n, uint32_t s, struct BergerModel **out);

/**
 * RP³ (`quotient` true) or S³ over the Veronese surface.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_model_veronese(bool quotient, struct BergerModel **out);

/**
 * Real great sphere S^d in S^{2n+1}, 1 ≤ d ≤ n.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_model_totally_real(uint32_t n, uint32_t d, struct BergerModel **out);

/**
 * Minimal Clifford hypersurface S^{2m1+1} × S^{2m2+1}.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BergerStatus berger_model_clifford(uint32_t m1, uint32_t m2, struct BergerModel **out);

/**
 * Dimension of the submanifold, 0 for NULL.
 *
 * # Safety
 * `model` must be a live handle or NULL.
 */
uint32_t berger_model_dim(const struct BergerModel *model);

/**
 * # Safety
 * `model` must come from this library or be NULL; it is invalid afterwards.
 */
void berger_model_free(struct BergerModel *model);

/**
 * Index and nullity with an automatically certified truncation.
 *
 * # Safety
 * `model` and `param` must be live handles; `out` a valid pointer.
 */
enum BergerStatus berger_index(const struct BergerModel *model,
                               const struct BergerParam *param,
                               struct BergerIndexReport **out);

/**
 * As [`berger_index`] with a fixed truncation; fails with `Truncation` if
 * it is not certified.
 *
 * # Safety
 * `model` and `param` must be live handles; `out` a valid pointer.
 */
enum BergerStatus berger_index_with_kmax(const struct BergerModel *model,
                                         const struct BergerParam *param,
                                         uint32_t k_max,
                                         struct BergerIndexReport **out);

/**
 * # Safety
 * `report` must be a live handle; the out pointers valid.
 */
enum BergerStatus berger_report_counts(const struct BergerIndexReport *report,
                                       uint64_t *index,
                                       uint64_t *nullity);

/**
 * Number of nonpositive modes, 0 for NULL.
 *
 * # Safety
 * `report` must be a live handle or NULL.
 */
uintptr_t berger_report_mode_count(const struct BergerIndexReport *report);

/**
 * Value (rounded to double) and multiplicity of nonpositive mode `i`, in
 * ascending order.
 *
 * # Safety
 * `report` must be a live handle; the out pointers valid.
 */
enum BergerStatus berger_report_mode(const struct BergerIndexReport *report,
                                     uintptr_t i,
                                     double *value,
                                     uint64_t *multiplicity);

/**
 * The full report as JSON; free with [`berger_string_free`].
 *
 * # Safety
 * `report` must be a live handle; `out` a valid pointer.
 */
enum BergerStatus berger_report_json(const struct BergerIndexReport *report, char **out);

/**
 * # Safety
 * `report` must come from this library or be NULL; it is invalid afterwards.
 */
void berger_report_free(struct BergerIndexReport *report);

/**
 * μ_{k,p} of the Berger sphere S^{2n+1} as an exact fraction, and its multiplicity.
 *
 * # Safety
 * `param` must be a live handle; the out pointers valid.
 */
enum BergerStatus berger_laplace_eigenvalue(uint32_t n,
                                            const struct BergerParam *param,
                                            uint32_t k,
                                            uint32_t p,
                                            int64_t *num,
                                            int64_t *den,
                                            uint64_t *multiplicity);

/**
 * Verdict for a library model, theorems first and the spectrum where they are silent.
 *
 * # Safety
 * `model` and `param` must be live handles; `out` a valid pointer.
 */
enum BergerStatus berger_stability(const struct BergerModel *model,
                                   const struct BergerParam *param,
                                   enum BergerVerdict *out);

/**
 * Moduli vector (x, y) of the minimal Clifford torus.
 *
 * # Safety
 * `param` must be a live handle; the out pointers valid.
 */
enum BergerStatus berger_moduli_vector(const struct BergerParam *param, double *x, double *y);

/**
 * Exact sign (-1, 0, 1) of the proof polynomial at x = x_num/x_den.
 *
 * # Safety
 * `param` must be a live handle; `sign` a valid pointer.
 */
enum BergerStatus berger_proof_polynomial_sign(uint32_t d,
                                               uint32_t q_,
                                               const struct BergerParam *param,
                                               int64_t x_num,
                                               int64_t x_den,
                                               int32_t *sign);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BERGER_SPECTRA_H */
