#ifndef MQ_FFI_H
#define MQ_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MqStatus {
  MQ_STATUS_OK = 0,
  MQ_STATUS_NULL_POINTER = 1,
  MQ_STATUS_INVALID_ARGUMENT = 2,
  MQ_STATUS_CONFIG_ERROR = 3,
  MQ_STATUS_EXHAUSTED_RESAMPLES = 4,
  MQ_STATUS_COMPUTATION_ERROR = 5,
  MQ_STATUS_NOT_FOUND = 6,
  MQ_STATUS_PANIC = 7,
} MqStatus;

typedef enum MqCheckStatus {
  MQ_CHECK_STATUS_PASS = 0,
  MQ_CHECK_STATUS_FAIL = 1,
  MQ_CHECK_STATUS_ASSUMPTION = 2,
} MqCheckStatus;

/**
 * Opaque verification report.
 */
typedef struct MqReport MqReport;

typedef struct MqCurveCertificate {
  uint64_t prime;
  uint64_t zeta_image;
  uint64_t points_enumerated;
  uint64_t points_found;
  uint64_t singular_points;
  uint64_t orbit_count;
  bool all_smooth;
  bool free_orbits;
  bool hasse_weil_ok;
  bool resultant_nonzero;
  bool coordinate_points_excluded;
  bool valid;
} MqCurveCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Runs the pipeline on forms sampled from `seed`.
 *
 * `primes` may be null when `n_primes` is 0, which selects the default
 * primes 7 and 13. `max_resamples` of 0 selects the default (100).
 *
 * # Safety
 * `primes` must point to `n_primes` readable values and `out` must be a
 * valid pointer to write the handle to.
 */
enum MqStatus mq_report_run(uint64_t seed,
                            const uint64_t *primes,
                            size_t n_primes,
                            uint32_t max_resamples,
                            struct MqReport **out);

/**
 * Runs the pipeline on explicit forms r (degree 2) and s (degree 3) in
 * x0, x1, given as text (`"2*x0^2 + x1^2"`) or JSON.
 *
 * # Safety
 * `r` and `s` must be NUL-terminated strings; `primes` and `out` as in
 * [`mq_report_run`].
 */
enum MqStatus mq_report_run_explicit(const char *r,
                                     const char *s,
                                     const uint64_t *primes,
                                     size_t n_primes,
                                     struct MqReport **out);

/**
 * Whether no check failed. A null handle reports false.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
bool mq_report_overall(const struct MqReport *report);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
size_t mq_report_check_count(const struct MqReport *report);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
size_t mq_report_fail_count(const struct MqReport *report);

/**
 * Looks up the status of the check with the given id.
 *
 * # Safety
 * `report` must be a live handle, `id` a NUL-terminated string and `out`
 * writable.
 */
enum MqStatus mq_report_check_status(const struct MqReport *report,
                                     const char *id,
                                     enum MqCheckStatus *out);

/**
 * Renders the report as JSON. Free the string with [`mq_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum MqStatus mq_report_to_json(const struct MqReport *report, char **out);

/**
 * Renders the report as a text table. Free the string with
 * [`mq_string_free`].
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
enum MqStatus mq_report_to_text(const struct MqReport *report, char **out);

/**
 * # Safety
 * `report` must be null or a handle from `mq_report_run*` not yet freed.
 */
void mq_report_free(struct MqReport *report);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void mq_string_free(char *s);

/**
 * Number of subgroups of order q in (Z/q)^rank.
 *
 * # Safety
 * `out` must be writable.
 */
enum MqStatus mq_count_order_q_subgroups(uint64_t q, uint32_t rank, uint64_t *out);

/**
 * Samples forms from `seed` (resampling until the curve is certified at
 * `prime`) and returns the certificate over F_prime.
 *
 * # Safety
 * `out` must be writable.
 */
enum MqStatus mq_certify_seed(uint64_t seed, uint64_t prime, struct MqCurveCertificate *out);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *mq_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MQ_FFI_H */
