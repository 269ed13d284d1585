#ifndef SUPERKM_H
#define SUPERKM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Verdicts written through `int32_t *` out-parameters.
 */
#define SKM_TRUE 1

#define SKM_FALSE 0

#define SKM_INCONCLUSIVE -1

typedef enum SkmBranch {
  SKM_BRANCH_PLUS = 0,
  SKM_BRANCH_MINUS = 1,
} SkmBranch;

typedef enum SkmCheck {
  SKM_CHECK_GCM = 0,
  SKM_CHECK_REGULAR = 1,
  SKM_CHECK_SUBFINITE = 2,
  SKM_CHECK_FINITE_TYPE = 3,
} SkmCheck;

typedef enum SkmStatus {
  SKM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SKM_STATUS_NULL_POINTER = 1,
  /**
   * Malformed JSON, scalar or weight.
   */
  SKM_STATUS_PARSE = 2,
  /**
   * Well-formed input that the operation does not accept.
   */
  SKM_STATUS_INVALID = 3,
  /**
   * The reflection is not defined at this vertex.
   */
  SKM_STATUS_REFUSED = 4,
  SKM_STATUS_INTERNAL = 5,
  SKM_STATUS_UTF8 = 6,
} SkmStatus;

/**
 * Opaque handle: a normalized diagram and the row scales of its source matrix.
 */
typedef struct SkmDiagram SkmDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library.
 */
const char *skm_last_error(void);

/**
 * Parses a diagram file (`{"parity": [...], "matrix": [[...]]}`) and normalizes it.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out_diagram` a writable pointer.
 */
enum SkmStatus skm_diagram_from_json(const char *json, struct SkmDiagram **out_diagram);

/**
 * # Safety
 * `d` must be null or a handle from this library that was not freed yet.
 */
void skm_diagram_free(struct SkmDiagram *d);

/**
 * # Safety
 * `s` must be null or a string returned by this library that was not freed yet.
 */
void skm_string_free(char *s);

/**
 * Number of vertices.
 *
 * # Safety
 * `d` must be a live handle and `out_size` writable.
 */
enum SkmStatus skm_diagram_size(const struct SkmDiagram *d, size_t *out_size);

/**
 * The normalized diagram in the file format.
 *
 * # Safety
 * `d` must be a live handle and `out_json` writable.
 */
enum SkmStatus skm_diagram_to_json(const struct SkmDiagram *d, char **out_json);

/**
 * Odd reflection at the 0-based `vertex`; the result is a new handle whose
 * weights are read on its normalized coroots.
 *
 * # Safety
 * `d` must be a live handle and `out_diagram` writable.
 */
enum SkmStatus skm_odd_reflect(const struct SkmDiagram *d,
                               size_t vertex,
                               struct SkmDiagram **out_diagram);

/**
 * Runs one decision procedure; `out_verdict` receives `SKM_TRUE`,
 * `SKM_FALSE` or `SKM_INCONCLUSIVE`.
 *
 * # Safety
 * `d` must be a live handle and `out_verdict` writable.
 */
enum SkmStatus skm_check(const struct SkmDiagram *d,
                         enum SkmCheck what,
                         size_t max_depth,
                         int32_t *out_verdict);

/**
 * Family label such as `"B(2,1)"` or `"S(1,2,α) with α=p"`; `"Unknown"` when
 * nothing matches.
 *
 * # Safety
 * `d` must be a live handle and `out_label` writable.
 */
enum SkmStatus skm_classify(const struct SkmDiagram *d, char **out_label);

/**
 * Solves for `Q±(m,n,t)`. The diagram handle and a JSON report (entries,
 * determinant, growth, hyperbolicity) are returned; either output may be null.
 *
 * # Safety
 * Non-null output pointers must be writable.
 */
enum SkmStatus skm_qmnt_solve(int64_t m,
                              int64_t n,
                              int64_t t,
                              enum SkmBranch branch,
                              struct SkmDiagram **out_diagram,
                              char **out_report);

/**
 * Integrability of `L(lambda)`. `weight` is a comma-separated list of scalar
 * expressions, one per vertex, on the coroots of the rows the handle was
 * parsed from.
 *
 * # Safety
 * `d` must be a live handle, `weight` a nul-terminated string and
 * `out_verdict` writable.
 */
enum SkmStatus skm_integrable(const struct SkmDiagram *d,
                              const char *weight,
                              size_t max_depth,
                              int32_t *out_verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERKM_H */
