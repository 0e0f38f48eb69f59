#ifndef FCNLAB_H
#define FCNLAB_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Parameter selector, in the order of the Rust enum.
 */
typedef enum FcnKind {
  FCN_KIND_DOM = 0,
  FCN_KIND_IDOM = 1,
  FCN_KIND_TDOM = 2,
  FCN_KIND_CDOM = 3,
  FCN_KIND_DDOM = 4,
  FCN_KIND_TWO_DOM = 5,
  FCN_KIND_DIM = 6,
  FCN_KIND_RDOM = 7,
  FCN_KIND_RIDOM = 8,
  FCN_KIND_RTDOM = 9,
  FCN_KIND_RCDOM = 10,
  FCN_KIND_QDDOM = 11,
} FcnKind;

/**
 * Solver outcome class.
 */
typedef enum FcnSolveStatus {
  FCN_SOLVE_STATUS_EXACT = 0,
  FCN_SOLVE_STATUS_BOUNDS_ONLY = 1,
  FCN_SOLVE_STATUS_INFEASIBLE = 2,
} FcnSolveStatus;

/**
 * Outcome of a call.
 */
typedef enum FcnStatus {
  FCN_STATUS_OK = 0,
  FCN_STATUS_NULL_POINTER = 1,
  FCN_STATUS_INVALID_UTF8 = 2,
  FCN_STATUS_PARSE = 3,
  FCN_STATUS_INVALID_GRAPH = 4,
  FCN_STATUS_INVALID_ARGUMENT = 5,
  FCN_STATUS_UNSUPPORTED = 6,
  FCN_STATUS_TOO_LARGE = 7,
  FCN_STATUS_DIGEST_MISMATCH = 8,
  FCN_STATUS_PANIC = 99,
} FcnStatus;

typedef struct FcnCertificate FcnCertificate;

typedef struct FcnGraph FcnGraph;

typedef struct FcnResult FcnResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next call into the library on the same thread.
 */
const char *fcn_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fcn_string_free(char *s);

/**
 * FCN(`level`).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcnStatus fcn_graph_fcn(uint32_t level, struct FcnGraph **out);

/**
 * Parses a graph from JSON or an edge list.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum FcnStatus fcn_graph_parse(const char *text, struct FcnGraph **out);

/**
 * Rooted product, the root given by label or index.
 *
 * # Safety
 * All pointers must be valid; `root` nul-terminated.
 */
enum FcnStatus fcn_graph_rooted_product(const struct FcnGraph *gamma,
                                        const struct FcnGraph *omega,
                                        const char *root,
                                        struct FcnGraph **out);

/**
 * Number of vertices, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t fcn_graph_order(const struct FcnGraph *g);

/**
 * Number of edges, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t fcn_graph_size(const struct FcnGraph *g);

/**
 * Canonical JSON of the graph.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum FcnStatus fcn_graph_to_json(const struct FcnGraph *g, char **out);

/**
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void fcn_graph_free(struct FcnGraph *g);

/**
 * Minimises `kind` on `g`. A non-positive `time_limit_secs` means no time
 * limit; `exhaustive` additionally enforces the vertex ceiling.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum FcnStatus fcn_solve(const struct FcnGraph *g,
                         enum FcnKind kind,
                         double time_limit_secs,
                         bool exhaustive,
                         uintptr_t threads,
                         struct FcnResult **out);

/**
 * Status and bounds of a result. `upper` is set to `SIZE_MAX` when no set
 * exists.
 *
 * # Safety
 * `r` must be a live handle; output pointers must be valid.
 */
enum FcnStatus fcn_result_bounds(const struct FcnResult *r,
                                 enum FcnSolveStatus *status,
                                 uintptr_t *lower,
                                 uintptr_t *upper);

/**
 * The best set found. Writes null when there is none.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum FcnStatus fcn_result_witness(const struct FcnResult *r, struct FcnCertificate **out);

/**
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum FcnStatus fcn_result_to_json(const struct FcnResult *r, char **out);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void fcn_result_free(struct FcnResult *r);

/**
 * The explicit set for `kind` on FCN(`level`).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcnStatus fcn_construct(enum FcnKind kind, uint32_t level, struct FcnCertificate **out);

/**
 * # Safety
 * `text` must be nul-terminated and `out` a valid pointer.
 */
enum FcnStatus fcn_certificate_parse(const char *text, struct FcnCertificate **out);

/**
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum FcnStatus fcn_certificate_to_json(const struct FcnCertificate *c, char **out);

/**
 * Number of vertices in the certificate, or 0 for null.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
uintptr_t fcn_certificate_size(const struct FcnCertificate *c);

/**
 * Checks the certificate against `g`. `valid` receives the verdict; a digest
 * mismatch is reported as `DigestMismatch`.
 *
 * # Safety
 * Handles must be live and `valid` a valid pointer.
 */
enum FcnStatus fcn_certificate_verify(const struct FcnCertificate *c,
                                      const struct FcnGraph *g,
                                      bool *valid);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void fcn_certificate_free(struct FcnCertificate *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FCNLAB_H */
