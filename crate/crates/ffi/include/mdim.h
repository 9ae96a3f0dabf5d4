#ifndef MDIM_H
#define MDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by all fallible functions.
 */
typedef enum MdimStatus {
  MDIM_STATUS_OK = 0,
  MDIM_STATUS_NULL_POINTER = 1,
  MDIM_STATUS_INVALID_ARGUMENT = 2,
  MDIM_STATUS_PARSE_ERROR = 3,
  MDIM_STATUS_DISCONNECTED = 4,
  MDIM_STATUS_TOO_LARGE = 5,
  MDIM_STATUS_VERIFICATION_FAILED = 6,
  MDIM_STATUS_PANIC = 7,
} MdimStatus;

/**
 * Opaque graph handle.
 */
typedef struct MdimGraph MdimGraph;

/**
 * Opaque solver result handle.
 */
typedef struct MdimResult MdimResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library from the same thread.
 */
const char *mdim_last_error(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ..`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum MdimStatus mdim_graph_from_edges(size_t n,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct MdimGraph **out);

/**
 * Decodes one graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MdimStatus mdim_graph_from_graph6(const char *text, struct MdimGraph **out);

/**
 * Builds a family member from a spec such as `lambda:5,5` or
 * `random_tree:8:seed=3`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum MdimStatus mdim_graph_build_family(const char *spec, struct MdimGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that was not freed yet.
 */
void mdim_graph_free(struct MdimGraph *g);

/**
 * Vertex count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t mdim_graph_order(const struct MdimGraph *g);

/**
 * Edge count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t mdim_graph_edge_count(const struct MdimGraph *g);

/**
 * graph6 encoding without newline; release with [`mdim_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MdimStatus mdim_graph_to_graph6(const struct MdimGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void mdim_string_free(char *s);

/**
 * Whether `vertices` distinguishes every pair of vertices and edges.
 *
 * # Safety
 * `g` must be a live handle, `vertices` must hold `len` values, `out` must
 * be writable.
 */
enum MdimStatus mdim_is_mixed_resolving_set(const struct MdimGraph *g,
                                            const size_t *vertices,
                                            size_t len,
                                            bool *out);

/**
 * Exact mixed metric dimension; release the result with [`mdim_result_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MdimStatus mdim_solve(const struct MdimGraph *g, bool use_pruning, struct MdimResult **out);

/**
 * # Safety
 * `r` must be null or a live result handle.
 */
size_t mdim_result_dimension(const struct MdimResult *r);

/**
 * # Safety
 * `r` must be null or a live result handle.
 */
uint64_t mdim_result_nodes_searched(const struct MdimResult *r);

/**
 * Copies up to `capacity` basis vertices in ascending order into `buf` and
 * returns the basis size, so a short buffer can be detected.
 *
 * # Safety
 * `r` must be null or a live result handle; `buf` must have room for
 * `capacity` values (or be null when `capacity` is 0).
 */
size_t mdim_result_basis(const struct MdimResult *r, size_t *buf, size_t capacity);

/**
 * # Safety
 * `r` must be null or a live result handle, not yet freed.
 */
void mdim_result_free(struct MdimResult *r);

/**
 * Every vertex has a neighbor adjacent to all its other neighbors.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MdimStatus mdim_all_have_maximal_neighbor(const struct MdimGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum MdimStatus mdim_cut_vertex_count(const struct MdimGraph *g, size_t *out);

/**
 * Runs a verification suite by name (`characterization`, `delta`,
 * `g6-uniqueness`, `cut-bound`, `class-formulas`, `products`, `solver`).
 * `trials = 0` selects the default count. Returns
 * `MDIM_STATUS_VERIFICATION_FAILED` when the suite finds a counterexample.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `instances` may be null.
 */
enum MdimStatus mdim_verify_suite(const char *suite,
                                  uint64_t trials,
                                  uint64_t seed,
                                  uint64_t *instances);

/**
 * Seed used by the command-line tool when none is given.
 */
uint64_t mdim_default_seed(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MDIM_H */
