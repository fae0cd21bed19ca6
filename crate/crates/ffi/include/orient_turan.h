#ifndef ORIENT_TURAN_H
#define ORIENT_TURAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum OtStatus {
  OT_STATUS_OK = 0,
  OT_STATUS_NULL_POINTER = 1,
  OT_STATUS_INVALID_INPUT = 2,
  OT_STATUS_PARSE = 3,
  OT_STATUS_DOMAIN = 4,
  OT_STATUS_CAPACITY = 5,
  OT_STATUS_BUDGET = 6,
  OT_STATUS_OVERFLOW = 7,
  OT_STATUS_INTERNAL = 8,
} OtStatus;

/**
 * An oriented graph.
 */
typedef struct OtGraph OtGraph;

/**
 * A pattern graph with its precomputed search data.
 */
typedef struct OtPattern OtPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ot_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ot_string_free(char *s);

/**
 * Parses a NUL-terminated digraph6 string.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum OtStatus ot_graph_from_digraph6(const char *text, struct OtGraph **out);

/**
 * An arcless graph on `n` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum OtStatus ot_graph_empty(size_t n, struct OtGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum OtStatus ot_transitive_tournament(size_t r, struct OtGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum OtStatus ot_directed_cycle(size_t k, struct OtGraph **out);

/**
 * Releases a graph. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void ot_graph_free(struct OtGraph *g);

/**
 * Adds the arc `u -> v`.
 *
 * # Safety
 * `g` must be a live graph handle.
 */
enum OtStatus ot_graph_add_arc(struct OtGraph *g, size_t u, size_t v);

/**
 * Number of vertices, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t ot_graph_order(const struct OtGraph *g);

/**
 * Number of arcs, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t ot_graph_arc_count(const struct OtGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
bool ot_graph_has_arc(const struct OtGraph *g, size_t u, size_t v);

/**
 * digraph6 encoding; free with [`ot_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_graph_to_digraph6(const struct OtGraph *g, char **out);

/**
 * Canonical form (orders up to 10); free with [`ot_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_graph_canonical_form(const struct OtGraph *g, char **out);

/**
 * Copies of the transitive tournament `TT_r`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_count_tt(const struct OtGraph *g, size_t r, uint64_t *out);

/**
 * Copies of the antidirected `K_{s,t}` (s sources, t sinks).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_count_kst(const struct OtGraph *g, size_t s, size_t t, uint64_t *out);

/**
 * Copies of the out-star with `t` leaves.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_count_out_stars(const struct OtGraph *g, size_t t, uint64_t *out);

/**
 * A pattern with the same arcs as `g` (which stays owned by the caller).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum OtStatus ot_pattern_from_graph(const struct OtGraph *g, struct OtPattern **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum OtStatus ot_pattern_transitive(size_t r, struct OtPattern **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum OtStatus ot_pattern_kst(size_t s, size_t t, struct OtPattern **out);

/**
 * Releases a pattern. NULL is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void ot_pattern_free(struct OtPattern *p);

/**
 * # Safety
 * `p` must be NULL or a live pattern handle.
 */
size_t ot_pattern_order(const struct OtPattern *p);

/**
 * # Safety
 * `p` must be NULL or a live pattern handle.
 */
uint64_t ot_pattern_automorphism_count(const struct OtPattern *p);

/**
 * Unlabelled copies of `p` in `g`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum OtStatus ot_count_copies(const struct OtGraph *g, const struct OtPattern *p, uint64_t *out);

/**
 * Whether an arc-preserving map from `p` into `g` exists.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum OtStatus ot_has_homomorphism(const struct OtPattern *p, const struct OtGraph *g, bool *out);

/**
 * Compressibility of `p` probed up to `k_max <= 7`; writes 0 when it exceeds `k_max`.
 *
 * # Safety
 * `p` must be live; `out` must be writable.
 */
enum OtStatus ot_compressibility(const struct OtPattern *p, size_t k_max, size_t *out);

/**
 * `exo(n, p)` by exact search. `max_nodes = 0` means unlimited; if the
 * budget runs out `*exact` is false and `*value` is a lower bound.
 *
 * # Safety
 * `p` must be live; `value` and `exact` must be writable.
 */
enum OtStatus ot_exo_exact(size_t n,
                           const struct OtPattern *p,
                           uint64_t max_nodes,
                           size_t *value,
                           bool *exact);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORIENT_TURAN_H */
