#ifndef SIMPLEXT_H
#define SIMPLEXT_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SxStatus {
  SX_STATUS_OK = 0,
  SX_STATUS_NULL_POINTER = 1,
  SX_STATUS_INVALID_INPUT = 2,
  SX_STATUS_TOO_LARGE = 3,
  SX_STATUS_MODE_INAPPLICABLE = 4,
  SX_STATUS_NOT_ADJACENT = 5,
  // Unbounded, infeasible or otherwise unusable geometry.
  SX_STATUS_GEOMETRY = 6,
  SX_STATUS_INTERNAL = 7,
  SX_STATUS_PANIC = 8,
} SxStatus;

typedef enum SxCoverMode {
  SX_COVER_MODE_EXACT = 0,
  SX_COVER_MODE_SINGLETON = 1,
  SX_COVER_MODE_ISOLATED = 2,
} SxCoverMode;

// Opaque skeleton graph.
typedef struct SxGraph SxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *sx_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void sx_string_free(char *s);

// Graph on `node_count` nodes from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (or may be null
// when `edge_count` is 0); `out` must be writable.
enum SxStatus sx_graph_new(uintptr_t node_count,
                           const uintptr_t *edges,
                           uintptr_t edge_count,
                           struct SxGraph **out);

// Graph from the adjacency-list or edge-list JSON format.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum SxStatus sx_graph_from_json(const char *json, struct SxGraph **out);

// Skeleton of a family given by a `{"family": ..., "params": ...}`
// descriptor.
//
// # Safety
// `descriptor` must be a NUL-terminated string; `out` must be writable.
enum SxStatus sx_graph_from_family(const char *descriptor, struct SxGraph **out);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void sx_graph_free(struct SxGraph *g);

// Node count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t sx_graph_node_count(const struct SxGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t sx_graph_edge_count(const struct SxGraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum SxStatus sx_graph_to_json(const struct SxGraph *g, char **out);

// Closure certificate JSON for the seed nodes.
//
// # Safety
// `g` must be a live handle, `seed` must point to `seed_len` readable
// values and `out` must be writable.
enum SxStatus sx_closure(const struct SxGraph *g,
                         const uintptr_t *seed,
                         uintptr_t seed_len,
                         char **out);

// Lower-bound certificate JSON.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum SxStatus sx_lower_bound(const struct SxGraph *g, enum SxCoverMode mode, char **out);

// Common neighbor of three perfect matchings given as 1-based pair lists;
// writes the result and trace JSON.
//
// # Safety
// The three inputs must be NUL-terminated strings; `out` must be writable.
enum SxStatus sx_common_neighbor(const char *m1, const char *m2, const char *m3, char **out);

// Extension report JSON for a `{"P", "Q", "projection"}` witness.
// A negative `drop_facet` keeps every facet in the covering.
//
// # Safety
// `witness` must be a NUL-terminated string; `out` must be writable.
enum SxStatus sx_verify_extension(const char *witness, int64_t drop_facet, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMPLEXT_H */
