#ifndef MOSTAR_H
#define MOSTAR_H

/* Generated by cbindgen from the mostar-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum MostarStatus {
  MOSTAR_OK = 0,
  // A required pointer argument was null.
  MOSTAR_NULL_ARGUMENT = 1,
  // A parameter was out of range for the operation.
  MOSTAR_INVALID_ARGUMENT = 2,
  // The edge list contained a self-loop.
  MOSTAR_SELF_LOOP = 3,
  // An endpoint was outside `0..order`.
  MOSTAR_VERTEX_OUT_OF_RANGE = 4,
  // The requested index is undefined on a disconnected graph.
  MOSTAR_DISCONNECTED = 5,
  // Unknown family name or bad family parameters.
  MOSTAR_BAD_FAMILY = 6,
  // The edge-list text did not parse.
  MOSTAR_PARSE_ERROR = 7,
  // The caller-provided buffer is too small; the required size is
  // reported through the out-parameter.
  MOSTAR_BUFFER_TOO_SMALL = 8,
} MostarStatus;

// Opaque graph handle.
typedef struct MostarGraph MostarGraph;

// One row of the per-edge contribution table.
typedef struct MostarEdgeContribution {
  uint32_t u;
  uint32_t v;
  uint64_t n_u;
  uint64_t n_v;
  uint64_t contribution;
} MostarEdgeContribution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version string; static storage, do not free.
const char *mostar_version(void);

// Builds a graph from `edge_count` vertex pairs laid out as
// `u0, v0, u1, v1, ...`. Duplicate pairs collapse; self-loops are
// rejected. `edges` may be null when `edge_count` is zero.
//
// # Safety
// `edges` must point to `2 * edge_count` readable `uint32_t`s (or be
// null when `edge_count == 0`), and `out` must be a valid pointer.
enum MostarStatus mostar_graph_build(uint32_t order,
                                     const uint32_t *edges,
                                     size_t edge_count,
                                     struct MostarGraph **out);

// Parses the canonical edge-list text format.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum MostarStatus mostar_graph_parse(const char *text, struct MostarGraph **out);

// Generates a named family member. `name` is one of the CLI family names
// (`path`, `cycle`, `complete`, `complete-bipartite`, `empty`, `star`,
// `wheel`, `fan`, `hypercube`, `hamming`, `grid`, `ladder`, `friendship`,
// `cone`, `bridge-path`, `bridge-cycle`).
//
// # Safety
// `name` must be NUL-terminated, `params` must point to `param_count`
// readable values (or be null when `param_count == 0`), and `out` must be
// valid.
enum MostarStatus mostar_generate(const char *name,
                                  const uint32_t *params,
                                  size_t param_count,
                                  struct MostarGraph **out);

// Frees a handle; null is a no-op.
//
// # Safety
// `handle` must have come from this library and not be freed twice.
void mostar_graph_free(struct MostarGraph *handle);

// Vertex count; zero if the handle is null.
//
// # Safety
// See [`mostar_graph_free`] for handle validity.
uint32_t mostar_graph_order(const struct MostarGraph *handle);

// Edge count; zero if the handle is null.
//
// # Safety
// See [`mostar_graph_free`] for handle validity.
uint32_t mostar_graph_size(const struct MostarGraph *handle);

// # Safety
// Valid handle (or null) and valid `out`.
enum MostarStatus mostar_graph_degree(const struct MostarGraph *handle,
                                      uint32_t vertex,
                                      uint32_t *out);

// # Safety
// Valid handle (or null) and valid `out`.
enum MostarStatus mostar_graph_is_connected(const struct MostarGraph *handle, bool *out);

// The Mostar index of a connected graph.
//
// # Safety
// Valid handle (or null) and valid `out`.
enum MostarStatus mostar_index(const struct MostarGraph *handle, uint64_t *out);

// Albertson irregularity (defined for disconnected graphs too).
//
// # Safety
// Valid handle (or null) and valid `out`.
enum MostarStatus mostar_albertson_irregularity(const struct MostarGraph *handle, uint64_t *out);

// Total irregularity (defined for disconnected graphs too).
//
// # Safety
// Valid handle (or null) and valid `out`.
enum MostarStatus mostar_total_irregularity(const struct MostarGraph *handle, uint64_t *out);

// Fills `rows` with the per-edge contribution table. `capacity` is the
// row capacity of `rows`; on return `written` holds the number of rows
// the table needs. Returns `MostarBufferTooSmall` (after setting
// `written`) when the capacity does not suffice.
//
// # Safety
// `rows` must point to `capacity` writable rows (or be null when
// `capacity == 0`); `written` must be valid.
enum MostarStatus mostar_edge_contributions(const struct MostarGraph *handle,
                                            struct MostarEdgeContribution *rows,
                                            size_t capacity,
                                            size_t *written);

// Renders the canonical edge-list text into `buf` (NUL-terminated).
// `written` receives the required byte count including the terminator;
// returns `MostarBufferTooSmall` when `capacity` does not suffice.
//
// # Safety
// `buf` must point to `capacity` writable bytes (or be null when
// `capacity == 0`); `written` must be valid.
enum MostarStatus mostar_graph_render(const struct MostarGraph *handle,
                                      char *buf,
                                      size_t capacity,
                                      size_t *written);

// Corona product: one copy of `a`, `order(a)` copies of `b`.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_corona(const struct MostarGraph *a,
                                const struct MostarGraph *b,
                                struct MostarGraph **out);

// Cartesian product.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_cartesian(const struct MostarGraph *a,
                                   const struct MostarGraph *b,
                                   struct MostarGraph **out);

// Join: disjoint union plus all cross edges.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_join(const struct MostarGraph *a,
                              const struct MostarGraph *b,
                              struct MostarGraph **out);

// Lexicographic product `a[b]`.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_lexicographic(const struct MostarGraph *a,
                                       const struct MostarGraph *b,
                                       struct MostarGraph **out);

// Indu-Bala product: two joined copies with matched second factors.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_indu_bala(const struct MostarGraph *a,
                                   const struct MostarGraph *b,
                                   struct MostarGraph **out);

// Disjoint union; ids of `b` are shifted by `order(a)`.
//
// # Safety
// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
// be a valid pointer.
enum MostarStatus mostar_disjoint_union(const struct MostarGraph *a,
                                        const struct MostarGraph *b,
                                        struct MostarGraph **out);

// Thorn graph: `m` pendant vertices on every vertex of `a`.
//
// # Safety
// Valid handle and out-pointer (see `mostar_graph_free`).
enum MostarStatus mostar_thorn(const struct MostarGraph *a, uint32_t m, struct MostarGraph **out);

// Subdivision: one inserted vertex per edge.
//
// # Safety
// Valid handle and out-pointer (see `mostar_graph_free`).
enum MostarStatus mostar_subdivision(const struct MostarGraph *a, struct MostarGraph **out);

// Subdivision vertex-edge join of `a` with `b` (joined to primary
// vertices) and `c` (joined to inserted vertices). `b` and `c` may each
// be null for the one-sided joins.
//
// # Safety
// Non-null handles must be valid; `out` must be a valid pointer.
enum MostarStatus mostar_sve_join(const struct MostarGraph *a,
                                  const struct MostarGraph *b,
                                  const struct MostarGraph *c,
                                  struct MostarGraph **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MOSTAR_H */
