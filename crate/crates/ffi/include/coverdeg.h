#ifndef COVERDEG_H
#define COVERDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum CdStatus {
  CD_STATUS_OK = 0,
  CD_STATUS_NULL_POINTER = 1,
  // Malformed graph6 or edge data.
  CD_STATUS_PARSE = 2,
  // Vertex label or count out of range.
  CD_STATUS_OUT_OF_RANGE = 3,
  // Input exceeds a computational size guard.
  CD_STATUS_GUARD = 4,
  // The graph does not meet the operation's requirements.
  CD_STATUS_PRECONDITION = 5,
  // A value does not fit the output type.
  CD_STATUS_OVERFLOW = 6,
  // The caller's buffer is too small; the needed size was reported.
  CD_STATUS_BUFFER_TOO_SMALL = 7,
  CD_STATUS_PANIC = 8,
} CdStatus;

// Opaque graph handle.
typedef struct CdGraph CdGraph;

// Invariants that need no homology computation.
typedef struct CdBundle {
  size_t n;
  size_t alpha;
  // Multiplicity of −1 as a root of the independence polynomial.
  size_t m;
  // Alternating sum of the independence numbers, `1 − P(−1)`.
  int64_t g_g;
  // Independent domination number.
  size_t i;
  size_t deg_h_edge;
  // Zero for edgeless graphs, where it is undefined.
  size_t deg_h_cover;
  int64_t a_invariant_cover;
  bool has_edge;
} CdBundle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *cd_version(void);

// Message for the last failed call on this thread, or NULL. Valid until
// the next call into the library from the same thread.
const char *cd_last_error(void);

// Parses one graph6 string.
//
// # Safety
// `s` must be NULL or a valid NUL-terminated string; `out` must be NULL or
// writable.
enum CdStatus cd_graph_from_graph6(const char *s, struct CdGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be NULL
// when `edge_count` is 0); `out` must be NULL or writable.
enum CdStatus cd_graph_from_edges(size_t n,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  struct CdGraph **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle from this library not yet freed.
void cd_graph_free(struct CdGraph *g);

// Vertex count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t cd_graph_vertex_count(const struct CdGraph *g);

// Edge count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t cd_graph_edge_count(const struct CdGraph *g);

// Writes the graph6 encoding with a trailing NUL. `needed` (if not NULL)
// receives the buffer size required, NUL included.
//
// # Safety
// `buf` must be NULL or hold `cap` writable bytes.
enum CdStatus cd_graph_to_graph6(const struct CdGraph *g, char *buf, size_t cap, size_t *needed);

// Coefficients `g_0..g_α` of the independence polynomial. `len` receives
// `α + 1`; with a short buffer the call fails and writes nothing else.
//
// # Safety
// `coeffs` must be NULL or hold `cap` writable values; `len` must be
// writable.
enum CdStatus cd_independence_poly(const struct CdGraph *g,
                                   int64_t *coeffs,
                                   size_t cap,
                                   size_t *len);

// Polynomial-level invariants and `i(G)` (the latter limited to 32
// vertices).
//
// # Safety
// `out` must be NULL or writable.
enum CdStatus cd_bundle(const struct CdGraph *g, struct CdBundle *out);

// Projective dimension of `R/I(G)` from Hochster's formula over the
// rationals (`prime == 0`) or GF(`prime`).
//
// # Safety
// `out` must be NULL or writable.
enum CdStatus cd_pdim_edge(const struct CdGraph *g, uint64_t prime, size_t *out);

// `reg(R/J(G))`; the graph needs at least one edge.
//
// # Safety
// `out` must be NULL or writable.
enum CdStatus cd_reg_cover(const struct CdGraph *g, uint64_t prime, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COVERDEG_H */
