#ifndef MATCHGAP_H
#define MATCHGAP_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MgStatus {
  MG_STATUS_OK = 0,
  MG_STATUS_NULL_POINTER = 1,
  MG_STATUS_INVALID_UTF8 = 2,
  MG_STATUS_PARSE_ERROR = 3,
  MG_STATUS_INVALID_GRAPH = 4,
  MG_STATUS_CAP_EXCEEDED = 5,
  MG_STATUS_UNSUPPORTED_SIZE = 6,
  MG_STATUS_NOT_OPTIMAL = 7,
  MG_STATUS_PRECONDITION = 8,
  MG_STATUS_THEOREM_FALSIFIED = 9,
  MG_STATUS_PANIC = 10,
} MgStatus;

typedef enum MgClass {
  MG_CLASS_NOT_EXTREMAL = 0,
  MG_CLASS_C5_TYPE = 1,
  MG_CLASS_K2K3_TYPE = 2,
  MG_CLASS_TRIANGLE_STAR = 3,
  MG_CLASS_DISJOINT_TRIANGLES = 4,
} MgClass;

typedef enum MgFlavor {
  MG_FLAVOR_ODD_COMPONENT = 0,
  MG_FLAVOR_ISOLATED_VERTEX = 1,
} MgFlavor;

typedef enum MgBound {
  MG_BOUND_GAP = 0,
  MG_BOUND_RATIO = 1,
} MgBound;

/**
 * Opaque graph handle.
 */
typedef struct MgGraph MgGraph;

/**
 * Per-graph bound check. `regime_connected` selects the `(n-2)/6`, `3n/(2n+2)` pair;
 * otherwise the `n/6`, `3/2` pair applies.
 */
typedef struct MgRecord {
  size_t n;
  size_t alpha;
  size_t alpha_f_halves;
  int64_t gap_sixths;
  bool regime_connected;
  bool gap_ok;
  bool ratio_ok;
  bool equality_gap;
  bool equality_ratio;
  enum MgClass extremal;
} MgRecord;

typedef struct MgStats {
  size_t w0;
  size_t w1;
  size_t cycle_count;
  size_t rewrites;
} MgStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread; empty after a success. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *mg_last_error_message(void);

/**
 * Parses one graph6 line into a new handle.
 */
enum MgStatus mg_graph_from_graph6(const char *text, struct MgGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in `pairs`
 * (`2 * edge_count` entries). `pairs` may be null when `edge_count` is zero.
 */
enum MgStatus mg_graph_from_edges(size_t n,
                                  const uint32_t *pairs,
                                  size_t edge_count,
                                  struct MgGraph **out);

/**
 * Releases a handle; null is ignored.
 */
void mg_graph_free(struct MgGraph *graph);

/**
 * Releases a string returned by this library; null is ignored.
 */
void mg_string_free(char *text);

/**
 * Vertex count, or 0 for a null handle.
 */
size_t mg_graph_order(const struct MgGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 */
size_t mg_graph_size(const struct MgGraph *graph);

enum MgStatus mg_graph_to_graph6(const struct MgGraph *graph, char **out);

enum MgStatus mg_matching_number(const struct MgGraph *graph, size_t *out);

/**
 * Twice the fractional matching number.
 */
enum MgStatus mg_alpha_f_halves(const struct MgGraph *graph, size_t *out);

enum MgStatus mg_evaluate(const struct MgGraph *graph, struct MgRecord *out);

/**
 * Maximum-deficiency set as a bitmask (bit `v` set for member `v`) and its value.
 * `cap` bounds `n` for the exhaustive search; values above 20 act as 20.
 */
enum MgStatus mg_deficiency_witness(const struct MgGraph *graph,
                                    enum MgFlavor flavor,
                                    uint32_t cap,
                                    uint64_t *set_mask,
                                    int64_t *value);

/**
 * Statistics of the canonical half-integral optimum.
 */
enum MgStatus mg_canonical_stats(const struct MgGraph *graph, struct MgStats *out);

/**
 * Canonical matching and statistics as JSON: `{"matching": [[u, v, w], ...], "stats": {...}}`.
 */
enum MgStatus mg_canonical_json(const struct MgGraph *graph, char **out);

/**
 * Proof-case certificate as JSON. Needs a connected graph with at least five vertices.
 */
enum MgStatus mg_case_certificate_json(const struct MgGraph *graph, enum MgBound bound, char **out);

/**
 * Library version, static storage.
 */
const char *mg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCHGAP_H */
