#ifndef CPG_H
#define CPG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum CpgPointKind {
  CPG_POINT_KIND_FREE_POINT = 0,
  CPG_POINT_KIND_PLAIN_CONTACT = 1,
  /**
   * Endpoint of two paths, straight interior point of a third.
   */
  CPG_POINT_KIND_TYPE2A = 2,
  /**
   * Endpoint of two paths, bendpoint of a third.
   */
  CPG_POINT_KIND_TYPE2B = 3,
  CPG_POINT_KIND_OTHER_CONFIGURATION = 4,
} CpgPointKind;

typedef enum CpgStatus {
  CPG_STATUS_OK = 0,
  CPG_STATUS_NULL_POINTER = 1,
  CPG_STATUS_INVALID_UTF8 = 2,
  CPG_STATUS_PARSE_ERROR = 3,
  CPG_STATUS_INVALID_REPRESENTATION = 4,
  CPG_STATUS_VERTEX_SET_MISMATCH = 5,
  CPG_STATUS_NOT_FOUND = 6,
  CPG_STATUS_BUDGET_EXHAUSTED = 7,
  CPG_STATUS_INTERNAL = 8,
} CpgStatus;

/**
 * Opaque graph handle.
 */
typedef struct CpgGraph CpgGraph;

/**
 * Opaque representation handle.
 */
typedef struct CpgRep CpgRep;

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next `cpg_*` call on the same thread.
 */
const char *cpg_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void cpg_string_free(char *s);

/**
 * Builds the graph `G_k`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum CpgStatus cpg_graph_generate_gk(uint32_t k, struct CpgGraph **out);

/**
 * Parses a `cpg-graph v1` document.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum CpgStatus cpg_graph_parse(const char *text, struct CpgGraph **out);

/**
 * Serializes a graph in the canonical text format.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_graph_to_text(const struct CpgGraph *g, char **out);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cpg_graph_vertex_count(const struct CpgGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cpg_graph_edge_count(const struct CpgGraph *g);

/**
 * True iff both handles are non-null and the graphs are equal as labeled
 * graphs.
 *
 * # Safety
 * Both arguments must be NULL or live handles.
 */
bool cpg_graph_equal(const struct CpgGraph *a, const struct CpgGraph *b);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void cpg_graph_free(struct CpgGraph *g);

/**
 * Builds the canonical `(k+1)`-bend representation of `G_k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CpgStatus cpg_rep_build(uint32_t k, struct CpgRep **out);

/**
 * Parses a representation JSON document.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum CpgStatus cpg_rep_parse(const char *text, struct CpgRep **out);

/**
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_rep_to_json(const struct CpgRep *rep, char **out);

/**
 * Writes the number of violations; also sets the last-error message to the
 * first violation when there are any.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_rep_violation_count(const struct CpgRep *rep, size_t *out);

/**
 * # Safety
 * `rep` must be NULL or a live handle.
 */
size_t cpg_rep_max_bend(const struct CpgRep *rep);

/**
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_rep_contact_graph(const struct CpgRep *rep, struct CpgGraph **out);

/**
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_rep_classify_point(const struct CpgRep *rep,
                                      int64_t x,
                                      int64_t y,
                                      enum CpgPointKind *out);

/**
 * # Safety
 * `rep` must be NULL or a handle not yet freed.
 */
void cpg_rep_free(struct CpgRep *rep);

/**
 * Audits `rep` as a representation of `G_k`. `out_text` may be NULL.
 *
 * # Safety
 * `rep` must be a live handle; `out_all_ok` must be writable; `out_text`
 * must be NULL or writable.
 */
enum CpgStatus cpg_audit_gk(const struct CpgRep *rep,
                            uint32_t k,
                            bool *out_all_ok,
                            char **out_text);

/**
 * Face count of the planar rotation system of `G_k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CpgStatus cpg_gk_face_count(uint32_t k, size_t *out);

/**
 * Bounded search on a `width x height` point grid. Returns `NotFound` when
 * the space is exhausted and `BudgetExhausted` when `node_budget` runs out.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CpgStatus cpg_search(const struct CpgGraph *g,
                          uint32_t width,
                          uint32_t height,
                          uint32_t bend_budget,
                          uint64_t node_budget,
                          struct CpgRep **out);

#endif  /* CPG_H */
