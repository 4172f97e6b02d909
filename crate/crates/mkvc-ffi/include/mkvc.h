#ifndef MKVC_H
#define MKVC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum MkvcStatus {
  MKVC_STATUS_OK = 0,
  MKVC_STATUS_NULL_ARGUMENT = 1,
  MKVC_STATUS_INVALID_UTF8 = 2,
  MKVC_STATUS_PARSE_ERROR = 3,
  MKVC_STATUS_INVALID_K = 4,
  MKVC_STATUS_CAP_EXCEEDED = 5,
  MKVC_STATUS_INVALID_PARAMS = 6,
} MkvcStatus;

// Opaque graph handle.
typedef struct MkvcGraph MkvcGraph;

// Opaque solution handle.
typedef struct MkvcSolution MkvcSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer is
// valid until the next failing mkvc call on the same thread.
const char *mkvc_last_error_message(void);

// Parses a graph from `bkvc` text.
//
// # Safety
// `text` must be a valid NUL-terminated C string; `out` must be a valid
// pointer. On success `*out` owns a graph that must be released with
// [`mkvc_graph_free`].
enum MkvcStatus mkvc_graph_parse(const char *text, struct MkvcGraph **out);

// Generates a bipartite G(nA, nB, p) instance.
//
// # Safety
// `out` must be a valid pointer; the result must be freed with
// [`mkvc_graph_free`].
enum MkvcStatus mkvc_graph_gnp(uintptr_t n_a,
                               uintptr_t n_b,
                               double p,
                               uint64_t seed,
                               struct MkvcGraph **out);

// Generates a semi-regular instance (every A-degree `dA`, every B-degree `dB`).
//
// # Safety
// As [`mkvc_graph_gnp`].
enum MkvcStatus mkvc_graph_semiregular(uintptr_t n_a,
                                       uintptr_t n_b,
                                       uintptr_t d_a,
                                       uintptr_t d_b,
                                       uint64_t seed,
                                       struct MkvcGraph **out);

// Generates a planted-cover stress instance; `out_k` receives the planted
// budget `k1 + k2`.
//
// # Safety
// `out` and `out_k` must be valid pointers; the graph must be freed with
// [`mkvc_graph_free`].
enum MkvcStatus mkvc_graph_planted(uintptr_t n_a,
                                   uintptr_t n_b,
                                   uintptr_t k1,
                                   uintptr_t k2,
                                   uintptr_t d_hub,
                                   uintptr_t d_noise,
                                   uint64_t seed,
                                   struct MkvcGraph **out,
                                   uintptr_t *out_k);

// # Safety
// `graph` must be a live handle from this library.
uintptr_t mkvc_graph_na(const struct MkvcGraph *graph);

// # Safety
// `graph` must be a live handle from this library.
uintptr_t mkvc_graph_nb(const struct MkvcGraph *graph);

// # Safety
// `graph` must be a live handle from this library.
uintptr_t mkvc_graph_m(const struct MkvcGraph *graph);

// Serializes the graph back to canonical `bkvc` text. The returned string
// must be released with [`mkvc_string_free`].
//
// # Safety
// `graph` must be a live handle from this library.
char *mkvc_graph_to_text(const struct MkvcGraph *graph);

// # Safety
// `graph` must come from this library and not have been freed already.
void mkvc_graph_free(struct MkvcGraph *graph);

// # Safety
// `s` must come from [`mkvc_graph_to_text`] and not have been freed already.
void mkvc_string_free(char *s);

// Runs the 0.7-approximation split solver.
//
// # Safety
// `graph` must be a live handle; `out` must be valid and the solution freed
// with [`mkvc_solution_free`].
enum MkvcStatus mkvc_solve_comb07(const struct MkvcGraph *graph,
                                  uintptr_t k,
                                  struct MkvcSolution **out);

// Runs the greedy baseline.
//
// # Safety
// As [`mkvc_solve_comb07`].
enum MkvcStatus mkvc_solve_greedy(const struct MkvcGraph *graph,
                                  uintptr_t k,
                                  struct MkvcSolution **out);

// Runs the exact solver; refuses when the smaller side exceeds `cap`.
//
// # Safety
// As [`mkvc_solve_comb07`].
enum MkvcStatus mkvc_solve_exact(const struct MkvcGraph *graph,
                                 uintptr_t k,
                                 uintptr_t cap,
                                 struct MkvcSolution **out);

// Checks `10·comb07 >= 7·exact` on one instance. `out_holds` receives 1 or 0.
//
// # Safety
// `graph` must be a live handle; `out_alg`, `out_opt`, `out_holds` must be
// valid pointers.
enum MkvcStatus mkvc_check_theorem(const struct MkvcGraph *graph,
                                   uintptr_t k,
                                   uintptr_t cap,
                                   uint64_t *out_alg,
                                   uint64_t *out_opt,
                                   int *out_holds);

// # Safety
// `solution` must be a live handle from this library.
uint64_t mkvc_solution_coverage(const struct MkvcSolution *solution);

// # Safety
// `solution` must be a live handle from this library.
uintptr_t mkvc_solution_len(const struct MkvcSolution *solution);

// Reads vertex `i` of the solution: side as `'A'`/`'B'` plus 1-based index.
// Returns [`MkvcStatus::InvalidParams`] when `i` is out of range.
//
// # Safety
// `solution` must be a live handle; `out_side` and `out_index` must be
// valid pointers.
enum MkvcStatus mkvc_solution_vertex(const struct MkvcSolution *solution,
                                     uintptr_t i,
                                     char *out_side,
                                     uint32_t *out_index);

// # Safety
// `solution` must come from this library and not have been freed already.
void mkvc_solution_free(struct MkvcSolution *solution);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MKVC_H */
