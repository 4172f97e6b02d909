/* Minimal C consumer of the mkvc C ABI.
 *
 * Build from the workspace root after `cargo build -p mkvc-ffi --release`:
 *
 *   cc crates/mkvc-ffi/examples/demo.c \
 *      -Icrates/mkvc-ffi/include \
 *      target/release/libmkvc_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include <stdint.h>

#include "mkvc.h"

int main(void) {
    MkvcGraph *graph = NULL;
    MkvcStatus status =
        mkvc_graph_parse("p bkvc 2 2 3\ne 1 1\ne 2 1\ne 2 2\n", &graph);
    if (status != MKVC_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", mkvc_last_error_message());
        return 1;
    }
    printf("graph: nA=%zu nB=%zu m=%zu\n", mkvc_graph_na(graph),
           mkvc_graph_nb(graph), mkvc_graph_m(graph));

    MkvcSolution *solution = NULL;
    status = mkvc_solve_comb07(graph, 2, &solution);
    if (status != MKVC_STATUS_OK) {
        fprintf(stderr, "solve failed: %s\n", mkvc_last_error_message());
        mkvc_graph_free(graph);
        return 1;
    }
    printf("k=2 coverage: %llu\n",
           (unsigned long long)mkvc_solution_coverage(solution));
    for (size_t i = 0; i < mkvc_solution_len(solution); i++) {
        char side;
        uint32_t index;
        mkvc_solution_vertex(solution, i, &side, &index);
        printf("  vertex %c%u\n", side, index);
    }

    uint64_t alg = 0, opt = 0;
    int holds = 0;
    status = mkvc_check_theorem(graph, 2, 20, &alg, &opt, &holds);
    if (status == MKVC_STATUS_OK) {
        printf("ratio check: alg=%llu opt=%llu holds=%d\n",
               (unsigned long long)alg, (unsigned long long)opt, holds);
    }

    mkvc_solution_free(solution);
    mkvc_graph_free(graph);
    return 0;
}
