/* Exercises the public header from plain C; returns 0 on success. */

#include <stddef.h>
#include <string.h>

#include "ivfg/ivfg.h"

static int check(int condition, int code) {
    return condition ? 0 : code;
}

int capi_smoke(void) {
    const char* doc = "graph smoke\n"
                      "vertex a 0.5 0.5\n"
                      "vertex b 0.5 0.5\n"
                      "edge a b 0.5 0.5\n";
    ivfg_graph* g = NULL;
    char* message = NULL;
    int rc = 0;

    if (ivfg_graph_parse(doc, &g, &message) != IVFG_OK)
        return 1;
    rc = check(ivfg_vertex_count(g) == 2, 2);
    if (rc == 0)
        rc = check(ivfg_edge_count(g) == 1, 3);

    if (rc == 0) {
        char* order = NULL;
        if (ivfg_order(g, &order) != IVFG_OK)
            rc = 4;
        else {
            rc = check(strcmp(order, "2") == 0, 5);
            ivfg_string_free(order);
        }
    }

    if (rc == 0) {
        char* lower = NULL;
        char* upper = NULL;
        if (ivfg_distance(g, "a", "b", &lower, &upper) != IVFG_OK)
            rc = 6;
        else {
            rc = check(strcmp(lower, "2") == 0 && strcmp(upper, "2") == 0, 7);
            ivfg_string_free(lower);
            ivfg_string_free(upper);
        }
    }

    if (rc == 0) {
        char* bad_lo = NULL;
        char* bad_hi = NULL;
        rc = check(ivfg_vertex_interval(g, "zz", &bad_lo, &bad_hi) == IVFG_ERR_ARGUMENT, 8);
    }

    ivfg_graph_free(g);
    ivfg_string_free(message);
    return rc;
}
