#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include "cliquecert.h"

static int fails = 0;

#define CHECK(cond, what)                                                  \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "FAIL: %s\n", what);                           \
            fails++;                                                       \
        }                                                                  \
    } while (0)

int main(void) {
    char *version = NULL;
    CHECK(cc_version(&version) == CC_STATUS_OK, "cc_version");
    printf("header version: %s\n", version);
    cc_string_free(version);

    CcGraph *g = NULL;
    CcStatus st = cc_graph_sample(12, 7, &g);
    CHECK(st == CC_STATUS_OK, "cc_graph_sample");
    size_t n = cc_graph_n(g);
    size_t m = cc_graph_edge_count(g);
    CHECK(n == 12, "cc_graph_n");
    CHECK(m > 0, "edge_count");

    char *count = NULL;
    CHECK(cc_graph_clique_count(g, 2, &count) == CC_STATUS_OK, "clique_count");
    printf("edges: %zu, clique_count(2): %s\n", m, count);
    CHECK(strtoull(count, NULL, 10) == (unsigned long long)m, "K2 == edges");
    cc_string_free(count);

    CcMatrix *mat = NULL;
    CHECK(cc_matrix_m_prime(g, 2, 4, &mat) == CC_STATUS_OK, "cc_matrix_m_prime");
    CHECK(cc_matrix_rows(mat) == 66, "rows C(12,2)");

    char *spectrum = NULL;
    CHECK(cc_matrix_spectrum_json(mat, 1e-9, &spectrum) == CC_STATUS_OK, "spectrum");
    CHECK(strstr(spectrum, "\"dimension\": 66") != NULL, "spectrum dimension");
    cc_string_free(spectrum);

    char *axioms = NULL;
    CHECK(cc_check_axioms_json(g, 2, 4, &axioms) == CC_STATUS_OK, "axioms");
    CHECK(strstr(axioms, "violations") != NULL, "axioms schema");
    cc_string_free(axioms);

    /* error paths: bad input sets a status and a message */
    CcGraph *bad = NULL;
    st = cc_graph_plant(g, 99, 1, &bad);
    CHECK(st == CC_STATUS_INVALID_INPUT, "plant k > n rejected");
    const char *msg = cc_last_error_message();
    CHECK(msg != NULL && msg[0] != '\0', "error message set");
    printf("expected error: %s\n", msg);

    double tail = 0.0;
    CHECK(cc_mcdiarmid_tail(100, 1.0, 0.0, &tail) == CC_STATUS_OK && tail == 1.0,
          "mcdiarmid t=0");

    double bound = 0.0;
    CHECK(cc_gershgorin_bound(mat, &bound) == CC_STATUS_OK && bound > 0.0,
          "gershgorin");

    cc_matrix_free(mat);
    cc_graph_free(g);
    cc_graph_free(NULL);

    if (fails == 0) {
        printf("C ABI drive: all checks passed\n");
        return 0;
    }
    return 1;
}
