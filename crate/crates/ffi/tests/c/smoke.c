#include <stdio.h>
#include <string.h>
#include "coverdeg.h"

int main(void) {
    CdGraph *g = NULL;
    if (cd_graph_from_graph6("Ch", &g) != CD_STATUS_OK) return 1;
    CdBundle b;
    if (cd_bundle(g, &b) != CD_STATUS_OK) return 2;
    size_t reg = 0;
    if (cd_reg_cover(g, 0, &reg) != CD_STATUS_OK) return 3;
    int64_t c[8];
    size_t len = 0;
    if (cd_independence_poly(g, c, 8, &len) != CD_STATUS_OK) return 4;
    printf("n=%zu alpha=%zu M=%zu reg=%zu P=%lld,%lld,%lld\n", b.n, b.alpha, b.m, reg,
           (long long)c[0], (long long)c[1], (long long)c[2]);
    cd_graph_free(g);

    CdGraph *bad = NULL;
    if (cd_graph_from_graph6("C", &bad) != CD_STATUS_PARSE) return 5;
    if (cd_last_error() == NULL || strstr(cd_last_error(), "graph6") == NULL) return 6;
    return 0;
}
