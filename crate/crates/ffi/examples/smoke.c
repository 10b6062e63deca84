#include <stdio.h>
#include <string.h>

#include "matchgap.h"

int main(int argc, char **argv) {
    const char *text = argc > 1 ? argv[1] : "Dhc";
    MgGraph *g = NULL;
    if (mg_graph_from_graph6(text, &g) != MG_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", mg_last_error_message());
        return 2;
    }
    MgRecord r;
    if (mg_evaluate(g, &r) != MG_STATUS_OK) {
        fprintf(stderr, "evaluate: %s\n", mg_last_error_message());
        mg_graph_free(g);
        return 1;
    }
    char *json = NULL;
    MgStatus st = mg_canonical_json(g, &json);
    printf("n=%zu alpha=%zu halves=%zu gap6=%lld class=%d\n", r.n, r.alpha, r.alpha_f_halves,
           (long long)r.gap_sixths, (int)r.extremal);
    if (st == MG_STATUS_OK) {
        printf("%s\n", json);
    }
    mg_string_free(json);
    mg_graph_free(g);

    MgGraph *bad = NULL;
    if (mg_graph_from_graph6("D\x7f", &bad) == MG_STATUS_OK || strlen(mg_last_error_message()) == 0) {
        return 1;
    }
    return st == MG_STATUS_OK ? 0 : 1;
}
