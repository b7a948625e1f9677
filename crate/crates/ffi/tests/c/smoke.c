#include <stdio.h>
#include "cpg.h"

int main(void) {
    CpgRep *rep = NULL;
    CpgGraph *g = NULL, *h = NULL;
    size_t violations = 99, faces = 0;
    bool ok = false;

    if (cpg_rep_build(2, &rep) != CPG_STATUS_OK) return 1;
    if (cpg_rep_violation_count(rep, &violations) != CPG_STATUS_OK || violations != 0) return 2;
    if (cpg_rep_max_bend(rep) != 3) return 3;
    if (cpg_rep_contact_graph(rep, &g) != CPG_STATUS_OK) return 4;
    if (cpg_graph_generate_gk(2, &h) != CPG_STATUS_OK) return 5;
    if (!cpg_graph_equal(g, h)) return 6;
    if (cpg_audit_gk(rep, 2, &ok, NULL) != CPG_STATUS_OK || !ok) return 7;
    if (cpg_gk_face_count(2, &faces) != CPG_STATUS_OK || faces != 154) return 8;
    if (cpg_rep_parse("{", &rep) != CPG_STATUS_PARSE_ERROR || cpg_last_error() == NULL) return 9;

    printf("vertices=%zu edges=%zu faces=%zu\n",
           cpg_graph_vertex_count(h), cpg_graph_edge_count(h), faces);
    cpg_graph_free(g);
    cpg_graph_free(h);
    cpg_rep_free(rep);
    return 0;
}
