/*
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

/* See the README for build instructions. */

#include <stdio.h>
#include "cayleyaut.h"

int main(void) {
    CayGraph *g = NULL;
    CayGroup *aut = NULL;
    CayGroup *pred = NULL;
    bool us = false, eq = false;

    if (cay_graph_from_family("mobius", "10", &g) != CAY_STATUS_OK) {
        fprintf(stderr, "%s\n", cay_last_error_message());
        return 1;
    }
    cay_graph_check_us(g, &us);
    cay_graph_automorphisms(g, &aut);
    cay_graph_predicted_group(g, &pred);
    cay_group_equal(aut, pred, &eq);
    printf("vertices=%zu us=%d aut=%zu predicted=%zu equal=%d\n",
           cay_graph_vertex_count(g), us, cay_group_order(aut),
           cay_group_order(pred), eq);

    cay_group_free(pred);
    cay_group_free(aut);
    cay_graph_free(g);
    return 0;
}
