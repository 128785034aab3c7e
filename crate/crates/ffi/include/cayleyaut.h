/*
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CAYLEYAUT_H
#define CAYLEYAUT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Skip timings in `cay_analyze_json` output.
 */
#define CAY_ANALYZE_STABLE 1

/*
 Skip the exhaustive automorphism search.
 */
#define CAY_ANALYZE_NO_BRUTE 2

/*
 Include vertex and edge connectivity.
 */
#define CAY_ANALYZE_CONNECTIVITY 4

typedef enum CayStatus {
  CAY_STATUS_OK = 0,
  CAY_STATUS_VALIDATION = 2,
  CAY_STATUS_RESOURCE = 3,
  CAY_STATUS_INTERNAL = 4,
  CAY_STATUS_NULL_POINTER = 5,
  CAY_STATUS_OUT_OF_RANGE = 6,
  CAY_STATUS_PANIC = 7,
} CayStatus;

/*
 Opaque Cayley graph handle.
 */
typedef struct CayGraph CayGraph;

/*
 Opaque permutation group handle.
 */
typedef struct CayGroup CayGroup;

/*
 Message for the most recent failure on this thread, or NULL. The pointer
 stays valid until the next `cay_*` call on the same thread.
 */
const char *cay_last_error_message(void);

/*
 Builds `Cay(Z_{m1} x ... x Z_{mr}; S)`. `elements` holds `count` residue
 tuples of length `rank`, flattened.

 # Safety
 `moduli` must point to `rank` values and `elements` to `rank * count`
 values; `out` must be writable.
 */
enum CayStatus cay_graph_new(const uint32_t *moduli,
                             size_t rank,
                             const uint32_t *elements,
                             size_t count,
                             struct CayGraph **out);

/*
 Builds a graph from spec-file JSON (explicit or family form).

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CayStatus cay_graph_from_spec_json(const char *json, struct CayGraph **out);

/*
 Builds a named family graph. `params` uses the CLI syntax, whitespace
 separated: `"5"`, `"3 2"` or `"n=25 d=5 m=2 powers=0,1"`.

 # Safety
 `name` and `params` must be NUL-terminated strings; `out` must be writable.
 */
enum CayStatus cay_graph_from_family(const char *name, const char *params, struct CayGraph **out);

/*
 # Safety
 `graph` must be NULL or a handle from this library not yet freed.
 */
void cay_graph_free(struct CayGraph *graph);

/*
 Number of vertices, or 0 for a NULL handle.

 # Safety
 `graph` must be NULL or a live handle.
 */
size_t cay_graph_vertex_count(const struct CayGraph *graph);

/*
 Size of the connection set, or 0 for a NULL handle.

 # Safety
 `graph` must be NULL or a live handle.
 */
size_t cay_graph_degree(const struct CayGraph *graph);

/*
 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_has_edge(const struct CayGraph *graph, size_t u, size_t v, bool *out);

/*
 Whether the connection set has the unique-summation property.

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_check_us(const struct CayGraph *graph, bool *out);

/*
 Full automorphism group by exhaustive search (default limits).

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_automorphisms(const struct CayGraph *graph, struct CayGroup **out);

/*
 The affine group `L(H) ⋊ Aut(H, S)` as vertex permutations.

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_predicted_group(const struct CayGraph *graph, struct CayGroup **out);

/*
 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_vertex_connectivity(const struct CayGraph *graph, size_t *out);

/*
 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_graph_edge_connectivity(const struct CayGraph *graph, size_t *out);

/*
 # Safety
 `group` must be NULL or a handle from this library not yet freed.
 */
void cay_group_free(struct CayGroup *group);

/*
 Number of elements, or 0 for a NULL handle.

 # Safety
 `group` must be NULL or a live handle.
 */
size_t cay_group_order(const struct CayGroup *group);

/*
 Number of points acted on, or 0 for a NULL handle.

 # Safety
 `group` must be NULL or a live handle.
 */
size_t cay_group_degree(const struct CayGroup *group);

/*
 Copies the image array of element `index` (elements are sorted
 lexicographically) into `buf`, which must hold `degree` values.

 # Safety
 `group` must be a live handle; `buf` must be writable for `len` values.
 */
enum CayStatus cay_group_element(const struct CayGroup *group,
                                 size_t index,
                                 uint32_t *buf,
                                 size_t len);

/*
 # Safety
 `group` must be a live handle; `out` must be writable.
 */
enum CayStatus cay_group_is_transitive(const struct CayGroup *group, bool *out);

/*
 Whether every element of `sub` lies in `sup`.

 # Safety
 Both handles must be live; `out` must be writable.
 */
enum CayStatus cay_group_is_subgroup(const struct CayGroup *sub,
                                     const struct CayGroup *sup,
                                     bool *out);

/*
 # Safety
 Both handles must be live; `out` must be writable.
 */
enum CayStatus cay_group_equal(const struct CayGroup *a, const struct CayGroup *b, bool *out);

/*
 Runs the analysis pipeline on spec-file JSON and returns the JSON
 report in `*out`, to be released with `cay_string_free`. `flags` is a
 bitwise OR of the `CAY_ANALYZE_*` constants.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CayStatus cay_analyze_json(const char *json, uint32_t flags, char **out);

/*
 # Safety
 `s` must be NULL or a string returned by this library, not yet freed.
 */
void cay_string_free(char *s);

#endif  /* CAYLEYAUT_H */
