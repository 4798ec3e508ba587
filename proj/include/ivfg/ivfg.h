#ifndef IVFG_H
#define IVFG_H

/* C interface to the interval-valued fuzzy graph library.
 *
 * Graphs are opaque handles created by ivfg_graph_parse, ivfg_random_graph,
 * or the operations returning derived graphs, and released with
 * ivfg_graph_free. Every function that can fail returns an ivfg_status;
 * out-parameters are written only on IVFG_OK unless stated otherwise.
 *
 * All numeric results are exact rationals rendered as strings: the minimal
 * exact decimal when one exists, "p/q" otherwise, and "inf" for unreachable
 * distances. Every char* handed out by the library is heap-allocated and
 * must be released with ivfg_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(IVFG_BUILD)
#define IVFG_API __declspec(dllexport)
#else
#define IVFG_API __declspec(dllimport)
#endif
#else
#define IVFG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ivfg_graph ivfg_graph;

typedef enum ivfg_status {
    IVFG_OK = 0,
    IVFG_ERR_PARSE = 1,         /* malformed document */
    IVFG_ERR_INVALID = 2,       /* well-formed document, axiom violations */
    IVFG_ERR_ARGUMENT = 3,      /* bad argument (unknown vertex, null, range) */
    IVFG_ERR_NO_COMPLEMENT = 4, /* complement does not exist for this graph */
    IVFG_ERR_LIMIT = 5,         /* exhaustive routine refused an oversized input */
    IVFG_ERR_INTERNAL = 6
} ivfg_status;

typedef enum ivfg_morphism_mode {
    IVFG_MORPHISM_ISO = 0,
    IVFG_MORPHISM_WEAK = 1,
    IVFG_MORPHISM_COWEAK = 2
} ivfg_morphism_mode;

typedef struct ivfg_classification {
    int irregular;
    int totally_irregular;
    int neighbourly_irregular;
    int neighbourly_totally_irregular;
    int highly_irregular;
    int highly_totally_irregular;
} ivfg_classification;

IVFG_API const char* ivfg_version(void);

IVFG_API void ivfg_string_free(char* text);
IVFG_API void ivfg_graph_free(ivfg_graph* graph);

/* error_message (optional, may be NULL) receives a description on failure. */
IVFG_API ivfg_status ivfg_graph_parse(const char* text, ivfg_graph** out, char** error_message);
IVFG_API ivfg_status ivfg_graph_serialize(const ivfg_graph* graph, char** out);
IVFG_API ivfg_status ivfg_graph_name(const ivfg_graph* graph, char** out);

/* Counts are safe on NULL and return 0. */
IVFG_API size_t ivfg_vertex_count(const ivfg_graph* graph);
IVFG_API size_t ivfg_edge_count(const ivfg_graph* graph);

/* Vertices are indexed 0..count-1 in lexicographic id order; edges likewise
 * by their canonical (smaller id first) endpoint pair. */
IVFG_API ivfg_status ivfg_vertex_id(const ivfg_graph* graph, size_t index, char** out);
IVFG_API ivfg_status ivfg_edge_endpoints(const ivfg_graph* graph, size_t index, char** id1,
                                         char** id2);
IVFG_API ivfg_status ivfg_vertex_interval(const ivfg_graph* graph, const char* id, char** lo,
                                          char** hi);
/* present receives 0 or 1; lo/hi are written only when the edge exists. */
IVFG_API ivfg_status ivfg_edge_interval(const ivfg_graph* graph, const char* id1, const char* id2,
                                        int* present, char** lo, char** hi);

IVFG_API ivfg_status ivfg_order(const ivfg_graph* graph, char** out);
IVFG_API ivfg_status ivfg_size(const ivfg_graph* graph, char** out);
IVFG_API ivfg_status ivfg_degree(const ivfg_graph* graph, const char* id, int closed, char** mu,
                                 char** nu);

IVFG_API ivfg_status ivfg_distance(const ivfg_graph* graph, const char* from, const char* to,
                                   char** lower, char** upper);

IVFG_API ivfg_status ivfg_classify(const ivfg_graph* graph, ivfg_classification* out);

IVFG_API ivfg_status ivfg_complement(const ivfg_graph* graph, ivfg_graph** out,
                                     char** error_message);

/* found receives 0 or 1; mapping_json (optional) receives the bijection as a
 * JSON object when found. */
IVFG_API ivfg_status ivfg_find_morphism(const ivfg_graph* g1, const ivfg_graph* g2,
                                        ivfg_morphism_mode mode, int* found, char** mapping_json);

/* witness_json (optional) receives, when the relation holds, a JSON object
 * mapping each anchor vertex to its partner anchor and bijection. */
IVFG_API ivfg_status ivfg_isometric_from(const ivfg_graph* g1, const ivfg_graph* g2, int* holds,
                                         char** witness_json);
IVFG_API ivfg_status ivfg_isometric_mutual(const ivfg_graph* g1, const ivfg_graph* g2,
                                           int* holds);

/* report_json receives per-law checked counts and violation seeds. */
IVFG_API ivfg_status ivfg_verify_laws(uint64_t seed, size_t trials, char** report_json);

/* density is a rational string ("0.4" or "2/5") in [0, 1]. */
IVFG_API ivfg_status ivfg_random_graph(size_t vertices, const char* density, unsigned grid,
                                       uint64_t seed, ivfg_graph** out);

/* found receives 0 or 1; g1/g2 are written only when a pair was found. */
IVFG_API ivfg_status ivfg_search_complement_counterexample(size_t max_vertices, unsigned grid,
                                                           size_t budget, uint64_t seed,
                                                           int* found, ivfg_graph** g1,
                                                           ivfg_graph** g2);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IVFG_H */
