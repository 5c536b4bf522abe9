/* oneplanar — combinatorial toolkit for 1-planar drawings.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * released by the library; every function returns a status code (ONEP_OK on
 * success) and reports results through out parameters. Strings returned
 * through char** out parameters are heap-allocated and must be released
 * with onep_string_free. On any error, onep_last_error() describes the
 * failure for the calling thread.
 */

#ifndef ONEPLANAR_H
#define ONEPLANAR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ONEP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ONEP_API __attribute__((visibility("default")))
#else
#define ONEP_API
#endif

typedef struct onep_graph onep_graph;
typedef struct onep_drawing onep_drawing;

/* status codes */
enum {
    ONEP_OK = 0,
    ONEP_ERR_PARAM = 1,   /* invalid argument or precondition violated */
    ONEP_ERR_PARSE = 2,   /* malformed name or file */
    ONEP_ERR_INVALID = 3, /* object fails validation */
    ONEP_ERR_IO = 4,      /* file not readable/writable */
    ONEP_ERR_BUDGET = 5   /* search budget exhausted, verdict inconclusive */
};

/* drawing classes (onep_drawing_class and class caps) */
enum {
    ONEP_CLASS_C0 = 0,
    ONEP_CLASS_C1 = 1,
    ONEP_CLASS_C2 = 2,
    ONEP_CLASS_UNNORMALIZED = 3
};

/* graph classes / join outcomes */
enum {
    ONEP_GRAPH_C0 = 0,
    ONEP_GRAPH_C1 = 1,
    ONEP_GRAPH_C2 = 2,
    ONEP_GRAPH_NOT_ONE_PLANAR = 3,
    ONEP_JOIN_CONDITION_VIOLATED = 4,
    ONEP_JOIN_INCONCLUSIVE = 5
};

/* search outcome */
enum { ONEP_SEARCH_FOUND = 0, ONEP_SEARCH_NO_DRAWING = 1, ONEP_SEARCH_BUDGET = 2 };

typedef struct onep_budget {
    int64_t max_crossings; /* -1: floor(|E|/2) */
    int class_cap;         /* ONEP_CLASS_* or -1 for none */
    int64_t node_limit;    /* planarity tests, -1 unlimited */
    int jobs;              /* worker threads, >= 1 */
} onep_budget;

ONEP_API void onep_budget_init(onep_budget* b);

ONEP_API const char* onep_last_error(void);
ONEP_API void onep_string_free(char* s);
ONEP_API const char* onep_version(void);

/* ---- graphs ---------------------------------------------------------- */

ONEP_API int onep_graph_from_name(const char* name, onep_graph** out);
ONEP_API int onep_graph_from_edges(int n, const int* endpoints, int m, onep_graph** out);
ONEP_API int onep_graph_read_file(const char* path, onep_graph** out);
ONEP_API int onep_graph_write_file(const onep_graph* g, const char* path);
ONEP_API void onep_graph_free(onep_graph* g);

ONEP_API int onep_graph_vertex_count(const onep_graph* g);
ONEP_API int onep_graph_edge_count(const onep_graph* g);
ONEP_API int onep_graph_edge(const onep_graph* g, int index, int* u, int* v);
ONEP_API int onep_graph_max_degree(const onep_graph* g);
ONEP_API int onep_graph_join(const onep_graph* g, const onep_graph* h, onep_graph** out);
ONEP_API int onep_graph_disjoint_union(const onep_graph* g, const onep_graph* h, onep_graph** out);
/* result: 1 if g embeds into host as a subgraph, else 0 */
ONEP_API int onep_graph_is_subgraph(const onep_graph* g, const onep_graph* host, int* result);
ONEP_API int onep_graph_to_dot(const onep_graph* g, char** out);

/* ---- drawings -------------------------------------------------------- */

/* raw_mode != 0 additionally accepts adjacent crossings (cleanup input) */
ONEP_API int onep_drawing_read_file(const char* path, int raw_mode, onep_drawing** out);
ONEP_API int onep_drawing_write_file(const onep_drawing* d, const char* path);
ONEP_API void onep_drawing_free(onep_drawing* d);

ONEP_API int onep_drawing_crossing_count(const onep_drawing* d);
/* report: newline-separated violations, empty when valid; *valid set 0/1 */
ONEP_API int onep_drawing_validate(const onep_drawing* d, int raw_mode, int* valid, char** report);
ONEP_API int onep_drawing_class(const onep_drawing* d, int* cls);
ONEP_API int onep_drawing_max_overlap(const onep_drawing* d, int* overlap);
ONEP_API int onep_drawing_base_graph(const onep_drawing* d, onep_graph** out);
ONEP_API int onep_drawing_to_dot(const onep_drawing* d, char** out);

/* one overlap-3 elimination step; ONEP_ERR_PARAM when no overlap >= 3 */
ONEP_API int onep_drawing_eliminate_overlap3(const onep_drawing* d, onep_drawing** out);
/* run overlap-3 eliminations to the fixpoint; *steps may be NULL */
ONEP_API int onep_drawing_normalize(const onep_drawing* d, onep_drawing** out, int* steps);
/* splice away adjacent crossings until none remain; *steps may be NULL */
ONEP_API int onep_drawing_eliminate_adjacent(const onep_drawing* d, onep_drawing** out,
                                             int* steps);

/* crossings: 4 ints (u v x z) per pair, meaning edge uv crosses edge xz.
 * *out is NULL when the spec is valid but not realizable. */
ONEP_API int onep_realize_spec(const onep_graph* g, const int* crossings, int pairs,
                               onep_drawing** out);

/* ---- bounds ---------------------------------------------------------- */

ONEP_API int onep_bound_c0_max_crossings(int64_t n, int64_t* out);
ONEP_API int onep_bound_c1_max_crossings(int64_t n, int64_t* out);
/* exact rational num/den for the class edge bound (C0: 13n/4-6, C1:
 * 18n/5-36/5, C2: 4n-8) */
ONEP_API int onep_bound_max_edges(int64_t n, int cls, int64_t* num, int64_t* den);

/* ---- search ---------------------------------------------------------- */

/* outcome: ONEP_SEARCH_*; min set when FOUND; witness optional (pass NULL
 * to skip constructing it) */
ONEP_API int onep_min_crossings(const onep_graph* g, const onep_budget* budget, int* outcome,
                                int64_t* min, onep_drawing** witness);
/* cls: ONEP_GRAPH_* when outcome == ONEP_SEARCH_FOUND; otherwise partial
 * explanation in *partial (optional) */
ONEP_API int onep_classify_graph(const onep_graph* g, const onep_budget* budget, int* outcome,
                                 int* cls, onep_drawing** witness, char** partial);
/* exact_crossings -1: any count; *out NULL when no such drawing */
ONEP_API int onep_has_class_drawing(const onep_graph* g, int cls, int64_t exact_crossings,
                                    const onep_budget* budget, onep_drawing** out);

/* ---- joins ----------------------------------------------------------- */

/* verdict: ONEP_GRAPH_* / ONEP_JOIN_*; rule names the deciding pair */
ONEP_API int onep_classify_join(const onep_graph* g, const onep_graph* h, int* verdict,
                                char** rule);
/* small_factor: "P1", "2P1" or "P2"; candidate: ONEP_GRAPH_C0/C1 or -1 */
ONEP_API int onep_check_small_factor_conditions(const onep_graph* g, const char* small_factor,
                                                int candidate, int* verdict, char** rule);
ONEP_API int onep_cr_complete_bipartite(int m, int n, int64_t* out);
ONEP_API int onep_cr_cycle_plus_path(int n, int m, int64_t* out);

/* ---- generators ------------------------------------------------------ */

/* any out pointer may be NULL to skip that piece */
ONEP_API int onep_gen_cycle_two_chords(int k, onep_graph** graph, onep_drawing** witness,
                                       char** claim);
ONEP_API int onep_gen_cycle_two_chords_minus(int k, onep_graph** graph, onep_drawing** witness,
                                             char** claim);
ONEP_API int onep_gen_ladderlike_c0_p1(int k, onep_graph** graph, onep_drawing** witness,
                                       char** claim);
ONEP_API int onep_gen_4l_cycle_c1(int l, onep_graph** graph, onep_drawing** witness, char** claim);

#ifdef __cplusplus
}
#endif

#endif /* ONEPLANAR_H */
