// Exercises the shared-library surface exactly as an external client would:
// only oneplanar.h, opaque handles, status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "oneplanar.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { onep_string_free(s); }
};

}  // namespace

TEST_CASE("graph lifecycle and name parsing") {
    onep_graph* g = nullptr;
    REQUIRE(onep_graph_from_name("K4,3", &g) == ONEP_OK);
    CHECK(onep_graph_vertex_count(g) == 7);
    CHECK(onep_graph_edge_count(g) == 12);
    CHECK(onep_graph_max_degree(g) == 4);
    int u = -1, v = -1;
    CHECK(onep_graph_edge(g, 0, &u, &v) == ONEP_OK);
    CHECK(u == 0);
    onep_graph_free(g);

    onep_graph* bad = nullptr;
    CHECK(onep_graph_from_name("Z9", &bad) == ONEP_ERR_PARSE);
    CHECK(std::string(onep_last_error()).size() > 0);
}

TEST_CASE("join, union, subgraph through the C surface") {
    onep_graph *a = nullptr, *b = nullptr, *j = nullptr, *u = nullptr;
    REQUIRE(onep_graph_from_name("C3", &a) == ONEP_OK);
    REQUIRE(onep_graph_from_name("P3", &b) == ONEP_OK);
    REQUIRE(onep_graph_join(a, b, &j) == ONEP_OK);
    CHECK(onep_graph_vertex_count(j) == 6);
    CHECK(onep_graph_edge_count(j) == 14);
    REQUIRE(onep_graph_disjoint_union(a, b, &u) == ONEP_OK);
    CHECK(onep_graph_edge_count(u) == 5);
    int sub = 0;
    CHECK(onep_graph_is_subgraph(b, a, &sub) == ONEP_OK);
    CHECK(sub == 1);  // P3 embeds into C3
    onep_graph_free(a);
    onep_graph_free(b);
    onep_graph_free(j);
    onep_graph_free(u);
}

TEST_CASE("realize, validate, files and dot") {
    onep_graph* k5 = nullptr;
    REQUIRE(onep_graph_from_name("K5", &k5) == ONEP_OK);
    int crossing[4] = {0, 1, 2, 3};
    onep_drawing* d = nullptr;
    REQUIRE(onep_realize_spec(k5, crossing, 1, &d) == ONEP_OK);
    REQUIRE(d != nullptr);
    CHECK(onep_drawing_crossing_count(d) == 1);
    int valid = 0;
    Str report;
    CHECK(onep_drawing_validate(d, 0, &valid, &report.s) == ONEP_OK);
    CHECK(valid == 1);
    int cls = -1;
    CHECK(onep_drawing_class(d, &cls) == ONEP_OK);
    CHECK(cls == ONEP_CLASS_C0);

    const char* path = "capi_test_drawing.tmp";
    REQUIRE(onep_drawing_write_file(d, path) == ONEP_OK);
    onep_drawing* loaded = nullptr;
    REQUIRE(onep_drawing_read_file(path, 0, &loaded) == ONEP_OK);
    CHECK(onep_drawing_crossing_count(loaded) == 1);
    std::remove(path);

    Str dot;
    CHECK(onep_drawing_to_dot(d, &dot.s) == ONEP_OK);
    CHECK(std::string(dot.s).find("x0") != std::string::npos);

    // planar graph, empty spec realizes; impossible spec gives NULL, not error
    onep_graph* two = nullptr;
    REQUIRE(onep_graph_from_name("C3uC3", &two) == ONEP_OK);
    int impossible[4] = {0, 1, 3, 4};
    onep_drawing* none = nullptr;
    CHECK(onep_realize_spec(two, impossible, 1, &none) == ONEP_OK);
    CHECK(none == nullptr);

    onep_drawing_free(d);
    onep_drawing_free(loaded);
    onep_graph_free(k5);
    onep_graph_free(two);
}

TEST_CASE("bounds") {
    int64_t v = 0;
    CHECK(onep_bound_c0_max_crossings(8, &v) == ONEP_OK);
    CHECK(v == 2);
    CHECK(onep_bound_c1_max_crossings(12, &v) == ONEP_OK);
    CHECK(v == 6);
    CHECK(onep_bound_c1_max_crossings(1, &v) == ONEP_ERR_PARAM);
    int64_t num = 0, den = 0;
    CHECK(onep_bound_max_edges(27, ONEP_CLASS_C1, &num, &den) == ONEP_OK);
    CHECK(num == 90);
    CHECK(den == 1);
    CHECK(onep_bound_max_edges(10, ONEP_CLASS_C0, &num, &den) == ONEP_OK);
    CHECK(num == 53);
    CHECK(den == 2);
}

TEST_CASE("search and classify") {
    onep_graph* g = nullptr;
    REQUIRE(onep_graph_from_name("K4,4", &g) == ONEP_OK);
    onep_budget b;
    onep_budget_init(&b);
    int outcome = -1;
    int64_t min = -1;
    onep_drawing* w = nullptr;
    REQUIRE(onep_min_crossings(g, &b, &outcome, &min, &w) == ONEP_OK);
    CHECK(outcome == ONEP_SEARCH_FOUND);
    CHECK(min == 4);
    REQUIRE(w != nullptr);
    int cls = -1;
    CHECK(onep_drawing_class(w, &cls) == ONEP_OK);
    CHECK(cls == ONEP_CLASS_C2);
    onep_drawing_free(w);

    int gcls = -1;
    Str partial;
    REQUIRE(onep_classify_graph(g, &b, &outcome, &gcls, nullptr, &partial.s) == ONEP_OK);
    CHECK(outcome == ONEP_SEARCH_FOUND);
    CHECK(gcls == ONEP_GRAPH_C2);

    onep_drawing* none = nullptr;
    REQUIRE(onep_has_class_drawing(g, ONEP_CLASS_C0, -1, &b, &none) == ONEP_OK);
    CHECK(none == nullptr);
    onep_graph_free(g);
}

TEST_CASE("joins and conditions") {
    onep_graph *g = nullptr, *h = nullptr;
    REQUIRE(onep_graph_from_name("P4", &g) == ONEP_OK);
    REQUIRE(onep_graph_from_name("P3", &h) == ONEP_OK);
    int verdict = -1;
    Str rule;
    REQUIRE(onep_classify_join(g, h, &verdict, &rule.s) == ONEP_OK);
    CHECK(verdict == ONEP_GRAPH_C1);
    CHECK(std::string(rule.s).find("[P4,P3]") != std::string::npos);
    onep_graph_free(h);

    int cverdict = -1;
    Str crule;
    onep_graph* star = nullptr;
    REQUIRE(onep_graph_from_name("K1,4", &star) == ONEP_OK);
    REQUIRE(onep_check_small_factor_conditions(star, "2P1", ONEP_GRAPH_C0, &cverdict, &crule.s) ==
            ONEP_OK);
    CHECK(cverdict == ONEP_JOIN_CONDITION_VIOLATED);
    onep_graph_free(star);
    onep_graph_free(g);

    int64_t cr = 0;
    CHECK(onep_cr_complete_bipartite(4, 4, &cr) == ONEP_OK);
    CHECK(cr == 4);
    CHECK(onep_cr_cycle_plus_path(3, 3, &cr) == ONEP_OK);
    CHECK(cr == 2);
    CHECK(onep_cr_complete_bipartite(7, 7, &cr) == ONEP_ERR_PARAM);
}

TEST_CASE("generators") {
    onep_graph* g = nullptr;
    onep_drawing* w = nullptr;
    Str claim;
    REQUIRE(onep_gen_4l_cycle_c1(2, &g, &w, &claim.s) == ONEP_OK);
    CHECK(onep_graph_vertex_count(g) == 8);
    CHECK(onep_graph_edge_count(g) == 12);
    int cls = -1;
    CHECK(onep_drawing_class(w, &cls) == ONEP_OK);
    CHECK(cls == ONEP_CLASS_C1);
    CHECK(onep_gen_cycle_two_chords(5, nullptr, nullptr, nullptr) == ONEP_ERR_PARAM);
    onep_graph_free(g);
    onep_drawing_free(w);
}

TEST_CASE("normalize via the C surface") {
    // build an overlap-3 drawing: c1 = (0-1)x(2-3), c2 = (0-2)x(1-4)
    int n = 5;
    int endpoints[] = {0, 1, 0, 2, 1, 4, 2, 3};
    onep_graph* g = nullptr;
    REQUIRE(onep_graph_from_edges(n, endpoints, 4, &g) == ONEP_OK);
    int crossings[] = {0, 1, 2, 3, 0, 2, 1, 4};
    onep_drawing* d = nullptr;
    REQUIRE(onep_realize_spec(g, crossings, 2, &d) == ONEP_OK);
    REQUIRE(d != nullptr);
    int overlap = 0;
    CHECK(onep_drawing_max_overlap(d, &overlap) == ONEP_OK);
    CHECK(overlap == 3);

    onep_drawing* fixed = nullptr;
    int steps = 0;
    REQUIRE(onep_drawing_normalize(d, &fixed, &steps) == ONEP_OK);
    CHECK(steps == 1);
    CHECK(onep_drawing_crossing_count(fixed) == 1);
    CHECK(onep_drawing_max_overlap(fixed, &overlap) == ONEP_OK);
    CHECK(overlap <= 2);
    onep_drawing_free(d);
    onep_drawing_free(fixed);
    onep_graph_free(g);
}
