#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"
#include "catalog.hpp"
#include "generators.hpp"
#include "joins.hpp"
#include "oracle_helpers.hpp"
#include "search.hpp"

using namespace onep;
using namespace onep::testing;

TEST_CASE("cycle-with-chords family G_k") {
    for (int k = 6; k <= 12; ++k) {
        auto fi = gen_cycle_two_chords(k);
        CHECK(fi.graph.vertex_count() == k);
        CHECK(fi.graph.edge_count() == k + 2);
        CHECK(fi.graph.max_degree() == 3);
        CHECK(validate_drawing(fi.witness).empty());
        CHECK(drawing_class(fi.witness) == DrawingClass::C0);
        CHECK(fi.witness.spec.size() == 2);
        CHECK(paper_crossing_bounds_hold(fi.witness));
        // boundary equality of the 2P1 edge bound, and all conditions pass
        CHECK(fi.graph.edge_count() == fi.graph.vertex_count() + 2);
        CHECK(check_small_factor_conditions(fi.graph, SmallFactor::TwoP1).outcome ==
              JoinOutcome::Inconclusive);
    }
    CHECK_THROWS_AS(gen_cycle_two_chords(5), Error);
}

TEST_CASE("crossing neighborhoods of the G_k witness are disjoint") {
    auto fi = gen_cycle_two_chords(6);
    auto a = pair_endpoints(fi.witness.base, fi.witness.spec.pairs[0]);
    auto b = pair_endpoints(fi.witness.base, fi.witness.spec.pairs[1]);
    for (int x : a)
        for (int y : b) CHECK(x != y);
}

TEST_CASE("G_k minus an edge, joined with P2") {
    for (int k = 6; k <= 12; ++k) {
        auto fi = gen_cycle_two_chords_minus(k);
        CHECK(fi.graph.vertex_count() == k);
        CHECK(fi.graph.edge_count() == k + 1);
        CHECK(fi.graph.max_degree() == 3);
        CHECK(validate_drawing(fi.witness).empty());
        CHECK(drawing_class(fi.witness) == DrawingClass::C0);
        CHECK(check_small_factor_conditions(fi.graph, SmallFactor::P2).outcome ==
              JoinOutcome::Inconclusive);
    }
}

TEST_CASE("ladder-like family for G + P1") {
    for (int k = 4; k <= 12; k += 2) {
        auto fi = gen_ladderlike_c0_p1(k);
        int n = 2 * k - 1;
        CHECK(fi.graph.vertex_count() == n);
        CHECK(4 * fi.graph.edge_count() == 9 * n - 11);  // exact boundary
        CHECK(validate_drawing(fi.witness).empty());
        CHECK(drawing_class(fi.witness) == DrawingClass::C0);
        REQUIRE(fi.self_witness.has_value());
        CHECK(validate_drawing(*fi.self_witness).empty());
        CHECK(paper_crossing_bounds_hold(fi.witness));
        CHECK(check_small_factor_conditions(fi.graph, SmallFactor::P1).outcome ==
              JoinOutcome::Inconclusive);
    }
    CHECK_THROWS_AS(gen_ladderlike_c0_p1(5), Error);
    CHECK_THROWS_AS(gen_ladderlike_c0_p1(2), Error);
}

TEST_CASE("k = 6 ladder matches the quoted 11-vertex, 22-edge instance") {
    auto fi = gen_ladderlike_c0_p1(6);
    CHECK(fi.graph.vertex_count() == 11);
    CHECK(fi.graph.edge_count() == 22);
    CHECK(4 * 22 == 9 * 11 - 11);
}

TEST_CASE("4l-cycle family") {
    for (int l = 2; l <= 5; ++l) {
        auto fi = gen_4l_cycle_c1(l);
        CHECK(fi.graph.vertex_count() == 4 * l);
        CHECK(fi.graph.edge_count() == 6 * l);
        CHECK(2 * fi.graph.edge_count() == 3 * fi.graph.vertex_count());  // 1.5|V|
        CHECK(validate_drawing(fi.witness).empty());
        CHECK(drawing_class(fi.witness) == DrawingClass::C1);
        CHECK(fi.witness.spec.size() == 2 * l);
        CHECK(paper_crossing_bounds_hold(fi.witness));
        // join edge count sits above the C0 edge bound
        Rational c0_bound = bound_max_edges(4 * l + 2, GraphClass::C0);
        CHECK(c0_bound < Rational(14 * l));
        CHECK(check_small_factor_conditions(fi.graph, SmallFactor::TwoP1, GraphClass::C1).outcome ==
              JoinOutcome::Inconclusive);
    }
    CHECK_THROWS_AS(gen_4l_cycle_c1(1), Error);
}

TEST_CASE("search confirms the smallest family instances") {
    // G_6 + 2P1 is of class C0
    auto fi = gen_cycle_two_chords(6);
    Graph j = join(fi.graph, make_empty(2));
    auto r = classify_graph(j);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.cls == GraphClass::C0);

    // the l = 2 join has a C1- but no C0-drawing
    auto f4 = gen_4l_cycle_c1(2);
    Graph j2 = join(f4.graph, make_empty(2));
    CHECK_FALSE(has_class_drawing(j2, DrawingClass::C0).has_value());
    auto r2 = classify_graph(j2);
    REQUIRE(r2.status == SearchStatus::Found);
    CHECK(r2.cls == GraphClass::C1);
}

TEST_CASE("generators are deterministic") {
    auto a = gen_4l_cycle_c1(3), b = gen_4l_cycle_c1(3);
    CHECK(a.graph == b.graph);
    CHECK(a.witness.spec == b.witness.spec);
    CHECK(a.witness.pl.rot == b.witness.pl.rot);
}
