#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "catalog.hpp"
#include "oracle_helpers.hpp"

using namespace onep;
using namespace onep::testing;

TEST_CASE("overlap class from specs") {
    // 8 vertices, edges chosen so pairs overlap by 0 / 2 / 3 endpoints
    Graph g(8, {{0, 1}, {2, 3}, {0, 4}, {2, 5}, {0, 2}, {1, 6}, {4, 5}, {6, 7}});
    CHECK(spec_overlap_class(g, CrossingSpec{}) == std::pair{0, DrawingClass::C0});
    auto single = make_spec(g, {{0, 1, 2, 3}});
    CHECK(spec_overlap_class(g, single) == std::pair{0, DrawingClass::C0});
    auto c2 = make_spec(g, {{0, 1, 2, 3}, {0, 4, 2, 5}});  // shares {0, 2}
    CHECK(spec_overlap_class(g, c2) == std::pair{2, DrawingClass::C2});
    auto un = make_spec(g, {{0, 1, 2, 3}, {0, 2, 1, 6}});  // shares {0, 1, 2}
    CHECK(spec_overlap_class(g, un) == std::pair{3, DrawingClass::Unnormalized});
    auto c1 = make_spec(g, {{0, 1, 2, 3}, {0, 4, 6, 7}});  // shares {0}
    CHECK(spec_overlap_class(g, c1) == std::pair{1, DrawingClass::C1});
}

TEST_CASE("spec validation") {
    Graph g = make_cycle(6);
    CrossingSpec adjacent;  // edges 0-1 and 1-2 share vertex 1
    adjacent.pairs.push_back({g.edge_index(0, 1), g.edge_index(1, 2)});
    std::sort(adjacent.pairs.begin(), adjacent.pairs.end());
    CHECK_FALSE(validate_spec(g, adjacent, SpecMode::Strict).empty());
    CHECK(validate_spec(g, adjacent, SpecMode::Raw).empty());
    CHECK_THROWS_AS(spec_overlap_class(g, adjacent), Error);

    CrossingSpec reuse = make_spec(g, {{0, 1, 2, 3}, {2, 3, 4, 5}});  // edge 2-3 twice
    CHECK_FALSE(validate_spec(g, reuse, SpecMode::Strict).empty());
    CHECK_FALSE(validate_spec(g, reuse, SpecMode::Raw).empty());
}

TEST_CASE("realize: planar graph with empty spec") {
    for (const char* name : {"C6", "P4", "K4", "C3uC3", "K2,3"}) {
        Graph g = parse_graph_name(name);
        auto d = realize_crossing_spec(g, {});
        REQUIRE(d.has_value());
        CHECK(validate_drawing(*d).empty());
        CHECK(d->spec.size() == 0);
        CHECK(drawing_class(*d) == DrawingClass::C0);
        CHECK(paper_crossing_bounds_hold(*d));
    }
}

TEST_CASE("realize: K5 needs a crossing") {
    Graph k5 = make_complete(5);
    CHECK_FALSE(realize_crossing_spec(k5, {}).has_value());
    // one crossing of two disjoint edges suffices
    auto d = realize_crossing_spec(k5, make_spec(k5, {{0, 1, 2, 3}}));
    REQUIRE(d.has_value());
    CHECK(validate_drawing(*d).empty());
    CHECK(drawing_class(*d) == DrawingClass::C0);
}

TEST_CASE("realize rejects invalid specs but reports unrealizable ones as empty") {
    Graph g = make_cycle(6);
    CrossingSpec adjacent;
    adjacent.pairs.push_back({g.edge_index(0, 1), g.edge_index(1, 2)});
    CHECK_THROWS_AS(realize_crossing_spec(g, adjacent), Error);

    // C6 drawn as a figure-eight: opposite edges CAN cross exactly once
    auto eight = make_spec(g, {{0, 1, 3, 4}});
    auto d8 = realize_crossing_spec(g, eight);
    REQUIRE(d8.has_value());
    CHECK(validate_drawing(*d8).empty());

    // but edges of two different triangles cannot cross exactly once: two
    // closed curves cross an even number of times
    Graph two = parse_graph_name("C3uC3");
    auto impossible = make_spec(two, {{0, 1, 3, 4}});
    CHECK_FALSE(realize_crossing_spec(two, impossible).has_value());
}

TEST_CASE("realized drawings alternate at every false vertex") {
    Graph k5 = make_complete(5);
    auto specs = {make_spec(k5, {{0, 1, 2, 3}}), make_spec(k5, {{0, 2, 1, 3}}),
                  make_spec(k5, {{0, 3, 1, 2}})};
    for (const auto& s : specs) {
        auto d = realize_crossing_spec(k5, s);
        REQUIRE(d.has_value());
        CHECK(validate_drawing(*d).empty());  // includes the alternation check
        CHECK(d->spec == s);
    }
}

TEST_CASE("validator reports specific violations") {
    Graph g = make_cycle(6);
    auto spec = make_spec(g, {{0, 1, 2, 3}});
    auto d = realize_crossing_spec(g, spec);
    REQUIRE(d.has_value());

    SUBCASE("adjacent false vertices") {
        Drawing broken = *d;
        // connect the hub to itself-like structure: rewire one spoke to hit a fake hub
        broken.pl.edges.push_back({broken.hub(0), broken.hub(0)});
        broken.origin.push_back(0);
        broken.pl.rot[broken.hub(0)].push_back(2 * (static_cast<int>(broken.pl.edges.size()) - 1));
        broken.pl.rot[broken.hub(0)].push_back(2 * (static_cast<int>(broken.pl.edges.size()) - 1) + 1);
        CHECK_FALSE(validate_drawing(broken).empty());
    }
    SUBCASE("wrong genus") {
        Drawing broken = *d;
        // swap two rotation entries at a true vertex of degree >= 3 until genus breaks
        bool flipped = false;
        for (int v = 0; v < broken.pl.n && !flipped; ++v) {
            auto& r = broken.pl.rot[v];
            if (r.size() >= 3) {
                std::swap(r[0], r[1]);
                if (!validate_drawing(broken).empty()) flipped = true;
                else std::swap(r[0], r[1]);
            }
        }
        CHECK(flipped);
    }
    SUBCASE("missing edge") {
        Drawing broken = *d;
        broken.base = Graph(6, std::vector<Edge>(g.edges().begin(), g.edges().end() - 1));
        CHECK_FALSE(validate_drawing(broken).empty());
    }
}

TEST_CASE("drawing file round trip is byte-identical") {
    Graph k5 = make_complete(5);
    auto d = realize_crossing_spec(k5, make_spec(k5, {{0, 1, 2, 3}}));
    REQUIRE(d.has_value());
    std::stringstream s1;
    write_drawing(s1, *d);
    Drawing loaded = read_drawing(s1);
    CHECK(validate_drawing(loaded).empty());
    std::stringstream s2;
    write_drawing(s2, loaded);
    CHECK(s1.str() == s2.str());
    CHECK(loaded.spec == d->spec);
}

TEST_CASE("drawing file: comments and errors") {
    Graph g = make_cycle(4);
    auto d = realize_crossing_spec(g, {});
    std::stringstream ss;
    write_drawing(ss, *d);
    std::string text = "# header comment\n" + ss.str();
    std::stringstream in(text);
    CHECK(validate_drawing(read_drawing(in)).empty());

    std::stringstream junk("GRAPH\n2 1\n0 1\nROTATIONS\n0: 1\n");
    CHECK_THROWS_AS(read_drawing(junk), Error);
}

TEST_CASE("class is spec-local: same spec, different embeddings, same class") {
    Graph g = join(make_cycle(4), make_empty(1));  // wheel-ish, several embeddings
    auto spec = make_spec(g, {{0, 1, 2, 3}});
    auto d = realize_crossing_spec(g, spec);
    REQUIRE(d.has_value());
    DrawingClass c1 = drawing_class(*d);
    CHECK(c1 == spec_overlap_class(g, spec).second);
}
