#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"

using namespace onep;

TEST_CASE("crossing caps") {
    CHECK(bound_c0_max_crossings(8) == 2);
    CHECK(bound_c0_max_crossings(7) == 1);
    CHECK(bound_c0_max_crossings(4) == 1);
    CHECK(bound_c0_max_crossings(0) == 0);

    CHECK(bound_c1_max_crossings(12) == 6);  // 0.6*12 - 1.2
    CHECK(bound_c1_max_crossings(8) == 3);
    CHECK(bound_c1_max_crossings(2) == 0);
    CHECK_THROWS_AS(bound_c1_max_crossings(1), Error);
}

TEST_CASE("edge bounds are exact rationals") {
    CHECK(bound_max_edges(27, GraphClass::C1) == Rational(90));
    CHECK(bound_max_edges(8, GraphClass::C0) == Rational(20));
    CHECK(bound_max_edges(12, GraphClass::C1) == Rational(36));
    CHECK(bound_max_edges(10, GraphClass::C0) == Rational(53, 2));  // 32.5 - 6
    CHECK(bound_max_edges(5, GraphClass::C2) == Rational(12));
    CHECK(bound_max_edges(10, GraphClass::C0).str() == "53/2");
    CHECK_THROWS_AS(bound_max_edges(2, GraphClass::C0), Error);
    CHECK_THROWS_AS(bound_max_edges(9, GraphClass::NotOnePlanar), Error);
}

TEST_CASE("rational arithmetic stays reduced and boundary comparisons are exact") {
    Rational a(18 * 27, 5), b(36, 5);
    CHECK((a - b) == Rational(90));
    CHECK((a - b).is_integer());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(14, 1) * Rational(2, 7) == Rational(4));
    // the 4l-family exclusion: 14l vs 13l + 1/2 at l = 1 is already strict
    CHECK(Rational(13) + Rational(1, 2) < Rational(14));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}
