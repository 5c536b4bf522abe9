#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"

namespace onep {

// Exact rational, normalized (positive denominator, reduced). The decimal
// constants in the edge bounds are exact rationals; floating point would
// misjudge the tight instances.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

    bool is_integer() const { return den == 1; }
    std::string str() const;
};

enum class GraphClass { C0, C1, C2, NotOnePlanar };
const char* graph_class_name(GraphClass c);

// Any C0-drawing of an n-vertex graph has at most floor(n/4) crossings.
long long bound_c0_max_crossings(long long n);

// Any C1-drawing of an n-vertex graph has at most 0.6n - 1.2 crossings,
// i.e. floor((3n-6)/5). Requires n >= 2.
long long bound_c1_max_crossings(long long n);

// Maximum edges of an n-vertex graph of the given class (exact):
//   C0: 13n/4 - 6      C1: 18n/5 - 36/5      C2: 4n - 8
// The C2 value is the general 1-planar bound, provided for context only.
Rational bound_max_edges(long long n, GraphClass cls);

}  // namespace onep
