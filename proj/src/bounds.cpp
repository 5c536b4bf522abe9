#include "bounds.hpp"

#include <numeric>

namespace onep {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::C0: return "C0";
        case GraphClass::C1: return "C1";
        case GraphClass::C2: return "C2";
        default: return "NotOnePlanar";
    }
}

long long bound_c0_max_crossings(long long n) {
    if (n < 0) throw Error("bound_c0_max_crossings: n must be >= 0");
    return n / 4;
}

long long bound_c1_max_crossings(long long n) {
    if (n < 2) throw Error("bound_c1_max_crossings: n must be >= 2");
    return (3 * n - 6) / 5;
}

Rational bound_max_edges(long long n, GraphClass cls) {
    if (n < 3) throw Error("bound_max_edges: n must be >= 3");
    switch (cls) {
        case GraphClass::C0: return Rational(13 * n, 4) - Rational(6);
        case GraphClass::C1: return Rational(18 * n, 5) - Rational(36, 5);
        case GraphClass::C2: return Rational(4 * n - 8);
        default: throw Error("bound_max_edges: class must be C0, C1 or C2");
    }
}

}  // namespace onep
