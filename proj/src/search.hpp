#pragma once

#include <functional>
#include <optional>

#include "bounds.hpp"
#include "drawing.hpp"

namespace onep {

struct SearchBudget {
    // Cap on crossings searched; -1 means floor(|E|/2), the most any spec
    // can hold since every crossing consumes two distinct edges.
    long long max_crossings = -1;
    std::optional<DrawingClass> class_cap;  // restrict specs to this overlap class
    long long node_limit = -1;              // planarity tests; -1 = unlimited
    int jobs = 1;                           // worker threads for the spec stream
};

enum class SearchStatus { Found, NoDrawing, BudgetExceeded };

struct MinCrossingsResult {
    SearchStatus status = SearchStatus::NoDrawing;
    int min_crossings = -1;  // valid when Found
    std::optional<Drawing> witness;
    long long nodes = 0;  // planarity tests performed
};

// Smallest k such that some k-pair spec is realizable, searched in ascending
// k. A minimum-crossing drawing always has pairwise overlaps <= 2 (one
// overlap-3 elimination would reduce the count), so the default spec stream
// is capped at overlap 2 without loss.
MinCrossingsResult min_one_planar_crossings(const Graph& g, const SearchBudget& budget = {});

struct ClassifyResult {
    SearchStatus status = SearchStatus::NoDrawing;  // Found = definite verdict
    GraphClass cls = GraphClass::NotOnePlanar;
    std::optional<Drawing> witness;  // for C0/C1/C2
    std::string partial;             // explanation when BudgetExceeded
    long long nodes = 0;
};

// C0 if a fully endpoint-disjoint spec is realizable, else C1 if one with
// pairwise overlaps <= 1 is, else C2 if any is, else NotOnePlanar. The C0
// and C1 phases are capped by the proven crossing bounds floor(n/4) and
// floor((3n-6)/5). Budget exhaustion yields BudgetExceeded, never a false
// NotOnePlanar.
ClassifyResult classify_graph(const Graph& g, const SearchBudget& budget = {});

// A valid drawing whose overlap class is at most `cls` (and with exactly
// `exact_crossings` pairs when given), or nullopt.
std::optional<Drawing> has_class_drawing(const Graph& g, DrawingClass cls,
                                         std::optional<int> exact_crossings = std::nullopt,
                                         const SearchBudget& budget = {});

// Streams every valid spec of exactly `size` pairs in lexicographic order
// (pairs ordered by edge indices), filtered to overlap class <= cap before
// any planarity work. Visitor returns false to stop. Returns count visited.
long long enumerate_specs(const Graph& g, int size, std::optional<DrawingClass> cap,
                          const std::function<bool(const CrossingSpec&)>& visit);

std::vector<CrossingSpec> list_specs(const Graph& g, int size,
                                     std::optional<DrawingClass> cap = std::nullopt);

}  // namespace onep
