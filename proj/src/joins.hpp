#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"

namespace onep {

enum class JoinOutcome { C0, C1, C2, NotOnePlanar, ConditionViolated, Inconclusive };
const char* join_outcome_name(JoinOutcome o);

struct JoinVerdict {
    JoinOutcome outcome;
    std::string rule;  // majorizing pair or violated condition id
};

struct MajorPair {
    const char* name;
    Graph first, second;
};

// The published pair tables: joins of two >=3-vertex factors are 1-planar
// iff majorized by a onePlanarPairs entry, of class C0 iff by a c0Pairs
// entry, of class C1 iff by a c1Pairs entry, and of class C2 otherwise.
const std::vector<MajorPair>& one_planar_pairs();  // [C3uC3,C3] [C4,C4] [C4,C3] [K2,1,1,P3]
const std::vector<MajorPair>& c0_pairs();          // [C3,P2uP1] [P3,P3]
const std::vector<MajorPair>& c1_pairs();          // [2P2,C3] [P4,P3]

// g fits the first component and h the second, or the other way around.
bool pair_majorized(const Graph& g, const Graph& h, const MajorPair& pair);

// Decision procedure for G+H with |V(G)|, |V(H)| >= 3.
JoinVerdict classify_join_both_ge3(const Graph& g, const Graph& h);

enum class SmallFactor { P1, TwoP1, P2 };
std::optional<SmallFactor> parse_small_factor(const std::string& name);  // "P1" "2P1" "P2"

// Necessary conditions on G for G+h to be of class C0 / C1 when the other
// factor h has at most two vertices. Only necessary: a pass is reported as
// Inconclusive, never as a class. With no candidate class the C1 conditions
// are checked before the C0 ones (a C1 violation is the stronger finding).
//
//   C0, h in {2P1, P2}:  max degree <= 3;  |E| <= |V|+2 (2P1) / |V|+1 (P2)
//   C0, h = P1:          4|E| <= 9|V| - 11
//   C1, h in {2P1, P2}:  max degree <= 4
//   C1, h = 2P1:         5|E| <= 8|V|
//   C1, h = P1:          5|E| <= 13|V| - 18
JoinVerdict check_small_factor_conditions(const Graph& g, SmallFactor h,
                                          std::optional<GraphClass> candidate = std::nullopt);

// Zarankiewicz-type formula for cr(K_{m,n}), proven for min(m,n) <= 6.
long long cr_complete_bipartite(int m, int n);

// cr(C_n + P_m) = floor(m/2)floor((m-1)/2)floor(n/2)floor((n-1)/2) + 1,
// valid for m >= 2, n >= 3, min(m,n) <= 6.
long long cr_cycle_plus_path(int n, int m);

}  // namespace onep
