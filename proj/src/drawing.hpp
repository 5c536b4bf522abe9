#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rotation.hpp"

namespace onep {

// An unordered pair of base edges designated to cross. Indices into
// Graph::edges(), normalized e1 < e2.
struct CrossingPair {
    int e1 = -1, e2 = -1;
    friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
    friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
};

struct CrossingSpec {
    std::vector<CrossingPair> pairs;  // sorted by (e1, e2)
    int size() const { return static_cast<int>(pairs.size()); }
    friend bool operator==(const CrossingSpec&, const CrossingSpec&) = default;
};

CrossingSpec make_spec(const Graph& g, const std::vector<std::array<int, 4>>& vertex_pairs);

enum class SpecMode { Strict, Raw };  // Raw additionally permits one shared endpoint per pair

// Empty result means valid. Strict mode enforces four distinct endpoints per
// pair; both modes enforce "each edge crossed at most once".
std::vector<std::string> validate_spec(const Graph& g, const CrossingSpec& spec, SpecMode mode);

enum class DrawingClass { C0, C1, C2, Unnormalized };
const char* drawing_class_name(DrawingClass c);

// Endpoint sets of the two edges of each pair determine the class:
// max pairwise |endpoints(p) ∩ endpoints(q)| of 0 -> C0, 1 -> C1, 2 -> C2,
// >= 3 -> Unnormalized. Empty and singleton specs are C0.
// Throws Error if the spec is invalid for g.
int spec_max_overlap(const Graph& g, const CrossingSpec& spec);
std::pair<int, DrawingClass> spec_overlap_class(const Graph& g, const CrossingSpec& spec);

// Planarization of a 1-planar drawing: true vertices 0..n-1 carry the base
// graph, one degree-4 false vertex (hub) per crossing pair, and every
// planarization edge maps back to the base edge it is a piece of.
struct Drawing {
    Graph base;
    CrossingSpec spec;
    RotationSystem pl;        // vertices: 0..n-1 true, n+i = hub of spec.pairs[i]
    std::vector<int> origin;  // pl edge index -> base edge index

    int true_count() const { return base.vertex_count(); }
    int hub_count() const { return spec.size(); }
    int hub(int i) const { return base.vertex_count() + i; }
    bool is_hub(int v) const { return v >= base.vertex_count(); }
};

// All violated invariants, empty iff valid. Raw mode relaxes only the
// four-distinct-endpoints rule (adjacent crossings allowed).
std::vector<std::string> validate_drawing(const Drawing& d, SpecMode mode = SpecMode::Strict);

// Class of a valid drawing; depends only on the spec. Throws Error when the
// drawing does not validate strictly.
DrawingClass drawing_class(const Drawing& d);

// Skeleton of the planarization: uncrossed base edges plus four spokes per
// hub, in a fixed deterministic order. origin[i] maps each edge back.
struct Planarization {
    int n = 0;  // true + hub count
    std::vector<Edge> edges;
    std::vector<int> origin;
};
Planarization planarization_skeleton(const Graph& g, const CrossingSpec& spec);

// Skeleton plus a fresh 4-cycle of "kite" rim edges around every hub
// (u-x, x-v, v-z, z-u for pair (uv, xz)). The kite wheel is 3-connected, so
// any planar embedding of this multigraph forces the alternating rotation at
// every hub; conversely a valid drawing always admits the rim edges drawn
// close to the crossing. Hence: spec realizable <=> this graph is planar.
Planarization planarization_with_kites(const Graph& g, const CrossingSpec& spec);

// Returns a valid drawing of g whose crossing pairs are exactly `spec`, or
// nullopt if no such drawing exists. Deterministic. Throws Error on an
// invalid spec (distinguished from "no drawing exists").
std::optional<Drawing> realize_crossing_spec(const Graph& g, const CrossingSpec& spec);

// Drawing file format (sections GRAPH / CROSSINGS / ROTATIONS; '#' comments
// and blank lines ignored; false vertices named "x<i>" by CROSSINGS order).
void write_drawing(std::ostream& out, const Drawing& d);
Drawing read_drawing(std::istream& in, SpecMode mode = SpecMode::Strict);
void write_drawing_file(const std::string& path, const Drawing& d);
Drawing read_drawing_file(const std::string& path, SpecMode mode = SpecMode::Strict);

std::array<int, 4> pair_endpoints(const Graph& g, const CrossingPair& p);  // u1 v1 u2 v2

}  // namespace onep
