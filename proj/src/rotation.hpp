#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace onep {

// Combinatorial embedding: a multigraph with a cyclic order of outgoing
// darts around every vertex. Edge i owns darts 2i (u->v) and 2i+1 (v->u).
// Parallel edges and loops are permitted.
//
// Faces are the orbits of d -> next_at_source(twin(d)); with rotations read
// counterclockwise this walks each face keeping it on the left.
struct RotationSystem {
    int n = 0;
    std::vector<Edge> edges;              // unnormalized endpoint pairs (u, v)
    std::vector<std::vector<int>> rot;    // rot[v]: outgoing darts in cyclic order

    int dart_count() const { return static_cast<int>(edges.size()) * 2; }
    static int twin(int d) { return d ^ 1; }
    int src(int d) const { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; }
    int dst(int d) const { return src(twin(d)); }

    // Structural checks: rotation lists form a permutation of exactly the
    // outgoing darts of each vertex. Returns human-readable violations.
    std::vector<std::string> validate() const;
};

struct FaceSet {
    std::vector<std::vector<int>> faces;  // dart cycles, in discovery order
    std::vector<int> face_of_dart;
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;   // includes one face per isolated vertex
    int components = 0;
    int genus = 0;        // summed over components
};

// Traces all faces; throws Error if the rotation system is malformed.
// Deterministic: each face starts at its smallest unvisited dart, faces are
// discovered in increasing order of that dart.
FaceSet trace_faces(const RotationSystem& rs);

// True iff every connected component embeds with genus 0.
bool is_planar_embedding(const RotationSystem& rs);

// Inserts edge (src(dart_a), src(dart_b)) into the face that both darts lie
// on, splitting it. The new dart at src(dart_a) is placed immediately before
// dart_a in the rotation (likewise at dart_b). Returns the new edge index.
// Genus is preserved when dart_a and dart_b are on a common face.
int insert_edge_on_face(RotationSystem& rs, int dart_a, int dart_b);

// Rebuilds the rotation system with the given edges removed (darts dropped
// from rotations, edges reindexed). old_to_new, if non-null, receives the
// edge index remapping (-1 for removed).
RotationSystem remove_edges(const RotationSystem& rs, const std::vector<int>& edge_ids,
                            std::vector<int>* old_to_new = nullptr);

// Rebuilds with the given vertex and all incident edges removed. Remaining
// vertices are NOT renumbered (vertex stays as an isolated placeholder id)
// unless drop_vertex_id is true, in which case ids above it shift down.
RotationSystem remove_vertex(const RotationSystem& rs, int v, bool drop_vertex_id,
                             std::vector<int>* old_to_new_edges = nullptr);

}  // namespace onep
