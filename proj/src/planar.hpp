#pragma once

#include <optional>
#include <vector>

#include "rotation.hpp"

namespace onep {

// Planarity test with embedding extraction for multigraphs (parallel edges
// and loops allowed). Returns a genus-0 rotation system whose edge list is
// exactly `edges` (same order), or nullopt if the multigraph is nonplanar.
//
// Demoucron-style face insertion over biconnected blocks, O(V*E). All
// choices derive from sorted ids, so the result is deterministic for a
// fixed input ordering.
std::optional<RotationSystem> find_planar_embedding(int n, const std::vector<Edge>& edges);

// Convenience: planarity verdict only.
bool is_planar(int n, const std::vector<Edge>& edges);

}  // namespace onep
