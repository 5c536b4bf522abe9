#pragma once

#include <string>

#include "drawing.hpp"

namespace onep {

// Graphviz text for the graph / the planarization of a drawing. False
// vertices are drawn as filled squares named x<i>; segments of crossed
// edges are dashed and labeled with the edge they belong to. Visualization
// aid only, no coordinates.
std::string graph_to_dot(const Graph& g);
std::string drawing_to_dot(const Drawing& d);

}  // namespace onep
