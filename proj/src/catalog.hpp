#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace onep {

// Named small-graph families used throughout: paths, cycles, complete
// (multi)partite graphs, complete graphs, and disjoint unions of these.

Graph make_path(int n);                     // P_n, n >= 1
Graph make_cycle(int n);                    // C_n, n >= 3
Graph make_complete(int n);                 // K_n, n >= 1
Graph make_complete_bipartite(int m, int n);
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_empty(int n);                    // nP_1

// Micro-grammar for inline graph names, e.g. "C3", "P4", "K4,3", "K6",
// "K2,1,1", "2P2", "3P1", "C3uP1", "C3uC3".
//
//   name   := term ('u' term)*          'u' is disjoint union
//   term   := [count] family            integer count = multiplicity
//   family := 'P' int | 'C' int | 'K' int (',' int (',' int)?)?
//
// K with one parameter is the complete graph, two parameters the complete
// bipartite graph, three the complete tripartite graph.
Graph parse_graph_name(const std::string& name);

}  // namespace onep
