#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onep {

/// Error thrown on invalid parameters or malformed input data.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Edge = std::pair<int, int>;  // normalized u < v

// Simple undirected graph on dense vertex ids 0..n-1. Edges are stored
// sorted and deduplicated; self-loops are rejected. Instances are immutable
// after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) { rebuild_adjacency(); }
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const;  // -1 if absent
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void rebuild_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Join product: disjoint copies of g and h plus all edges between them.
// The second factor is relabeled by offset |V(g)|.
Graph join(const Graph& g, const Graph& h);

// Disjoint union, second factor relabeled by offset |V(g)|.
Graph disjoint_union(const Graph& g, const Graph& h);

// True iff an injective vertex map g -> host carries every edge of g to an
// edge of host. Degree-pruned backtracking; intended for hosts of at most
// ~8 vertices.
bool is_subgraph(const Graph& g, const Graph& host);

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace onep
