#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace onep {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw Error("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw Error("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n_) throw Error("graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error("graph: duplicate edge " + std::to_string(dup->first) + "-" +
                    std::to_string(dup->second));
    rebuild_adjacency();
}

void Graph::rebuild_adjacency() {
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v}) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, v + ng);
    return Graph(ng + nh, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    return Graph(ng + h.vertex_count(), std::move(edges));
}

namespace {

bool extend_map(const Graph& g, const Graph& host, const std::vector<int>& order, size_t pos,
                std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int gv = order[pos];
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
        if (used[hv] || host.degree(hv) < g.degree(gv)) continue;
        bool ok = true;
        for (int gn : g.neighbors(gv)) {
            if (map[gn] >= 0 && !host.has_edge(hv, map[gn])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[gv] = hv;
        used[hv] = true;
        if (extend_map(g, host, order, pos + 1, map, used)) return true;
        map[gv] = -1;
        used[hv] = false;
    }
    return false;
}

}  // namespace

bool is_subgraph(const Graph& g, const Graph& host) {
    if (g.vertex_count() > host.vertex_count() || g.edge_count() > host.edge_count()) return false;
    std::vector<int> order(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<bool> used(host.vertex_count(), false);
    return extend_map(g, host, order, 0, map, used);
}

Graph read_graph(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw Error("graph file: missing header line");
    std::istringstream hs(header);
    int n = 0, m = 0;
    if (!(hs >> n >> m)) throw Error("graph file: bad header '" + header + "'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el)) throw Error("graph file: expected " + std::to_string(m) + " edges");
        std::istringstream es(el);
        int u, v;
        if (!(es >> u >> v)) throw Error("graph file: bad edge line '" + el + "'");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    write_graph(out, g);
}

}  // namespace onep
