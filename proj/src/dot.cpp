#include "dot.hpp"

#include <sstream>

namespace onep {

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string drawing_to_dot(const Drawing& d) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < d.true_count(); ++v) out << "  " << v << ";\n";
    for (int i = 0; i < d.hub_count(); ++i)
        out << "  x" << i << " [shape=square, style=filled, fillcolor=gray];\n";
    auto name = [&](int v) {
        return d.is_hub(v) ? "x" + std::to_string(v - d.true_count()) : std::to_string(v);
    };
    for (size_t e = 0; e < d.pl.edges.size(); ++e) {
        auto [u, v] = d.pl.edges[e];
        out << "  " << name(u) << " -- " << name(v);
        if (d.is_hub(u) || d.is_hub(v)) {
            auto [a, b] = d.base.edge(d.origin[e]);
            out << " [style=dashed, label=\"" << a << "-" << b << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace onep
