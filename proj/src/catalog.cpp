#include "catalog.hpp"

#include <cctype>

namespace onep {

Graph make_path(int n) {
    if (n < 1) throw Error("P_n requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw Error("C_n requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw Error("K_n requires n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    return make_complete_multipartite({m, n});
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> start;
    for (int p : parts) {
        if (p < 1) throw Error("complete multipartite: part sizes must be >= 1");
        start.push_back(n);
        n += p;
    }
    std::vector<Edge> edges;
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b)
            for (int u = start[a]; u < start[a] + parts[a]; ++u)
                for (int v = start[b]; v < start[b] + parts[b]; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_empty(int n) {
    if (n < 1) throw Error("nP_1 requires n >= 1");
    return Graph(n);
}

namespace {

int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error("graph name: expected integer in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
}

Graph parse_term(const std::string& s, size_t& i) {
    int count = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) count = parse_int(s, i);
    if (i >= s.size()) throw Error("graph name: missing family letter in '" + s + "'");
    char fam = s[i++];
    Graph g;
    switch (fam) {
        case 'P':
        case 'p':
            g = make_path(parse_int(s, i));
            break;
        case 'C':
        case 'c':
            g = make_cycle(parse_int(s, i));
            break;
        case 'K':
        case 'k': {
            std::vector<int> parts{parse_int(s, i)};
            while (i < s.size() && s[i] == ',') {
                ++i;
                parts.push_back(parse_int(s, i));
            }
            if (parts.size() == 1)
                g = make_complete(parts[0]);
            else if (parts.size() <= 3)
                g = make_complete_multipartite(parts);
            else
                throw Error("graph name: K takes at most three parameters");
            break;
        }
        default:
            throw Error(std::string("graph name: unknown family '") + fam + "'");
    }
    if (count < 1) throw Error("graph name: multiplicity must be >= 1");
    Graph out = g;
    for (int c = 1; c < count; ++c) out = disjoint_union(out, g);
    return out;
}

}  // namespace

Graph parse_graph_name(const std::string& name) {
    size_t i = 0;
    Graph g = parse_term(name, i);
    while (i < name.size()) {
        if (name[i] != 'u' && name[i] != 'U')
            throw Error("graph name: unexpected character '" + std::string(1, name[i]) + "' in '" +
                        name + "'");
        ++i;
        g = disjoint_union(g, parse_term(name, i));
    }
    return g;
}

}  // namespace onep
