#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "drawing.hpp"

namespace onep {

namespace {

std::string vertex_token(const Drawing& d, int v) {
    return d.is_hub(v) ? "x" + std::to_string(v - d.true_count()) : std::to_string(v);
}

// canonical cyclic shift: start the list at the lexicographically smallest
// rotation so that serialize(load(serialize(d))) is byte-identical
std::vector<std::string> canonical_cycle(std::vector<std::string> toks) {
    if (toks.size() < 2) return toks;
    size_t best = 0;
    auto less_from = [&](size_t a, size_t b) {
        for (size_t k = 0; k < toks.size(); ++k) {
            const auto& x = toks[(a + k) % toks.size()];
            const auto& y = toks[(b + k) % toks.size()];
            if (x != y) return x < y;
        }
        return false;
    };
    for (size_t s = 1; s < toks.size(); ++s)
        if (less_from(s, best)) best = s;
    std::rotate(toks.begin(), toks.begin() + best, toks.end());
    return toks;
}

}  // namespace

void write_drawing(std::ostream& out, const Drawing& d) {
    out << "GRAPH\n";
    write_graph(out, d.base);
    out << "CROSSINGS\n";
    for (const auto& p : d.spec.pairs) {
        const auto& [u, v] = d.base.edge(p.e1);
        const auto& [x, z] = d.base.edge(p.e2);
        out << u << ' ' << v << ' ' << x << ' ' << z << '\n';
    }
    out << "ROTATIONS\n";
    for (int v = 0; v < d.pl.n; ++v) {
        std::vector<std::string> toks;
        for (int dart : d.pl.rot[v]) toks.push_back(vertex_token(d, d.pl.dst(dart)));
        toks = canonical_cycle(std::move(toks));
        out << vertex_token(d, v) << ':';
        for (const auto& t : toks) out << ' ' << t;
        out << '\n';
    }
}

namespace {

struct RawLines {
    std::string graph_text;
    std::vector<std::array<int, 4>> crossings;
    std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
};

RawLines split_sections(std::istream& in) {
    RawLines rl;
    enum { None, G, C, R } sec = None;
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::string trimmed = line.substr(i);
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        if (trimmed == "GRAPH") { sec = G; continue; }
        if (trimmed == "CROSSINGS") { sec = C; continue; }
        if (trimmed == "ROTATIONS") { sec = R; continue; }
        switch (sec) {
            case G:
                rl.graph_text += trimmed + "\n";
                break;
            case C: {
                std::istringstream ls(trimmed);
                std::array<int, 4> c{};
                if (!(ls >> c[0] >> c[1] >> c[2] >> c[3]))
                    throw Error("drawing file: bad crossing line '" + trimmed + "'");
                rl.crossings.push_back(c);
                break;
            }
            case R: {
                auto colon = trimmed.find(':');
                if (colon == std::string::npos)
                    throw Error("drawing file: rotation line missing ':' in '" + trimmed + "'");
                std::string name = trimmed.substr(0, colon);
                while (!name.empty() && name.back() == ' ') name.pop_back();
                std::istringstream ls(trimmed.substr(colon + 1));
                std::vector<std::string> nbrs;
                std::string tok;
                while (ls >> tok) nbrs.push_back(tok);
                rl.rotations.emplace_back(name, std::move(nbrs));
                break;
            }
            default:
                throw Error("drawing file: content before section header: '" + trimmed + "'");
        }
    }
    return rl;
}

int parse_vertex_token(const std::string& tok, int n_true, int n_hubs) {
    if (!tok.empty() && (tok[0] == 'x' || tok[0] == 'X')) {
        int i = std::stoi(tok.substr(1));
        if (i < 0 || i >= n_hubs) throw Error("drawing file: unknown false vertex " + tok);
        return n_true + i;
    }
    int v = std::stoi(tok);
    if (v < 0 || v >= n_true) throw Error("drawing file: vertex out of range: " + tok);
    return v;
}

}  // namespace

Drawing read_drawing(std::istream& in, SpecMode mode) {
    RawLines rl = split_sections(in);
    std::istringstream gs(rl.graph_text);
    Graph base = read_graph(gs);

    // crossings in file order; hub i of the loaded drawing is the i-th line
    // after canonical sorting (writer emits sorted order already)
    CrossingSpec spec = make_spec(base, rl.crossings);
    auto sbad = validate_spec(base, spec, mode);
    if (!sbad.empty()) throw Error("drawing file: " + sbad.front());

    Planarization skel = planarization_skeleton(base, spec);
    int n = skel.n, n_true = base.vertex_count();
    int n_hubs = spec.size();

    // neighbor token -> dart resolution; ambiguous only for parallel spokes
    // (raw mode, one shared endpoint). Collect per-vertex candidate edge ids.
    std::map<std::pair<int, int>, std::vector<int>> edges_between;  // (min,max) -> edge ids
    for (size_t e = 0; e < skel.edges.size(); ++e) {
        auto [a, b] = skel.edges[e];
        if (a > b) std::swap(a, b);
        edges_between[{a, b}].push_back(static_cast<int>(e));
    }

    if (rl.rotations.size() != static_cast<size_t>(n))
        throw Error("drawing file: expected " + std::to_string(n) + " rotation lines");

    std::vector<std::vector<int>> nbr_lists(n);
    std::vector<char> have(n, 0);
    for (auto& [name, toks] : rl.rotations) {
        int v = parse_vertex_token(name, n_true, n_hubs);
        if (have[v]) throw Error("drawing file: duplicate rotation line for " + name);
        have[v] = 1;
        for (const auto& t : toks) nbr_lists[v].push_back(parse_vertex_token(t, n_true, n_hubs));
    }

    // assign concrete darts; for repeated (v, w) incidences try the (at most
    // two) parallel-spoke assignments per hub and keep the first whose
    // embedding is structurally valid with genus 0
    std::vector<std::pair<int, int>> ambiguous;  // (vertex, position of 2nd occurrence)
    auto build = [&](unsigned swap_mask) -> std::optional<Drawing> {
        std::vector<std::vector<int>> rot(n);
        std::vector<std::map<std::pair<int, int>, int>> used(n);
        for (int v = 0; v < n; ++v) {
            for (int w : nbr_lists[v]) {
                auto k = std::minmax(v, w);
                auto it = edges_between.find({k.first, k.second});
                int occurrence = used[v][{k.first, k.second}]++;
                if (it == edges_between.end() ||
                    occurrence >= static_cast<int>(it->second.size()))
                    return std::nullopt;
                int pick = occurrence;
                if (it->second.size() == 2) {
                    // parallel spokes: optionally swap which occurrence is which
                    size_t amb_idx = 0;
                    for (; amb_idx < ambiguous.size(); ++amb_idx)
                        if (ambiguous[amb_idx] == std::make_pair(std::min(v, w), std::max(v, w)))
                            break;
                    if (amb_idx < ambiguous.size() && (swap_mask >> amb_idx) & 1u)
                        pick = 1 - occurrence;
                }
                int e = it->second[pick];
                rot[v].push_back(skel.edges[e].first == v ? 2 * e : 2 * e + 1);
            }
        }
        Drawing d;
        d.base = base;
        d.spec = spec;
        d.pl.n = n;
        d.pl.edges = skel.edges;
        d.pl.rot = std::move(rot);
        d.origin = skel.origin;
        auto bad = validate_drawing(d, mode);
        if (!bad.empty()) return std::nullopt;
        return d;
    };

    for (auto& [key, ids] : edges_between) {
        if (ids.size() == 2) ambiguous.push_back(key);
        if (ids.size() > 2) throw Error("drawing file: more than two parallel segments");
    }
    if (ambiguous.size() > 12) throw Error("drawing file: too many parallel segments");
    unsigned limit = 1u << ambiguous.size();
    for (unsigned mask = 0; mask < limit; ++mask) {
        auto d = build(mask);
        if (d) return *d;
    }
    throw Error("drawing file: rotations do not form a valid drawing");
}

void write_drawing_file(const std::string& path, const Drawing& d) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write drawing file: " + path);
    write_drawing(out, d);
}

Drawing read_drawing_file(const std::string& path, SpecMode mode) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open drawing file: " + path);
    return read_drawing(in, mode);
}

}  // namespace onep
