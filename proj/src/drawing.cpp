#include "drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planar.hpp"

namespace onep {

std::array<int, 4> pair_endpoints(const Graph& g, const CrossingPair& p) {
    const auto& [u1, v1] = g.edge(p.e1);
    const auto& [u2, v2] = g.edge(p.e2);
    return {u1, v1, u2, v2};
}

CrossingSpec make_spec(const Graph& g, const std::vector<std::array<int, 4>>& vertex_pairs) {
    CrossingSpec spec;
    for (const auto& [u, v, x, z] : vertex_pairs) {
        int e1 = g.edge_index(u, v), e2 = g.edge_index(x, z);
        if (e1 < 0 || e2 < 0) throw Error("make_spec: crossing references a non-edge");
        if (e1 > e2) std::swap(e1, e2);
        spec.pairs.push_back({e1, e2});
    }
    std::sort(spec.pairs.begin(), spec.pairs.end());
    return spec;
}

std::vector<std::string> validate_spec(const Graph& g, const CrossingSpec& spec, SpecMode mode) {
    std::vector<std::string> bad;
    std::vector<int> uses(g.edge_count(), 0);
    for (const auto& p : spec.pairs) {
        if (p.e1 < 0 || p.e2 >= g.edge_count() || p.e1 >= p.e2) {
            bad.push_back("spec: pair is not two distinct edge ids in range");
            continue;
        }
        ++uses[p.e1];
        ++uses[p.e2];
        auto ep = pair_endpoints(g, p);
        std::set<int> distinct(ep.begin(), ep.end());
        int need = mode == SpecMode::Strict ? 4 : 3;
        if (static_cast<int>(distinct.size()) < need)
            bad.push_back("spec: crossing edges " + std::to_string(p.e1) + "," +
                          std::to_string(p.e2) +
                          (mode == SpecMode::Strict ? " share an endpoint"
                                                    : " share more than one endpoint"));
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (uses[e] > 1)
            bad.push_back("spec: edge " + std::to_string(e) + " appears in " +
                          std::to_string(uses[e]) + " pairs");
    if (!std::is_sorted(spec.pairs.begin(), spec.pairs.end()))
        bad.push_back("spec: pairs not in canonical order");
    if (std::adjacent_find(spec.pairs.begin(), spec.pairs.end()) != spec.pairs.end())
        bad.push_back("spec: duplicate pair");
    return bad;
}

int spec_max_overlap(const Graph& g, const CrossingSpec& spec) {
    auto bad = validate_spec(g, spec, SpecMode::Strict);
    if (!bad.empty()) throw Error("spec_max_overlap: " + bad.front());
    int best = 0;
    for (size_t i = 0; i < spec.pairs.size(); ++i) {
        auto a = pair_endpoints(g, spec.pairs[i]);
        std::sort(a.begin(), a.end());
        for (size_t j = i + 1; j < spec.pairs.size(); ++j) {
            auto b = pair_endpoints(g, spec.pairs[j]);
            std::sort(b.begin(), b.end());
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            best = std::max(best, static_cast<int>(inter.size()));
        }
    }
    return best;
}

std::pair<int, DrawingClass> spec_overlap_class(const Graph& g, const CrossingSpec& spec) {
    int ov = spec_max_overlap(g, spec);
    DrawingClass c = ov == 0   ? DrawingClass::C0
                     : ov == 1 ? DrawingClass::C1
                     : ov == 2 ? DrawingClass::C2
                               : DrawingClass::Unnormalized;
    return {ov, c};
}

const char* drawing_class_name(DrawingClass c) {
    switch (c) {
        case DrawingClass::C0: return "C0-drawing";
        case DrawingClass::C1: return "C1-drawing";
        case DrawingClass::C2: return "C2-drawing";
        default: return "Unnormalized";
    }
}

Planarization planarization_skeleton(const Graph& g, const CrossingSpec& spec) {
    Planarization p;
    p.n = g.vertex_count() + spec.size();
    std::vector<char> crossed(g.edge_count(), 0);
    for (const auto& pr : spec.pairs) crossed[pr.e1] = crossed[pr.e2] = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!crossed[e]) {
            p.edges.push_back(g.edge(e));
            p.origin.push_back(e);
        }
    for (int i = 0; i < spec.size(); ++i) {
        int hub = g.vertex_count() + i;
        auto [u1, v1, u2, v2] = pair_endpoints(g, spec.pairs[i]);
        for (int v : {u1, v1, u2, v2}) p.edges.emplace_back(hub, v);
        p.origin.push_back(spec.pairs[i].e1);
        p.origin.push_back(spec.pairs[i].e1);
        p.origin.push_back(spec.pairs[i].e2);
        p.origin.push_back(spec.pairs[i].e2);
    }
    return p;
}

Planarization planarization_with_kites(const Graph& g, const CrossingSpec& spec) {
    Planarization p = planarization_skeleton(g, spec);
    for (int i = 0; i < spec.size(); ++i) {
        auto [u, v, x, z] = pair_endpoints(g, spec.pairs[i]);
        // rim cycle in the alternating order u, x, v, z
        p.edges.emplace_back(u, x);
        p.edges.emplace_back(x, v);
        p.edges.emplace_back(v, z);
        p.edges.emplace_back(z, u);
        for (int k = 0; k < 4; ++k) p.origin.push_back(-1);
    }
    return p;
}

std::optional<Drawing> realize_crossing_spec(const Graph& g, const CrossingSpec& spec) {
    auto bad = validate_spec(g, spec, SpecMode::Strict);
    if (!bad.empty()) throw Error("realize_crossing_spec: " + bad.front());
    Planarization pk = planarization_with_kites(g, spec);
    auto emb = find_planar_embedding(pk.n, pk.edges);
    if (!emb) return std::nullopt;
    std::vector<int> kite_ids;
    for (size_t e = 0; e < pk.origin.size(); ++e)
        if (pk.origin[e] < 0) kite_ids.push_back(static_cast<int>(e));
    Drawing d;
    d.base = g;
    d.spec = spec;
    d.pl = remove_edges(*emb, kite_ids);
    for (size_t e = 0; e < pk.origin.size(); ++e)
        if (pk.origin[e] >= 0) d.origin.push_back(pk.origin[e]);
    return d;
}

std::vector<std::string> validate_drawing(const Drawing& d, SpecMode mode) {
    std::vector<std::string> bad = validate_spec(d.base, d.spec, mode);

    auto rbad = d.pl.validate();
    bad.insert(bad.end(), rbad.begin(), rbad.end());
    if (!rbad.empty()) return bad;

    if (d.pl.n != d.base.vertex_count() + d.spec.size()) {
        bad.push_back("planarization vertex count != true vertices + crossings");
        return bad;
    }
    if (d.origin.size() != d.pl.edges.size()) {
        bad.push_back("origin map size mismatch");
        return bad;
    }

    // planarization edge multiset must be: uncrossed base edges (origin =
    // themselves) + 4 spokes per hub (origin = the crossed edge piece)
    Planarization expect = planarization_skeleton(d.base, d.spec);
    auto key = [](Edge e, int orig) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return std::make_tuple(e.first, e.second, orig);
    };
    std::multiset<std::tuple<int, int, int>> want, got;
    for (size_t e = 0; e < expect.edges.size(); ++e) want.insert(key(expect.edges[e], expect.origin[e]));
    for (size_t e = 0; e < d.pl.edges.size(); ++e) got.insert(key(d.pl.edges[e], d.origin[e]));
    if (want != got) {
        bad.push_back("planarization edges with origins do not match base graph + crossings");
        return bad;
    }

    for (int i = 0; i < d.hub_count(); ++i) {
        int h = d.hub(i);
        const auto& r = d.pl.rot[h];
        if (r.size() != 4) {
            bad.push_back("false vertex x" + std::to_string(i) + " has degree " +
                          std::to_string(r.size()) + ", expected 4");
            continue;
        }
        bool adj_false = false;
        for (int dart : r)
            if (d.is_hub(d.pl.dst(dart))) adj_false = true;
        if (adj_false) {
            bad.push_back("false vertices adjacent at x" + std::to_string(i));
            continue;
        }
        // rotation must alternate between the two crossing edges
        if (d.origin[r[0] >> 1] == d.origin[r[1] >> 1] ||
            d.origin[r[0] >> 1] != d.origin[r[2] >> 1] ||
            d.origin[r[1] >> 1] != d.origin[r[3] >> 1])
            bad.push_back("rotation at x" + std::to_string(i) +
                          " does not alternate between the crossing edges");
    }
    for (size_t e = 0; e < d.pl.edges.size(); ++e) {
        auto [a, b] = d.pl.edges[e];
        if (d.is_hub(a) && d.is_hub(b)) bad.push_back("false vertices adjacent");
    }
    if (!bad.empty()) return bad;

    auto fs = trace_faces(d.pl);
    if (fs.genus != 0)
        bad.push_back("planarization has genus " + std::to_string(fs.genus) + ", expected 0");
    return bad;
}

DrawingClass drawing_class(const Drawing& d) {
    auto bad = validate_drawing(d, SpecMode::Strict);
    if (!bad.empty()) throw Error("drawing_class: invalid drawing: " + bad.front());
    return spec_overlap_class(d.base, d.spec).second;
}

}  // namespace onep
