#pragma once

// Test-only builders: random valid drawings and overlap-3 injections.

#include <optional>
#include <random>

#include "drawing.hpp"
#include "planar.hpp"
#include "rotation.hpp"

namespace onep::testing {

// Random planar graph: shuffled candidate edges, kept while planarity holds.
inline Graph random_planar_graph(std::mt19937& rng, int n, int max_edges) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> kept;
    for (const auto& e : all) {
        if (static_cast<int>(kept.size()) >= max_edges) break;
        kept.push_back(e);
        if (!is_planar(n, kept)) kept.pop_back();
    }
    return Graph(n, std::move(kept));
}

// Valid drawing with `crossings` crossings: repeatedly pick a face of the
// current planarization with four distinct true vertices and add two fresh
// edges designated to cross inside it.
inline std::optional<Drawing> random_drawing(std::mt19937& rng, int n, int base_edges,
                                             int crossings) {
    Graph g = random_planar_graph(rng, n, base_edges);
    CrossingSpec spec;
    for (int c = 0; c < crossings; ++c) {
        auto d = realize_crossing_spec(g, spec);
        if (!d) return std::nullopt;
        auto fs = trace_faces(d->pl);
        std::vector<std::array<int, 4>> options;
        for (const auto& face : fs.faces) {
            std::vector<int> true_verts;
            for (int dart : face) {
                int v = d->pl.src(dart);
                if (!d->is_hub(v)) true_verts.push_back(v);
            }
            if (true_verts.size() < 4) continue;
            // interleaved endpoints a < c and b < d in cyclic face order
            for (size_t off = 0; off + 3 < true_verts.size(); ++off) {
                int a = true_verts[off], b = true_verts[off + 1], cc = true_verts[off + 2],
                    dd = true_verts[off + 3];
                if (a == cc || b == dd || a == b || cc == dd || a == dd || b == cc) continue;
                if (g.has_edge(a, cc) || g.has_edge(b, dd)) continue;
                if (Edge{std::min(a, cc), std::max(a, cc)} == Edge{std::min(b, dd), std::max(b, dd)})
                    continue;
                options.push_back({a, cc, b, dd});
            }
        }
        if (options.empty()) return std::nullopt;
        auto pick = options[rng() % options.size()];
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(std::min(pick[0], pick[1]), std::max(pick[0], pick[1]));
        edges.emplace_back(std::min(pick[2], pick[3]), std::max(pick[2], pick[3]));
        Graph g2(n, edges);
        CrossingSpec spec2 = spec;
        spec2.pairs.push_back({g2.edge_index(pick[0], pick[1]), g2.edge_index(pick[2], pick[3])});
        // edge indices shift when edges are added: rebuild from endpoints
        std::vector<std::array<int, 4>> vp;
        for (const auto& p : spec.pairs) {
            auto [u1, v1] = g.edge(p.e1);
            auto [u2, v2] = g.edge(p.e2);
            vp.push_back({u1, v1, u2, v2});
        }
        vp.push_back({pick[0], pick[1], pick[2], pick[3]});
        spec = make_spec(g2, vp);
        if (!realize_crossing_spec(g2, spec)) return std::nullopt;
        g = g2;
    }
    return realize_crossing_spec(g, spec);
}

// Adds an edge between two neighbors of an existing crossing and a fresh
// partner edge forced to cross it, creating a pairwise overlap of 3.
inline std::optional<Drawing> inject_overlap3(std::mt19937& rng, const Drawing& d) {
    if (d.spec.size() == 0) return std::nullopt;
    std::vector<int> hubs(d.hub_count());
    for (int i = 0; i < d.hub_count(); ++i) hubs[i] = i;
    std::shuffle(hubs.begin(), hubs.end(), rng);
    for (int hub : hubs) {
        auto [x, y, z, w] = pair_endpoints(d.base, d.spec.pairs[hub]);
        // candidate rerouted edge: one endpoint per crossing edge
        std::array<std::pair<int, int>, 4> spans{{{x, z}, {x, w}, {y, z}, {y, w}}};
        std::shuffle(spans.begin(), spans.end(), rng);
        for (auto [a, b] : spans) {
            if (d.base.has_edge(a, b)) continue;
            // partner edge from one of the two remaining crossing endpoints
            // to a vertex outside the crossing, giving |overlap| = 3
            std::vector<int> rest;
            for (int v : {x, y, z, w})
                if (v != a && v != b) rest.push_back(v);
            std::vector<int> outside;
            for (int v = 0; v < d.base.vertex_count(); ++v)
                if (v != x && v != y && v != z && v != w) outside.push_back(v);
            std::shuffle(outside.begin(), outside.end(), rng);
            for (int r : rest) {
                for (int q : outside) {
                    if (d.base.has_edge(r, q)) continue;
                    std::vector<Edge> edges = d.base.edges();
                    edges.emplace_back(std::min(a, b), std::max(a, b));
                    edges.emplace_back(std::min(r, q), std::max(r, q));
                    Graph g2(d.base.vertex_count(), edges);
                    std::vector<std::array<int, 4>> vp;
                    for (const auto& p : d.spec.pairs) {
                        auto [u1, v1] = d.base.edge(p.e1);
                        auto [u2, v2] = d.base.edge(p.e2);
                        vp.push_back({u1, v1, u2, v2});
                    }
                    vp.push_back({a, b, r, q});
                    CrossingSpec spec2 = make_spec(g2, vp);
                    if (!validate_spec(g2, spec2, SpecMode::Strict).empty()) continue;
                    if (spec_max_overlap(g2, spec2) < 3) continue;
                    auto d2 = realize_crossing_spec(g2, spec2);
                    if (d2) return d2;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace onep::testing
