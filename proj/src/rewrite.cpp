#include "rewrite.hpp"

#include <algorithm>
#include <set>

namespace onep {

namespace {

int spoke_edge(const RotationSystem& rs, const std::vector<int>& orig, int hub, int other,
               int origin_edge) {
    for (size_t e = 0; e < rs.edges.size(); ++e) {
        auto [a, b] = rs.edges[e];
        if (orig[e] != origin_edge) continue;
        if ((a == hub && b == other) || (b == hub && a == other)) return static_cast<int>(e);
    }
    throw Error("rewrite: spoke not found");
}

void replace_dart(RotationSystem& rs, int v, int old_dart, int new_dart) {
    auto& r = rs.rot[v];
    auto it = std::find(r.begin(), r.end(), old_dart);
    if (it == r.end()) throw Error("rewrite: dart not found in rotation");
    *it = new_dart;
}

int next_in_rot(const RotationSystem& rs, int dart) {
    const auto& r = rs.rot[rs.src(dart)];
    auto it = std::find(r.begin(), r.end(), dart);
    return r[(it - r.begin() + 1) % r.size()];
}

// Rebuild after surgery: drop the listed planarization edges, drop the (now
// isolated) hub vertex, keep origins aligned.
void compact(RotationSystem& rs, std::vector<int>& orig, const std::vector<int>& dead_edges,
             int hub) {
    std::vector<int> remap;
    rs = remove_edges(rs, dead_edges, &remap);
    std::vector<int> new_orig(rs.edges.size(), -1);
    for (size_t e = 0; e < remap.size(); ++e)
        if (remap[e] >= 0) new_orig[remap[e]] = orig[e];
    orig = std::move(new_orig);
    if (!rs.rot[hub].empty()) throw Error("rewrite: hub not isolated before removal");
    rs = remove_vertex(rs, hub, /*drop_vertex_id=*/true);
}

}  // namespace

Drawing eliminate_overlap3(const Drawing& d) {
    auto bad = validate_drawing(d, SpecMode::Strict);
    if (!bad.empty()) throw Error("eliminate_overlap3: invalid drawing: " + bad.front());

    // smallest (c1, c2, rerouted edge) with |N(c1) ∩ N(c2)| >= 3 and the
    // rerouted edge of c2's pair spanning both edges of c1's pair
    int ci = -1, cj = -1, reroute = -1;
    for (int i = 0; i < d.hub_count() && ci < 0; ++i) {
        auto a = pair_endpoints(d.base, d.spec.pairs[i]);
        std::set<int> na(a.begin(), a.end());
        std::set<int> e1_side{a[0], a[1]}, e2_side{a[2], a[3]};
        for (int j = 0; j < d.hub_count() && ci < 0; ++j) {
            if (j == i) continue;
            auto b = pair_endpoints(d.base, d.spec.pairs[j]);
            int shared = 0;
            for (int v : std::set<int>(b.begin(), b.end()))
                if (na.count(v)) ++shared;
            if (shared < 3) continue;
            for (int f : {d.spec.pairs[j].e1, d.spec.pairs[j].e2}) {
                auto [fu, fv] = d.base.edge(f);
                bool split = (e1_side.count(fu) && e2_side.count(fv)) ||
                             (e1_side.count(fv) && e2_side.count(fu));
                if (split && (reroute < 0 || f < reroute)) {
                    ci = i;
                    cj = j;
                    reroute = f;
                }
            }
        }
    }
    if (ci < 0) throw Error("eliminate_overlap3: no overlap >= 3 pair exists");

    RotationSystem rs = d.pl;
    std::vector<int> orig = d.origin;
    int hub2 = d.hub(cj);
    int partner = d.spec.pairs[cj].e1 == reroute ? d.spec.pairs[cj].e2 : d.spec.pairs[cj].e1;
    auto [x, z] = d.base.edge(reroute);
    auto [p, q] = d.base.edge(partner);

    // smooth the partner edge through c2: its two segments become one true edge
    int sp = spoke_edge(rs, orig, hub2, p, partner);
    int sq = spoke_edge(rs, orig, hub2, q, partner);
    int sx = spoke_edge(rs, orig, hub2, x, reroute);
    int sz = spoke_edge(rs, orig, hub2, z, reroute);
    int m = static_cast<int>(rs.edges.size());
    rs.edges.emplace_back(p, q);
    orig.push_back(partner);
    replace_dart(rs, p, rs.edges[sp].first == p ? 2 * sp : 2 * sp + 1, 2 * m);
    replace_dart(rs, q, rs.edges[sq].first == q ? 2 * sq : 2 * sq + 1, 2 * m + 1);
    for (int v : {x, z}) {
        int se = v == x ? sx : sz;
        auto& r = rs.rot[v];
        int dart = rs.edges[se].first == v ? 2 * se : 2 * se + 1;
        r.erase(std::find(r.begin(), r.end(), dart));
    }
    rs.rot[hub2].clear();
    compact(rs, orig, {sp, sq, sx, sz}, hub2);

    // reinsert xz into the corner face at c1 between its x- and z-segments;
    // alternation makes those two darts rotation-consecutive at c1
    int hub1 = d.hub(ci) > hub2 ? d.hub(ci) - 1 : d.hub(ci);
    int e1 = d.spec.pairs[ci].e1, e2 = d.spec.pairs[ci].e2;
    auto incident_pair_edge = [&](int vert) {
        auto [eu, ev] = d.base.edge(e1);
        return (eu == vert || ev == vert) ? e1 : e2;
    };
    int seg_x = spoke_edge(rs, orig, hub1, x, incident_pair_edge(x));
    int seg_z = spoke_edge(rs, orig, hub1, z, incident_pair_edge(z));
    int dart_cx = rs.edges[seg_x].first == hub1 ? 2 * seg_x : 2 * seg_x + 1;
    int dart_cz = rs.edges[seg_z].first == hub1 ? 2 * seg_z : 2 * seg_z + 1;
    int d_a, d_b;
    if (next_in_rot(rs, dart_cx) == dart_cz) {
        d_a = RotationSystem::twin(dart_cx);                  // x -> c1, on the corner face
        d_b = next_in_rot(rs, RotationSystem::twin(dart_cz)); // face continues out of z
    } else if (next_in_rot(rs, dart_cz) == dart_cx) {
        d_a = RotationSystem::twin(dart_cz);
        d_b = next_in_rot(rs, RotationSystem::twin(dart_cx));
    } else {
        throw Error("eliminate_overlap3: segments not consecutive at c1");
    }
    insert_edge_on_face(rs, d_a, d_b);
    orig.push_back(reroute);

    Drawing out;
    out.base = d.base;
    out.spec = d.spec;
    out.spec.pairs.erase(out.spec.pairs.begin() + cj);
    out.pl = std::move(rs);
    out.origin = std::move(orig);
    return out;
}

Drawing normalize_drawing(const Drawing& d, int* steps) {
    Drawing cur = d;
    int count = 0;
    while (spec_max_overlap(cur.base, cur.spec) >= 3) {
        cur = eliminate_overlap3(cur);
        ++count;
    }
    if (steps) *steps = count;
    return cur;
}

Drawing eliminate_adjacent_crossing(const Drawing& raw) {
    auto bad = validate_drawing(raw, SpecMode::Raw);
    if (!bad.empty()) throw Error("eliminate_adjacent_crossing: invalid drawing: " + bad.front());

    int pick = -1, shared = -1;
    for (int i = 0; i < raw.hub_count() && pick < 0; ++i) {
        auto [u1, v1, u2, v2] = pair_endpoints(raw.base, raw.spec.pairs[i]);
        for (int s : {u1, v1})
            if (s == u2 || s == v2) {
                pick = i;
                shared = s;
            }
    }
    if (pick < 0) return raw;  // no adjacent crossings: identity

    int e1 = raw.spec.pairs[pick].e1, e2 = raw.spec.pairs[pick].e2;
    auto [a1, b1] = raw.base.edge(e1);
    auto [a2, b2] = raw.base.edge(e2);
    int u = shared;
    int v = a1 == u ? b1 : a1;  // far endpoint of e1
    int w = a2 == u ? b2 : a2;  // far endpoint of e2
    int hub = raw.hub(pick);

    RotationSystem rs = raw.pl;
    std::vector<int> orig = raw.origin;
    int s1u = spoke_edge(rs, orig, hub, u, e1);
    int s1v = spoke_edge(rs, orig, hub, v, e1);
    int s2u = spoke_edge(rs, orig, hub, u, e2);
    int s2w = spoke_edge(rs, orig, hub, w, e2);

    // splice: the shared-endpoint segment of each edge continues into the
    // far segment of the other; the reconnected dart pairs are rotation
    // adjacent at the hub, so the plane is preserved
    int muv = static_cast<int>(rs.edges.size());
    rs.edges.emplace_back(u, v);
    orig.push_back(e1);
    int muw = static_cast<int>(rs.edges.size());
    rs.edges.emplace_back(u, w);
    orig.push_back(e2);
    replace_dart(rs, u, rs.edges[s2u].first == u ? 2 * s2u : 2 * s2u + 1, 2 * muv);
    replace_dart(rs, v, rs.edges[s1v].first == v ? 2 * s1v : 2 * s1v + 1, 2 * muv + 1);
    replace_dart(rs, u, rs.edges[s1u].first == u ? 2 * s1u : 2 * s1u + 1, 2 * muw);
    replace_dart(rs, w, rs.edges[s2w].first == w ? 2 * s2w : 2 * s2w + 1, 2 * muw + 1);
    rs.rot[hub].clear();
    compact(rs, orig, {s1u, s1v, s2u, s2w}, hub);

    Drawing out;
    out.base = raw.base;
    out.spec = raw.spec;
    out.spec.pairs.erase(out.spec.pairs.begin() + pick);
    out.pl = std::move(rs);
    out.origin = std::move(orig);
    return out;
}

Drawing eliminate_adjacent_crossings(const Drawing& raw, int* steps) {
    Drawing cur = raw;
    int count = 0;
    while (true) {
        Drawing next = eliminate_adjacent_crossing(cur);
        if (next.spec.pairs.size() == cur.spec.pairs.size()) break;
        cur = std::move(next);
        ++count;
    }
    if (steps) *steps = count;
    return cur;
}

}  // namespace onep
