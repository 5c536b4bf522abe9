#include "rotation.hpp"

#include <algorithm>
#include <numeric>

namespace onep {

std::vector<std::string> RotationSystem::validate() const {
    std::vector<std::string> bad;
    if (n < 0) bad.push_back("negative vertex count");
    if (static_cast<int>(rot.size()) != n) {
        bad.push_back("rotation table size does not match vertex count");
        return bad;
    }
    for (const auto& [u, v] : edges)
        if (u < 0 || u >= n || v < 0 || v >= n) {
            bad.push_back("edge endpoint out of range");
            return bad;
        }
    std::vector<int> seen(dart_count(), 0);
    for (int v = 0; v < n; ++v) {
        for (int d : rot[v]) {
            if (d < 0 || d >= dart_count()) {
                bad.push_back("dart id out of range at vertex " + std::to_string(v));
                return bad;
            }
            if (src(d) != v)
                bad.push_back("dart " + std::to_string(d) + " listed at wrong vertex " +
                              std::to_string(v));
            if (++seen[d] > 1) bad.push_back("dart " + std::to_string(d) + " listed twice");
        }
    }
    for (int d = 0; d < dart_count(); ++d)
        if (!seen[d]) bad.push_back("dart " + std::to_string(d) + " missing from rotations");
    return bad;
}

FaceSet trace_faces(const RotationSystem& rs) {
    auto bad = rs.validate();
    if (!bad.empty()) throw Error("trace_faces: malformed rotation system: " + bad.front());

    int nd = rs.dart_count();
    // sigma_next[d] = dart after d in the rotation at src(d)
    std::vector<int> sigma_next(nd, -1);
    for (int v = 0; v < rs.n; ++v) {
        const auto& r = rs.rot[v];
        for (size_t i = 0; i < r.size(); ++i) sigma_next[r[i]] = r[(i + 1) % r.size()];
    }

    FaceSet fs;
    fs.vertex_count = rs.n;
    fs.edge_count = static_cast<int>(rs.edges.size());
    fs.face_of_dart.assign(nd, -1);
    for (int d0 = 0; d0 < nd; ++d0) {
        if (fs.face_of_dart[d0] >= 0) continue;
        std::vector<int> face;
        int d = d0;
        do {
            fs.face_of_dart[d] = static_cast<int>(fs.faces.size());
            face.push_back(d);
            d = sigma_next[RotationSystem::twin(d)];
        } while (d != d0);
        fs.faces.push_back(std::move(face));
    }

    // Per-component Euler accounting. Components over vertices via edges;
    // an isolated vertex forms a component with one face and genus 0.
    std::vector<int> comp(rs.n, -1);
    std::vector<std::vector<int>> adj(rs.n);
    for (const auto& [u, v] : rs.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int ncomp = 0;
    for (int s = 0; s < rs.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    fs.components = ncomp;
    std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
    for (int v = 0; v < rs.n; ++v) ++cv[comp[v]];
    for (const auto& [u, v] : rs.edges) ++ce[comp[u]];
    for (const auto& face : fs.faces) ++cf[comp[rs.src(face[0])]];
    fs.face_count = 0;
    fs.genus = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (ce[c] == 0) cf[c] = 1;  // lone vertex: the surrounding face
        fs.face_count += cf[c];
        int twice_genus = 2 - cv[c] + ce[c] - cf[c];
        fs.genus += twice_genus / 2;
    }
    return fs;
}

bool is_planar_embedding(const RotationSystem& rs) { return trace_faces(rs).genus == 0; }

namespace {

void insert_before(std::vector<int>& r, int target, int new_dart) {
    auto it = std::find(r.begin(), r.end(), target);
    r.insert(it, new_dart);
}

}  // namespace

int insert_edge_on_face(RotationSystem& rs, int dart_a, int dart_b) {
    int a = rs.src(dart_a), b = rs.src(dart_b);
    int e = static_cast<int>(rs.edges.size());
    rs.edges.emplace_back(a, b);
    insert_before(rs.rot[a], dart_a, 2 * e);
    insert_before(rs.rot[b], dart_b, 2 * e + 1);
    return e;
}

RotationSystem remove_edges(const RotationSystem& rs, const std::vector<int>& edge_ids,
                            std::vector<int>* old_to_new) {
    std::vector<char> drop(rs.edges.size(), 0);
    for (int e : edge_ids) drop[e] = 1;
    std::vector<int> remap(rs.edges.size(), -1);
    RotationSystem out;
    out.n = rs.n;
    for (size_t e = 0; e < rs.edges.size(); ++e)
        if (!drop[e]) {
            remap[e] = static_cast<int>(out.edges.size());
            out.edges.push_back(rs.edges[e]);
        }
    out.rot.assign(rs.n, {});
    for (int v = 0; v < rs.n; ++v)
        for (int d : rs.rot[v]) {
            int e = d >> 1;
            if (!drop[e]) out.rot[v].push_back(2 * remap[e] + (d & 1));
        }
    if (old_to_new) *old_to_new = std::move(remap);
    return out;
}

RotationSystem remove_vertex(const RotationSystem& rs, int v, bool drop_vertex_id,
                             std::vector<int>* old_to_new_edges) {
    std::vector<int> incident;
    for (size_t e = 0; e < rs.edges.size(); ++e)
        if (rs.edges[e].first == v || rs.edges[e].second == v) incident.push_back(static_cast<int>(e));
    RotationSystem out = remove_edges(rs, incident, old_to_new_edges);
    if (drop_vertex_id) {
        out.rot.erase(out.rot.begin() + v);
        out.n -= 1;
        for (auto& [a, b] : out.edges) {
            if (a > v) --a;
            if (b > v) --b;
        }
    }
    return out;
}

}  // namespace onep
