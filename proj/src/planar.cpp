#include "planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace onep {

namespace {

// Partial embedding of one biconnected block, darts expressed in terms of
// the original edge ids (dart of edge e: 2e / 2e+1).
struct BlockEmbedder {
    int n;
    const std::vector<Edge>& edges;
    std::vector<int> block_edges;              // original edge ids, sorted
    std::vector<char> in_h_vertex, in_h_edge;  // indexed by global id
    std::vector<std::vector<int>>& rot;        // global rotations, built in place
    std::vector<std::vector<int>> faces;       // live dart walks
    std::vector<char> face_live;

    BlockEmbedder(int n_, const std::vector<Edge>& es, std::vector<int> bes,
                  std::vector<std::vector<int>>& rot_)
        : n(n_), edges(es), block_edges(std::move(bes)), rot(rot_) {
        in_h_vertex.assign(n, 0);
        in_h_edge.assign(edges.size(), 0);
    }

    int dart(int e, int from) const { return edges[e].first == from ? 2 * e : 2 * e + 1; }
    int dsrc(int d) const { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; }

    // Embeds the block; false means nonplanar.
    bool run();

    void embed_cycle(const std::vector<int>& verts, const std::vector<int>& cyc_edges);
    void embed_path(const std::vector<int>& verts, const std::vector<int>& path_edges, int face_id);

    struct Bridge {
        std::vector<int> attach;  // sorted H-vertices
        std::vector<int> bedges;  // sorted edge ids
    };
    std::vector<Bridge> bridges() const;
    std::vector<int> face_vertices(int f) const;
};

void BlockEmbedder::embed_cycle(const std::vector<int>& verts, const std::vector<int>& cyc_edges) {
    size_t L = verts.size();
    std::vector<int> inner, outer;
    for (size_t k = 0; k < L; ++k) {
        int q = dart(cyc_edges[k], verts[k]);
        int prev = dart(cyc_edges[(k + L - 1) % L], verts[k]);
        rot[verts[k]] = {q, prev};
        inner.push_back(q);
        in_h_vertex[verts[k]] = 1;
        in_h_edge[cyc_edges[k]] = 1;
    }
    for (size_t k = L; k-- > 0;) outer.push_back(RotationSystem::twin(inner[k]));
    faces = {inner, outer};
    face_live = {1, 1};
}

void BlockEmbedder::embed_path(const std::vector<int>& verts, const std::vector<int>& path_edges,
                               int face_id) {
    const std::vector<int> walk = faces[face_id];
    int a1 = verts.front(), a2 = verts.back();
    size_t i = 0, j = 0;
    for (size_t k = 0; k < walk.size(); ++k) {
        if (dsrc(walk[k]) == a1) i = k;
        if (dsrc(walk[k]) == a2) j = k;
    }
    size_t t = path_edges.size();
    std::vector<int> q(t), r(t);
    for (size_t k = 0; k < t; ++k) {
        q[k] = dart(path_edges[k], verts[k]);
        r[k] = RotationSystem::twin(q[k]);
        in_h_edge[path_edges[k]] = 1;
    }
    // interior vertices: rotation [r_k, q_{k+1}]
    for (size_t k = 0; k + 1 < t; ++k) {
        rot[verts[k + 1]] = {r[k], q[k + 1]};
        in_h_vertex[verts[k + 1]] = 1;
    }
    auto insert_before = [&](int v, int target, int nd) {
        auto& rv = rot[v];
        rv.insert(std::find(rv.begin(), rv.end(), target), nd);
    };
    insert_before(a1, walk[i], q.front());
    insert_before(a2, walk[j], r.back());

    std::vector<int> fa(q.begin(), q.end()), fb(r.rbegin(), r.rend());
    for (size_t k = j; k != i; k = (k + 1) % walk.size()) fa.push_back(walk[k]);
    for (size_t k = i; k != j; k = (k + 1) % walk.size()) fb.push_back(walk[k]);
    face_live[face_id] = 0;
    faces.push_back(std::move(fa));
    face_live.push_back(1);
    faces.push_back(std::move(fb));
    face_live.push_back(1);
}

std::vector<int> BlockEmbedder::face_vertices(int f) const {
    std::vector<int> vs;
    for (int d : faces[f]) vs.push_back(dsrc(d));
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<BlockEmbedder::Bridge> BlockEmbedder::bridges() const {
    // union-find over non-H vertices, joined by unembedded edges
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : block_edges) {
        if (in_h_edge[e]) continue;
        auto [u, v] = edges[e];
        if (!in_h_vertex[u] && !in_h_vertex[v]) parent[find(u)] = find(v);
    }
    std::map<int, Bridge> groups;  // keyed by component root, or -2-e for chords
    for (int e : block_edges) {
        if (in_h_edge[e]) continue;
        auto [u, v] = edges[e];
        int key;
        if (!in_h_vertex[u])
            key = find(u);
        else if (!in_h_vertex[v])
            key = find(v);
        else
            key = -2 - e;  // chord: both endpoints embedded
        auto& b = groups[key];
        b.bedges.push_back(e);
        if (in_h_vertex[u]) b.attach.push_back(u);
        if (in_h_vertex[v]) b.attach.push_back(v);
    }
    std::vector<Bridge> out;
    for (auto& [key, b] : groups) {
        std::sort(b.attach.begin(), b.attach.end());
        b.attach.erase(std::unique(b.attach.begin(), b.attach.end()), b.attach.end());
        std::sort(b.bedges.begin(), b.bedges.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) {
        if (a.attach != b.attach) return a.attach < b.attach;
        return a.bedges.front() < b.bedges.front();
    });
    return out;
}

bool BlockEmbedder::run() {
    // initial cycle: walk from the smallest vertex along smallest unused
    // edges until a vertex repeats
    int start = n;
    std::vector<std::vector<int>> inc(n);
    for (int e : block_edges) {
        auto [u, v] = edges[e];
        inc[u].push_back(e);
        inc[v].push_back(e);
        start = std::min({start, u, v});
    }
    std::vector<int> pv, pe;  // walk vertices / edges
    std::vector<int> at(n, -1);
    int cur = start, prev_edge = -1;
    while (at[cur] < 0) {
        at[cur] = static_cast<int>(pv.size());
        pv.push_back(cur);
        int chosen = -1;
        for (int e : inc[cur])
            if (e != prev_edge && (chosen < 0 || e < chosen)) chosen = e;
        pe.push_back(chosen);
        prev_edge = chosen;
        cur = edges[chosen].first == cur ? edges[chosen].second : edges[chosen].first;
    }
    std::vector<int> cv(pv.begin() + at[cur], pv.end());
    std::vector<int> ce(pe.begin() + at[cur], pe.end());
    embed_cycle(cv, ce);

    size_t remaining = block_edges.size() - ce.size();
    while (remaining > 0) {
        auto bs = bridges();
        // admissible faces per bridge; a bridge with none kills the embedding,
        // a bridge with exactly one must be placed first
        std::vector<std::vector<int>> adm(bs.size());
        for (size_t bi = 0; bi < bs.size(); ++bi) {
            for (size_t f = 0; f < faces.size(); ++f) {
                if (!face_live[f]) continue;
                auto fv = face_vertices(f);
                if (std::includes(fv.begin(), fv.end(), bs[bi].attach.begin(), bs[bi].attach.end()))
                    adm[bi].push_back(static_cast<int>(f));
            }
            if (adm[bi].empty()) return false;
        }
        size_t chosen = 0;
        for (size_t bi = 0; bi < bs.size(); ++bi)
            if (adm[bi].size() == 1) {
                chosen = bi;
                break;
            }
        const Bridge& b = bs[chosen];
        int face_id = adm[chosen].front();

        // BFS path between two attachments, interior inside the bridge
        std::vector<int> parent_edge(n, -1), parent_vert(n, -1);
        std::vector<char> seen(n, 0);
        int a1 = b.attach.front(), target = -1;
        std::vector<std::vector<int>> binc(n);
        for (int e : b.bedges) {
            binc[edges[e].first].push_back(e);
            binc[edges[e].second].push_back(e);
        }
        std::vector<int> queue{a1};
        seen[a1] = 1;
        for (size_t qi = 0; qi < queue.size() && target < 0; ++qi) {
            int v = queue[qi];
            if (v != a1 && in_h_vertex[v]) continue;  // do not pass through other attachments
            for (int e : binc[v]) {
                int w = edges[e].first == v ? edges[e].second : edges[e].first;
                if (seen[w]) continue;
                seen[w] = 1;
                parent_edge[w] = e;
                parent_vert[w] = v;
                if (in_h_vertex[w]) {
                    target = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        std::vector<int> verts{target}, path_edges;
        for (int v = target; v != a1; v = parent_vert[v]) {
            path_edges.push_back(parent_edge[v]);
            verts.push_back(parent_vert[v]);
        }
        std::reverse(verts.begin(), verts.end());
        std::reverse(path_edges.begin(), path_edges.end());
        embed_path(verts, path_edges, face_id);
        remaining -= path_edges.size();
    }
    return true;
}

// DFS block decomposition on a multigraph; each edge lands in exactly one
// block. Parallel edges to the DFS parent count as back edges.
struct BlockFinder {
    int n;
    const std::vector<Edge>& edges;
    std::vector<std::vector<std::pair<int, int>>> inc;  // (neighbor, edge id)
    std::vector<int> num, low;
    int counter = 0;
    std::vector<int> estack;
    std::vector<std::vector<int>> blocks;

    BlockFinder(int n_, const std::vector<Edge>& es) : n(n_), edges(es), inc(n_), num(n_, -1), low(n_, 0) {
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (u == v) continue;  // loops handled separately
            inc[u].emplace_back(v, static_cast<int>(e));
            inc[v].emplace_back(u, static_cast<int>(e));
        }
        for (auto& l : inc) std::sort(l.begin(), l.end(), [](auto& a, auto& b) { return a.second < b.second; });
    }

    void dfs(int v, int parent_edge) {
        num[v] = low[v] = counter++;
        for (auto [w, e] : inc[v]) {
            if (e == parent_edge) continue;
            if (num[w] < 0) {
                estack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<int> blk;
                    while (true) {
                        int t = estack.back();
                        estack.pop_back();
                        blk.push_back(t);
                        if (t == e) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
            } else if (num[w] < num[v]) {
                estack.push_back(e);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::vector<int>> run() {
        for (int v = 0; v < n; ++v)
            if (num[v] < 0) dfs(v, -1);
        return blocks;
    }
};

}  // namespace

std::optional<RotationSystem> find_planar_embedding(int n, const std::vector<Edge>& edges) {
    for (const auto& [u, v] : edges)
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("find_planar_embedding: bad edge");

    std::vector<std::vector<int>> rot(n);
    BlockFinder bf(n, edges);
    auto blocks = bf.run();
    // per-vertex rotations are appended block by block; cut vertices get the
    // concatenation of their per-block rotations, which is always planar
    for (const auto& blk : blocks) {
        if (blk.size() == 1) {
            int e = blk[0];
            auto [u, v] = edges[e];
            rot[u].push_back(2 * e);
            rot[v].push_back(2 * e + 1);
            continue;
        }
        std::vector<std::vector<int>> brot(n);
        BlockEmbedder be(n, edges, blk, brot);
        if (!be.run()) return std::nullopt;
        for (int v = 0; v < n; ++v)
            if (!brot[v].empty()) rot[v].insert(rot[v].end(), brot[v].begin(), brot[v].end());
    }
    // loops: both darts adjacent, embedded in a face at the loop vertex
    for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == edges[e].second) {
            rot[edges[e].first].push_back(2 * static_cast<int>(e));
            rot[edges[e].first].push_back(2 * static_cast<int>(e) + 1);
        }

    RotationSystem rs;
    rs.n = n;
    rs.edges = edges;
    rs.rot = std::move(rot);
    return rs;
}

bool is_planar(int n, const std::vector<Edge>& edges) {
    return find_planar_embedding(n, edges).has_value();
}

}  // namespace onep
