#include "generators.hpp"

#include "catalog.hpp"

namespace onep {

namespace {

Drawing realize_or_fail(const Graph& g, const CrossingSpec& spec, const char* what) {
    auto d = realize_crossing_spec(g, spec);
    if (!d) throw Error(std::string(what) + ": constructed spec is not realizable");
    return *d;
}

Graph cycle_two_chords(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    edges.emplace_back(0, 2);  // v1v3, drawn inside
    edges.emplace_back(3, 5);  // v4v6, drawn outside
    return Graph(k, std::move(edges));
}

}  // namespace

FamilyInstance gen_cycle_two_chords(int k) {
    if (k < 6) throw Error("gen_cycle_two_chords: k must be >= 6");
    Graph g = cycle_two_chords(k);
    Graph j = join(g, make_empty(2));  // apexes k, k+1
    CrossingSpec spec = make_spec(j, {{k, 1, 0, 2}, {k + 1, 4, 3, 5}});
    FamilyInstance fi{g, realize_or_fail(j, spec, "gen_cycle_two_chords"),
                      "G_k on " + std::to_string(k) + " vertices, " + std::to_string(k + 2) +
                          " = |V|+2 edges, max degree 3; G_k + 2P1 has a C0-drawing with 2 crossings",
                      std::nullopt};
    return fi;
}

FamilyInstance gen_cycle_two_chords_minus(int k) {
    if (k < 6) throw Error("gen_cycle_two_chords_minus: k must be >= 6");
    Graph full = cycle_two_chords(k);
    std::vector<Edge> edges;
    for (const auto& e : full.edges())
        if (e != Edge{2, 3}) edges.push_back(e);  // drop v3v4
    Graph g(k, std::move(edges));
    Graph j = join(g, make_path(2));  // apexes k, k+1 joined by an edge
    CrossingSpec spec = make_spec(j, {{k, 1, 0, 2}, {k + 1, 4, 3, 5}});
    FamilyInstance fi{g, realize_or_fail(j, spec, "gen_cycle_two_chords_minus"),
                      "G_k^- on " + std::to_string(k) + " vertices, " + std::to_string(k + 1) +
                          " = |V|+1 edges, max degree 3; G_k^- + P2 has a C0-drawing",
                      std::nullopt};
    return fi;
}

FamilyInstance gen_ladderlike_c0_p1(int k) {
    if (k < 4 || k % 2 != 0) throw Error("gen_ladderlike_c0_p1: k must be even and >= 4");
    // a_i -> i-1 (i = 1..k), b_i -> k+i-1 (i = 1..k-1)
    auto a = [&](int i) { return i - 1; };
    auto b = [&](int i) { return k + i - 1; };
    int n = 2 * k - 1;
    std::vector<Edge> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(a(i), a(i + 1));
    for (int i = 1; i + 1 < k; ++i) edges.emplace_back(b(i), b(i + 1));
    for (int i = 1; i <= k - 1; ++i) {
        edges.emplace_back(std::min(a(i), b(i)), std::max(a(i), b(i)));
        edges.emplace_back(std::min(a(i + 1), b(i)), std::max(a(i + 1), b(i)));
    }
    edges.emplace_back(a(k - 2), a(k));
    for (int jj = 2; jj <= k - 2; jj += 2)
        edges.emplace_back(std::min(b(jj), a(jj - 1)), std::max(b(jj), a(jj - 1)));
    Graph g(n, std::move(edges));

    std::vector<std::array<int, 4>> self_pairs;
    for (int i = 1; i <= k - 3; i += 2) self_pairs.push_back({a(i), b(i + 1), a(i + 1), b(i)});
    CrossingSpec self_spec = make_spec(g, self_pairs);
    Drawing self = realize_or_fail(g, self_spec, "gen_ladderlike_c0_p1 (member drawing)");

    Graph j = join(g, make_empty(1));  // apex id 2k-1
    int apex = n;
    auto join_pairs = self_pairs;
    join_pairs.push_back({apex, a(k - 1), b(k - 1), a(k)});
    CrossingSpec spec = make_spec(j, join_pairs);
    FamilyInstance fi{g, realize_or_fail(j, spec, "gen_ladderlike_c0_p1"),
                      "G on " + std::to_string(n) + " vertices with 4|E| = 9|V|-11 (" +
                          std::to_string(g.edge_count()) + " edges); G + P1 has a C0-drawing",
                      self};
    return fi;
}

FamilyInstance gen_4l_cycle_c1(int l) {
    if (l < 2) throw Error("gen_4l_cycle_c1: l must be >= 2");
    int n = 4 * l;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    for (int k = 1; k <= l; ++k) edges.emplace_back(4 * k - 3, 4 * k - 1);  // inner chords
    edges.emplace_back(1, n - 1);                                          // outer chord v_{4l}v_2
    for (int k = 1; k <= l - 1; ++k) edges.emplace_back(4 * k - 1, 4 * k + 1);  // outer chords
    Graph g(n, std::move(edges));

    Graph j = join(g, make_empty(2));
    int in_apex = n, out_apex = n + 1;
    std::vector<std::array<int, 4>> pairs;
    for (int k = 1; k <= l; ++k) pairs.push_back({in_apex, 4 * k - 2, 4 * k - 3, 4 * k - 1});
    pairs.push_back({out_apex, 0, 1, n - 1});
    for (int k = 1; k <= l - 1; ++k) pairs.push_back({out_apex, 4 * k, 4 * k - 1, 4 * k + 1});
    CrossingSpec spec = make_spec(j, pairs);
    FamilyInstance fi{g, realize_or_fail(j, spec, "gen_4l_cycle_c1"),
                      "G on " + std::to_string(n) + " vertices with |E| = 1.5|V| (" +
                          std::to_string(g.edge_count()) +
                          " edges); G + 2P1 has a C1-drawing with " + std::to_string(2 * l) +
                          " crossings and no C0-drawing (14l > 13l + 1/2 edges)",
                      std::nullopt};
    return fi;
}

}  // namespace onep
