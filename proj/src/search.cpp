#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <unordered_set>

#include "planar.hpp"

namespace onep {

namespace {

constexpr long long kFlatLimit = 200000;  // flat-scan a size class only below this many specs

struct CandPair {
    int e1, e2;
    std::uint64_t vmask;
    std::uint64_t emask;
};

int overlap_cap_of(std::optional<DrawingClass> cap) {
    if (!cap) return 4;
    switch (*cap) {
        case DrawingClass::C0: return 0;
        case DrawingClass::C1: return 1;
        case DrawingClass::C2: return 2;
        default: return 4;
    }
}

std::vector<CandPair> candidate_pairs(const Graph& g) {
    if (g.vertex_count() > 64 || g.edge_count() > 64)
        throw Error("search: supports at most 64 vertices and 64 edges");
    std::vector<CandPair> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge(i);
        std::uint64_t mi = (1ull << a) | (1ull << b);
        for (int j = i + 1; j < g.edge_count(); ++j) {
            auto [c, d] = g.edge(j);
            std::uint64_t mj = (1ull << c) | (1ull << d);
            if (mi & mj) continue;  // adjacent edges never cross
            out.push_back({i, j, mi | mj, (1ull << i) | (1ull << j)});
        }
    }
    return out;
}

int popcount(std::uint64_t x) { return static_cast<int>(__builtin_popcountll(x)); }

// lexicographic DFS over index-increasing sequences of candidate pairs,
// maintaining edge-disjointness and the pairwise overlap cap
template <typename Visit>
bool enum_rec(const std::vector<CandPair>& cands, int size, int cap, size_t start,
              std::uint64_t used_edges, std::vector<const CandPair*>& chosen,
              std::vector<CrossingPair>& pairs, const Visit& visit) {
    if (size == 0) {
        CrossingSpec spec;
        spec.pairs = pairs;
        return visit(spec);
    }
    for (size_t i = start; i + size <= cands.size(); ++i) {
        const CandPair& c = cands[i];
        if (c.emask & used_edges) continue;
        bool ok = true;
        for (const CandPair* p : chosen)
            if (popcount(p->vmask & c.vmask) > cap) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(&c);
        pairs.push_back({c.e1, c.e2});
        bool cont = enum_rec(cands, size - 1, cap, i + 1, used_edges | c.emask, chosen, pairs, visit);
        chosen.pop_back();
        pairs.pop_back();
        if (!cont) return false;
    }
    return true;
}

long long count_specs(const std::vector<CandPair>& cands, int size, int cap, long long limit) {
    long long n = 0;
    std::vector<const CandPair*> chosen;
    std::vector<CrossingPair> pairs;
    enum_rec(cands, size, cap, 0, 0, chosen, pairs, [&](const CrossingSpec&) {
        ++n;
        return n < limit;
    });
    return n;
}

// ---- realizability ----------------------------------------------------

bool spec_realizable(const Graph& g, const CrossingSpec& spec, long long& nodes) {
    // skeleton first: it is a subgraph of the kite graph and much smaller
    Planarization sk = planarization_skeleton(g, spec);
    ++nodes;
    if (!is_planar(sk.n, sk.edges)) return false;
    Planarization pk = planarization_with_kites(g, spec);
    ++nodes;
    return is_planar(pk.n, pk.edges);
}

// ---- parallel flat scan over one spec size ----------------------------

struct FlatOutcome {
    bool exhausted = true;               // every spec of this size was tested
    std::optional<CrossingSpec> found;   // lexicographically least realizable
    long long nodes = 0;
};

FlatOutcome flat_scan(const Graph& g, const std::vector<CandPair>& cands, int size, int cap,
                      int jobs, long long node_limit) {
    FlatOutcome out;
    if (size == 0) {
        CrossingSpec empty;
        out.nodes = 0;
        long long n = 0;
        if (spec_realizable(g, empty, n)) out.found = empty;
        out.nodes = n;
        return out;
    }
    int nblocks = static_cast<int>(cands.size());
    if (jobs < 1) jobs = 1;
    if (node_limit >= 0) jobs = 1;  // exact budget accounting is sequential

    std::vector<std::optional<CrossingSpec>> block_found(nblocks);
    std::atomic<int> next_block{0};
    std::atomic<int> best_block{nblocks};
    std::atomic<long long> nodes{0};
    std::atomic<bool> out_of_budget{false};

    auto worker = [&]() {
        while (true) {
            int b = next_block.fetch_add(1);
            if (b >= nblocks || out_of_budget.load()) return;
            if (b > best_block.load()) continue;  // a smaller block already succeeded
            const CandPair& first = cands[b];
            std::vector<const CandPair*> chosen{&first};
            std::vector<CrossingPair> pairs{{first.e1, first.e2}};
            long long local_nodes = 0;
            enum_rec(cands, size - 1, cap, b + 1, first.emask, chosen, pairs,
                     [&](const CrossingSpec& spec) {
                         if (b > best_block.load() || out_of_budget.load()) return false;
                         if (node_limit >= 0 && nodes.load() + local_nodes >= node_limit) {
                             out_of_budget.store(true);
                             return false;
                         }
                         if (spec_realizable(g, spec, local_nodes)) {
                             block_found[b] = spec;
                             int cur = best_block.load();
                             while (b < cur && !best_block.compare_exchange_weak(cur, b)) {
                             }
                             return false;
                         }
                         return true;
                     });
            nodes.fetch_add(local_nodes);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    out.nodes = nodes.load();
    if (out_of_budget.load()) {
        out.exhausted = false;
        return out;
    }
    for (int b = 0; b < nblocks; ++b)
        if (block_found[b]) {
            out.found = block_found[b];
            break;
        }
    return out;
}

// ---- Kuratowski-guided existence search --------------------------------
//
// Decides whether any realizable spec with at most max_size pairs (and
// pairwise overlaps within cap) exists. At each node the planarization of
// the partial spec (undecided edges drawn plain) is tested; if planar
// including the kite rims, the partial spec itself is realizable. Otherwise
// a minimal nonplanar subgraph M is extracted, and any realizable superset
// must cross one of M's plain base edges: those crossings are the branches.
// Memoization collapses permutations of the same partial spec.

struct SpecHash {
    size_t operator()(const std::vector<CrossingPair>& v) const {
        size_t h = 146527;
        for (const auto& p : v) h = h * 1000003 + static_cast<size_t>(p.e1) * 97 + p.e2;
        return h;
    }
};

struct DfsEngine {
    const Graph& g;
    int max_size;
    int cap;
    long long node_limit;
    long long nodes = 0;
    bool budget_hit = false;
    std::unordered_set<std::vector<CrossingPair>, SpecHash> memo;
    std::vector<std::uint64_t> edge_vmask;

    DfsEngine(const Graph& g_, int max_size_, int cap_, long long node_limit_)
        : g(g_), max_size(max_size_), cap(cap_), node_limit(node_limit_) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            edge_vmask.push_back((1ull << a) | (1ull << b));
        }
    }

    bool planar_counted(int n, const std::vector<Edge>& edges) {
        ++nodes;
        if (node_limit >= 0 && nodes > node_limit) budget_hit = true;
        return is_planar(n, edges);
    }

    // minimal nonplanar sub-multigraph, preferring to delete true edges so
    // that the branching set stays small; returns surviving indices into
    // `edges`
    std::vector<int> minimal_nonplanar(int n, const std::vector<Edge>& edges,
                                       const std::vector<int>& origin) {
        std::vector<int> order;
        for (size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first < g.vertex_count() && edges[e].second < g.vertex_count() &&
                origin[e] >= 0)
                order.push_back(static_cast<int>(e));  // plain base edges first
        for (size_t e = 0; e < edges.size(); ++e)
            if (!(edges[e].first < g.vertex_count() && edges[e].second < g.vertex_count() &&
                  origin[e] >= 0))
                order.push_back(static_cast<int>(e));
        std::vector<char> alive(edges.size(), 1);
        for (int e : order) {
            if (budget_hit) break;
            alive[e] = 0;
            std::vector<Edge> sub;
            for (size_t k = 0; k < edges.size(); ++k)
                if (alive[k]) sub.push_back(edges[k]);
            if (planar_counted(n, sub)) alive[e] = 1;  // critical edge, keep
        }
        std::vector<int> survivors;
        for (size_t e = 0; e < edges.size(); ++e)
            if (alive[e]) survivors.push_back(static_cast<int>(e));
        return survivors;
    }

    std::optional<std::vector<CrossingPair>> run(std::vector<CrossingPair> spec) {
        if (budget_hit) return std::nullopt;
        if (!memo.insert(spec).second) return std::nullopt;

        CrossingSpec s;
        s.pairs = spec;
        Planarization sk = planarization_skeleton(g, s);
        bool sk_planar = planar_counted(sk.n, sk.edges);
        std::vector<int> witness_edges;
        const Planarization* witness_graph = &sk;
        Planarization pk;
        if (sk_planar) {
            pk = planarization_with_kites(g, s);
            if (planar_counted(pk.n, pk.edges)) return spec;  // realizable
            witness_graph = &pk;
        }
        if (static_cast<int>(spec.size()) >= max_size) return std::nullopt;
        if (budget_hit) return std::nullopt;
        witness_edges = minimal_nonplanar(witness_graph->n, witness_graph->edges, witness_graph->origin);

        std::uint64_t crossed = 0;
        for (const auto& p : spec) crossed |= (1ull << p.e1) | (1ull << p.e2);

        std::vector<int> branch_edges;
        for (int e : witness_edges) {
            const auto& eg = witness_graph->edges[e];
            if (eg.first >= g.vertex_count() || eg.second >= g.vertex_count()) continue;
            int be = witness_graph->origin[e];
            if (be < 0 || (crossed >> be) & 1) continue;
            branch_edges.push_back(be);
        }
        std::sort(branch_edges.begin(), branch_edges.end());
        branch_edges.erase(std::unique(branch_edges.begin(), branch_edges.end()),
                           branch_edges.end());

        for (int be : branch_edges) {
            for (int f = 0; f < g.edge_count(); ++f) {
                if (budget_hit) return std::nullopt;
                if (f == be || ((crossed >> f) & 1)) continue;
                if (edge_vmask[be] & edge_vmask[f]) continue;
                CrossingPair cand{std::min(be, f), std::max(be, f)};
                std::uint64_t cmask = edge_vmask[be] | edge_vmask[f];
                bool ok = true;
                for (const auto& p : spec)
                    if (popcount((edge_vmask[p.e1] | edge_vmask[p.e2]) & cmask) > cap) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto child = spec;
                child.push_back(cand);
                std::sort(child.begin(), child.end());
                if (auto r = run(std::move(child))) return r;
            }
        }
        return std::nullopt;
    }
};

// ---- ascending-size search with a class cap ----------------------------

struct PhaseResult {
    enum { None, Found, Budget } status = None;
    int k = -1;
    CrossingSpec spec;
    long long nodes = 0;
};

long long euler_min_crossings(const Graph& g) {
    // simple planar planarization: |E| + 2k <= 3(|V| + k) - 6, valid from
    // three vertices up; anything smaller is trivially planar
    if (g.vertex_count() < 3) return 0;
    long long m = g.edge_count() - 3ll * g.vertex_count() + 6;
    return std::max(0ll, m);
}

PhaseResult search_min_with_cap(const Graph& g, int cap, long long max_size, int jobs,
                                long long node_limit) {
    PhaseResult res;
    auto cands = candidate_pairs(g);
    long long lo = euler_min_crossings(g);
    for (long long k = lo; k <= max_size; ++k) {
        long long remaining = node_limit < 0 ? -1 : node_limit - res.nodes;
        if (node_limit >= 0 && remaining <= 0) {
            res.status = PhaseResult::Budget;
            return res;
        }
        long long n_specs = count_specs(cands, static_cast<int>(k), cap, kFlatLimit);
        if (n_specs == 0) continue;
        if (n_specs < kFlatLimit) {
            FlatOutcome fo = flat_scan(g, cands, static_cast<int>(k), cap, jobs, remaining);
            res.nodes += fo.nodes;
            if (!fo.exhausted) {
                res.status = PhaseResult::Budget;
                return res;
            }
            if (fo.found) {
                res.status = PhaseResult::Found;
                res.k = static_cast<int>(k);
                res.spec = *fo.found;
                return res;
            }
        } else {
            DfsEngine dfs(g, static_cast<int>(k), cap, remaining);
            auto found = dfs.run({});
            res.nodes += dfs.nodes;
            if (dfs.budget_hit) {
                res.status = PhaseResult::Budget;
                return res;
            }
            if (found) {
                // deterministic witness: lexicographically least realizable
                // spec of exactly this size (the DFS proves one exists)
                long long rem2 = node_limit < 0 ? -1 : node_limit - res.nodes;
                FlatOutcome fo = flat_scan(g, cands, static_cast<int>(k), cap, jobs, rem2);
                res.nodes += fo.nodes;
                if (!fo.exhausted || !fo.found) {
                    res.status = PhaseResult::Budget;
                    return res;
                }
                res.status = PhaseResult::Found;
                res.k = static_cast<int>(k);
                res.spec = *fo.found;
                return res;
            }
        }
    }
    res.status = PhaseResult::None;
    return res;
}

}  // namespace

long long enumerate_specs(const Graph& g, int size, std::optional<DrawingClass> cap,
                          const std::function<bool(const CrossingSpec&)>& visit) {
    if (size < 0) throw Error("enumerate_specs: size must be >= 0");
    auto cands = candidate_pairs(g);
    long long n = 0;
    if (size == 0) {
        visit(CrossingSpec{});
        return 1;
    }
    std::vector<const CandPair*> chosen;
    std::vector<CrossingPair> pairs;
    enum_rec(cands, size, overlap_cap_of(cap), 0, 0, chosen, pairs, [&](const CrossingSpec& s) {
        ++n;
        return visit(s);
    });
    return n;
}

std::vector<CrossingSpec> list_specs(const Graph& g, int size, std::optional<DrawingClass> cap) {
    std::vector<CrossingSpec> out;
    enumerate_specs(g, size, cap, [&](const CrossingSpec& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

MinCrossingsResult min_one_planar_crossings(const Graph& g, const SearchBudget& budget) {
    MinCrossingsResult res;
    long long full = g.edge_count() / 2;
    long long cap_k = budget.max_crossings < 0 ? full : std::min(budget.max_crossings, full);
    int cap = overlap_cap_of(budget.class_cap);
    if (!budget.class_cap) cap = 2;  // a minimum drawing is never class-unnormalized

    PhaseResult pr = search_min_with_cap(g, cap, cap_k, budget.jobs, budget.node_limit);
    res.nodes = pr.nodes;
    if (pr.status == PhaseResult::Found) {
        res.status = SearchStatus::Found;
        res.min_crossings = pr.k;
        res.witness = realize_crossing_spec(g, pr.spec);
        return res;
    }
    if (pr.status == PhaseResult::Budget || cap_k < full) {
        res.status = SearchStatus::BudgetExceeded;
        return res;
    }
    res.status = SearchStatus::NoDrawing;
    return res;
}

ClassifyResult classify_graph(const Graph& g, const SearchBudget& budget) {
    ClassifyResult res;
    long long full = g.edge_count() / 2;
    long long user = budget.max_crossings < 0 ? full : std::min(budget.max_crossings, full);
    long long nodes_left = budget.node_limit;
    auto spend = [&](long long used) {
        res.nodes += used;
        if (nodes_left >= 0) nodes_left = std::max(0ll, nodes_left - used);
    };

    struct Phase {
        GraphClass cls;
        int cap;
        long long bound;
    };
    long long c1_bound = g.vertex_count() >= 2 ? bound_c1_max_crossings(g.vertex_count()) : 0;
    std::vector<Phase> phases{{GraphClass::C0, 0, bound_c0_max_crossings(g.vertex_count())},
                              {GraphClass::C1, 1, c1_bound},
                              {GraphClass::C2, 2, full}};
    for (const auto& ph : phases) {
        long long bound = std::min(ph.bound, user);
        bool complete_bound = bound >= ph.bound || (ph.cls == GraphClass::C2 && bound >= full);
        PhaseResult pr = search_min_with_cap(g, ph.cap, bound, budget.jobs, nodes_left);
        spend(pr.nodes);
        if (pr.status == PhaseResult::Found) {
            res.status = SearchStatus::Found;
            res.cls = ph.cls;
            res.witness = realize_crossing_spec(g, pr.spec);
            return res;
        }
        if (pr.status == PhaseResult::Budget || !complete_bound) {
            res.status = SearchStatus::BudgetExceeded;
            res.partial = std::string("no ") + graph_class_name(ph.cls) +
                          "-witness within budget; smaller classes excluded";
            return res;
        }
    }
    res.status = SearchStatus::Found;
    res.cls = GraphClass::NotOnePlanar;
    return res;
}

std::optional<Drawing> has_class_drawing(const Graph& g, DrawingClass cls,
                                         std::optional<int> exact_crossings,
                                         const SearchBudget& budget) {
    if (cls == DrawingClass::Unnormalized)
        throw Error("has_class_drawing: class must be C0, C1 or C2");
    int cap = overlap_cap_of(cls);
    long long full = g.edge_count() / 2;
    long long theory = cls == DrawingClass::C0   ? bound_c0_max_crossings(g.vertex_count())
                       : cls == DrawingClass::C1 ? (g.vertex_count() >= 2
                                                        ? bound_c1_max_crossings(g.vertex_count())
                                                        : 0)
                                                 : full;
    if (exact_crossings) {
        if (*exact_crossings < 0) throw Error("has_class_drawing: negative crossing count");
        auto cands = candidate_pairs(g);
        FlatOutcome fo =
            flat_scan(g, cands, *exact_crossings, cap, budget.jobs, budget.node_limit);
        if (fo.found) return realize_crossing_spec(g, *fo.found);
        return std::nullopt;
    }
    long long bound = budget.max_crossings < 0 ? theory : std::min(budget.max_crossings, theory);
    PhaseResult pr = search_min_with_cap(g, cap, bound, budget.jobs, budget.node_limit);
    if (pr.status == PhaseResult::Found) return realize_crossing_spec(g, pr.spec);
    return std::nullopt;
}

}  // namespace onep
