#include "joins.hpp"

#include "catalog.hpp"

namespace onep {

const char* join_outcome_name(JoinOutcome o) {
    switch (o) {
        case JoinOutcome::C0: return "C0";
        case JoinOutcome::C1: return "C1";
        case JoinOutcome::C2: return "C2";
        case JoinOutcome::NotOnePlanar: return "NotOnePlanar";
        case JoinOutcome::ConditionViolated: return "ConditionViolated";
        default: return "Inconclusive";
    }
}

const std::vector<MajorPair>& one_planar_pairs() {
    static const std::vector<MajorPair> t{
        {"[C3uC3,C3]", parse_graph_name("C3uC3"), parse_graph_name("C3")},
        {"[C4,C4]", parse_graph_name("C4"), parse_graph_name("C4")},
        {"[C4,C3]", parse_graph_name("C4"), parse_graph_name("C3")},
        {"[K2,1,1,P3]", parse_graph_name("K2,1,1"), parse_graph_name("P3")},
    };
    return t;
}

const std::vector<MajorPair>& c0_pairs() {
    static const std::vector<MajorPair> t{
        {"[C3,P2uP1]", parse_graph_name("C3"), parse_graph_name("P2uP1")},
        {"[P3,P3]", parse_graph_name("P3"), parse_graph_name("P3")},
    };
    return t;
}

const std::vector<MajorPair>& c1_pairs() {
    static const std::vector<MajorPair> t{
        {"[2P2,C3]", parse_graph_name("2P2"), parse_graph_name("C3")},
        {"[P4,P3]", parse_graph_name("P4"), parse_graph_name("P3")},
    };
    return t;
}

bool pair_majorized(const Graph& g, const Graph& h, const MajorPair& pair) {
    return (is_subgraph(g, pair.first) && is_subgraph(h, pair.second)) ||
           (is_subgraph(g, pair.second) && is_subgraph(h, pair.first));
}

namespace {

const MajorPair* first_majorizing(const Graph& g, const Graph& h,
                                  const std::vector<MajorPair>& table) {
    for (const auto& p : table)
        if (pair_majorized(g, h, p)) return &p;
    return nullptr;
}

}  // namespace

JoinVerdict classify_join_both_ge3(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 3 || h.vertex_count() < 3)
        throw Error("classify_join_both_ge3: both factors need at least three vertices");
    if (const MajorPair* p = first_majorizing(g, h, one_planar_pairs()); !p)
        return {JoinOutcome::NotOnePlanar, "no 1-planar major pair"};
    else {
        if (const MajorPair* c0 = first_majorizing(g, h, c0_pairs()))
            return {JoinOutcome::C0, c0->name};
        if (const MajorPair* c1 = first_majorizing(g, h, c1_pairs()))
            return {JoinOutcome::C1, c1->name};
        return {JoinOutcome::C2, std::string("1-planar via ") + p->name + ", not in C0/C1 tables"};
    }
}

std::optional<SmallFactor> parse_small_factor(const std::string& name) {
    if (name == "P1" || name == "p1") return SmallFactor::P1;
    if (name == "2P1" || name == "2p1") return SmallFactor::TwoP1;
    if (name == "P2" || name == "p2") return SmallFactor::P2;
    return std::nullopt;
}

JoinVerdict check_small_factor_conditions(const Graph& g, SmallFactor h,
                                          std::optional<GraphClass> candidate) {
    long long V = g.vertex_count(), E = g.edge_count(), delta = g.max_degree();
    struct Cond {
        GraphClass cls;
        const char* id;
        bool ok;
    };
    std::vector<Cond> conds;
    switch (h) {
        case SmallFactor::TwoP1:
            conds.push_back({GraphClass::C1, "c1-max-degree (Delta <= 4)", delta <= 4});
            conds.push_back({GraphClass::C1, "c1-edge-bound (5|E| <= 8|V|)", 5 * E <= 8 * V});
            conds.push_back({GraphClass::C0, "c0-max-degree (Delta <= 3)", delta <= 3});
            conds.push_back({GraphClass::C0, "c0-edge-bound (|E| <= |V|+2)", E <= V + 2});
            break;
        case SmallFactor::P2:
            conds.push_back({GraphClass::C1, "c1-max-degree (Delta <= 4)", delta <= 4});
            conds.push_back({GraphClass::C0, "c0-max-degree (Delta <= 3)", delta <= 3});
            conds.push_back({GraphClass::C0, "c0-edge-bound (|E| <= |V|+1)", E <= V + 1});
            break;
        case SmallFactor::P1:
            conds.push_back(
                {GraphClass::C1, "c1-edge-bound (5|E| <= 13|V|-18)", 5 * E <= 13 * V - 18});
            conds.push_back(
                {GraphClass::C0, "c0-edge-bound (4|E| <= 9|V|-11)", 4 * E <= 9 * V - 11});
            break;
    }
    for (const auto& c : conds) {
        if (candidate && c.cls != *candidate) continue;
        if (!c.ok) return {JoinOutcome::ConditionViolated, c.id};
    }
    return {JoinOutcome::Inconclusive, "all necessary conditions hold"};
}

long long cr_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error("cr_complete_bipartite: m, n must be >= 1");
    if (std::min(m, n) > 6)
        throw Error("cr_complete_bipartite: formula proven only for min(m,n) <= 6");
    auto f = [](long long x) { return x / 2; };
    return f(m) * f(m - 1) * f(n) * f(n - 1);
}

long long cr_cycle_plus_path(int n, int m) {
    if (m < 2 || n < 3) throw Error("cr_cycle_plus_path: requires m >= 2, n >= 3");
    if (std::min(m, n) > 6)
        throw Error("cr_cycle_plus_path: formula proven only for min(m,n) <= 6");
    auto f = [](long long x) { return x / 2; };
    return f(m) * f(m - 1) * f(n) * f(n - 1) + 1;
}

}  // namespace onep
