#include "oneplanar.h"

#include <cstring>
#include <string>

#include "bounds.hpp"
#include "catalog.hpp"
#include "dot.hpp"
#include "drawing.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "joins.hpp"
#include "rewrite.hpp"
#include "search.hpp"

using namespace onep;

struct onep_graph {
    Graph g;
};
struct onep_drawing {
    Drawing d;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        t_last_error = e.what();
        return ONEP_ERR_PARAM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return ONEP_ERR_PARAM;
    }
}

int to_search_outcome(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return ONEP_SEARCH_FOUND;
        case SearchStatus::NoDrawing: return ONEP_SEARCH_NO_DRAWING;
        default: return ONEP_SEARCH_BUDGET;
    }
}

SearchBudget to_budget(const onep_budget* b) {
    SearchBudget out;
    if (!b) return out;
    out.max_crossings = b->max_crossings;
    if (b->class_cap >= 0 && b->class_cap <= 2)
        out.class_cap = static_cast<DrawingClass>(b->class_cap);
    out.node_limit = b->node_limit;
    out.jobs = b->jobs >= 1 ? b->jobs : 1;
    return out;
}

int to_c_class(DrawingClass c) { return static_cast<int>(c); }

int to_c_graph_class(GraphClass c) {
    switch (c) {
        case GraphClass::C0: return ONEP_GRAPH_C0;
        case GraphClass::C1: return ONEP_GRAPH_C1;
        case GraphClass::C2: return ONEP_GRAPH_C2;
        default: return ONEP_GRAPH_NOT_ONE_PLANAR;
    }
}

int to_c_join(JoinOutcome o) {
    switch (o) {
        case JoinOutcome::C0: return ONEP_GRAPH_C0;
        case JoinOutcome::C1: return ONEP_GRAPH_C1;
        case JoinOutcome::C2: return ONEP_GRAPH_C2;
        case JoinOutcome::NotOnePlanar: return ONEP_GRAPH_NOT_ONE_PLANAR;
        case JoinOutcome::ConditionViolated: return ONEP_JOIN_CONDITION_VIOLATED;
        default: return ONEP_JOIN_INCONCLUSIVE;
    }
}

template <typename Gen>
int run_generator(Gen&& gen, onep_graph** graph, onep_drawing** witness, char** claim) {
    return guarded([&] {
        FamilyInstance fi = gen();
        if (graph) *graph = new onep_graph{fi.graph};
        if (witness) *witness = new onep_drawing{fi.witness};
        if (claim) *claim = dup_string(fi.claim);
        return ONEP_OK;
    });
}

}  // namespace

extern "C" {

void onep_budget_init(onep_budget* b) {
    if (!b) return;
    b->max_crossings = -1;
    b->class_cap = -1;
    b->node_limit = -1;
    b->jobs = 1;
}

const char* onep_last_error(void) { return t_last_error.c_str(); }

void onep_string_free(char* s) { delete[] s; }

const char* onep_version(void) { return "oneplanar 1.0.0"; }

/* ---- graphs ---------------------------------------------------------- */

int onep_graph_from_name(const char* name, onep_graph** out) {
    if (!name || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            *out = new onep_graph{parse_graph_name(name)};
        } catch (const Error& e) {
            t_last_error = e.what();
            return ONEP_ERR_PARSE;
        }
        return ONEP_OK;
    });
}

int onep_graph_from_edges(int n, const int* endpoints, int m, onep_graph** out) {
    if (!out || (m > 0 && !endpoints)) return ONEP_ERR_PARAM;
    return guarded([&] {
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new onep_graph{Graph(n, std::move(edges))};
        return ONEP_OK;
    });
}

int onep_graph_read_file(const char* path, onep_graph** out) {
    if (!path || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            *out = new onep_graph{read_graph_file(path)};
        } catch (const Error& e) {
            t_last_error = e.what();
            return std::string(e.what()).find("cannot open") != std::string::npos ? ONEP_ERR_IO
                                                                                  : ONEP_ERR_PARSE;
        }
        return ONEP_OK;
    });
}

int onep_graph_write_file(const onep_graph* g, const char* path) {
    if (!g || !path) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            write_graph_file(path, g->g);
        } catch (const Error& e) {
            t_last_error = e.what();
            return ONEP_ERR_IO;
        }
        return ONEP_OK;
    });
}

void onep_graph_free(onep_graph* g) { delete g; }

int onep_graph_vertex_count(const onep_graph* g) { return g ? g->g.vertex_count() : -1; }
int onep_graph_edge_count(const onep_graph* g) { return g ? g->g.edge_count() : -1; }

int onep_graph_edge(const onep_graph* g, int index, int* u, int* v) {
    if (!g || index < 0 || index >= g->g.edge_count()) return ONEP_ERR_PARAM;
    if (u) *u = g->g.edge(index).first;
    if (v) *v = g->g.edge(index).second;
    return ONEP_OK;
}

int onep_graph_max_degree(const onep_graph* g) { return g ? g->g.max_degree() : -1; }

int onep_graph_join(const onep_graph* g, const onep_graph* h, onep_graph** out) {
    if (!g || !h || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = new onep_graph{join(g->g, h->g)};
        return ONEP_OK;
    });
}

int onep_graph_disjoint_union(const onep_graph* g, const onep_graph* h, onep_graph** out) {
    if (!g || !h || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = new onep_graph{disjoint_union(g->g, h->g)};
        return ONEP_OK;
    });
}

int onep_graph_is_subgraph(const onep_graph* g, const onep_graph* host, int* result) {
    if (!g || !host || !result) return ONEP_ERR_PARAM;
    return guarded([&] {
        *result = is_subgraph(g->g, host->g) ? 1 : 0;
        return ONEP_OK;
    });
}

int onep_graph_to_dot(const onep_graph* g, char** out) {
    if (!g || !out) return ONEP_ERR_PARAM;
    *out = dup_string(graph_to_dot(g->g));
    return ONEP_OK;
}

/* ---- drawings -------------------------------------------------------- */

int onep_drawing_read_file(const char* path, int raw_mode, onep_drawing** out) {
    if (!path || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            *out = new onep_drawing{
                read_drawing_file(path, raw_mode ? SpecMode::Raw : SpecMode::Strict)};
        } catch (const Error& e) {
            t_last_error = e.what();
            return std::string(e.what()).find("cannot open") != std::string::npos ? ONEP_ERR_IO
                                                                                  : ONEP_ERR_PARSE;
        }
        return ONEP_OK;
    });
}

int onep_drawing_write_file(const onep_drawing* d, const char* path) {
    if (!d || !path) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            write_drawing_file(path, d->d);
        } catch (const Error& e) {
            t_last_error = e.what();
            return ONEP_ERR_IO;
        }
        return ONEP_OK;
    });
}

void onep_drawing_free(onep_drawing* d) { delete d; }

int onep_drawing_crossing_count(const onep_drawing* d) { return d ? d->d.spec.size() : -1; }

int onep_drawing_validate(const onep_drawing* d, int raw_mode, int* valid, char** report) {
    if (!d) return ONEP_ERR_PARAM;
    return guarded([&] {
        auto bad = validate_drawing(d->d, raw_mode ? SpecMode::Raw : SpecMode::Strict);
        if (valid) *valid = bad.empty() ? 1 : 0;
        if (report) {
            std::string text;
            for (const auto& b : bad) {
                text += b;
                text += '\n';
            }
            *report = dup_string(text);
        }
        return ONEP_OK;
    });
}

int onep_drawing_class(const onep_drawing* d, int* cls) {
    if (!d || !cls) return ONEP_ERR_PARAM;
    return guarded([&] {
        try {
            *cls = to_c_class(drawing_class(d->d));
        } catch (const Error& e) {
            t_last_error = e.what();
            return ONEP_ERR_INVALID;
        }
        return ONEP_OK;
    });
}

int onep_drawing_max_overlap(const onep_drawing* d, int* overlap) {
    if (!d || !overlap) return ONEP_ERR_PARAM;
    return guarded([&] {
        *overlap = spec_max_overlap(d->d.base, d->d.spec);
        return ONEP_OK;
    });
}

int onep_drawing_base_graph(const onep_drawing* d, onep_graph** out) {
    if (!d || !out) return ONEP_ERR_PARAM;
    *out = new onep_graph{d->d.base};
    return ONEP_OK;
}

int onep_drawing_to_dot(const onep_drawing* d, char** out) {
    if (!d || !out) return ONEP_ERR_PARAM;
    *out = dup_string(drawing_to_dot(d->d));
    return ONEP_OK;
}

int onep_drawing_eliminate_overlap3(const onep_drawing* d, onep_drawing** out) {
    if (!d || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = new onep_drawing{eliminate_overlap3(d->d)};
        return ONEP_OK;
    });
}

int onep_drawing_normalize(const onep_drawing* d, onep_drawing** out, int* steps) {
    if (!d || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        int n = 0;
        *out = new onep_drawing{normalize_drawing(d->d, &n)};
        if (steps) *steps = n;
        return ONEP_OK;
    });
}

int onep_drawing_eliminate_adjacent(const onep_drawing* d, onep_drawing** out, int* steps) {
    if (!d || !out) return ONEP_ERR_PARAM;
    return guarded([&] {
        int n = 0;
        *out = new onep_drawing{eliminate_adjacent_crossings(d->d, &n)};
        if (steps) *steps = n;
        return ONEP_OK;
    });
}

int onep_realize_spec(const onep_graph* g, const int* crossings, int pairs, onep_drawing** out) {
    if (!g || !out || (pairs > 0 && !crossings)) return ONEP_ERR_PARAM;
    return guarded([&] {
        std::vector<std::array<int, 4>> vp;
        for (int i = 0; i < pairs; ++i)
            vp.push_back({crossings[4 * i], crossings[4 * i + 1], crossings[4 * i + 2],
                          crossings[4 * i + 3]});
        auto spec = make_spec(g->g, vp);
        auto d = realize_crossing_spec(g->g, spec);
        *out = d ? new onep_drawing{*d} : nullptr;
        return ONEP_OK;
    });
}

/* ---- bounds ---------------------------------------------------------- */

int onep_bound_c0_max_crossings(int64_t n, int64_t* out) {
    if (!out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = bound_c0_max_crossings(n);
        return ONEP_OK;
    });
}

int onep_bound_c1_max_crossings(int64_t n, int64_t* out) {
    if (!out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = bound_c1_max_crossings(n);
        return ONEP_OK;
    });
}

int onep_bound_max_edges(int64_t n, int cls, int64_t* num, int64_t* den) {
    if (!num || !den || cls < 0 || cls > 2) return ONEP_ERR_PARAM;
    return guarded([&] {
        Rational r = bound_max_edges(n, static_cast<GraphClass>(cls));
        *num = r.num;
        *den = r.den;
        return ONEP_OK;
    });
}

/* ---- search ---------------------------------------------------------- */

int onep_min_crossings(const onep_graph* g, const onep_budget* budget, int* outcome, int64_t* min,
                       onep_drawing** witness) {
    if (!g || !outcome) return ONEP_ERR_PARAM;
    return guarded([&] {
        auto r = min_one_planar_crossings(g->g, to_budget(budget));
        *outcome = to_search_outcome(r.status);
        if (min) *min = r.status == SearchStatus::Found ? r.min_crossings : -1;
        if (witness) *witness = r.witness ? new onep_drawing{*r.witness} : nullptr;
        return ONEP_OK;
    });
}

int onep_classify_graph(const onep_graph* g, const onep_budget* budget, int* outcome, int* cls,
                        onep_drawing** witness, char** partial) {
    if (!g || !outcome || !cls) return ONEP_ERR_PARAM;
    return guarded([&] {
        auto r = classify_graph(g->g, to_budget(budget));
        *outcome = to_search_outcome(r.status);
        *cls = to_c_graph_class(r.cls);
        if (witness) *witness = r.witness ? new onep_drawing{*r.witness} : nullptr;
        if (partial) *partial = dup_string(r.partial);
        return ONEP_OK;
    });
}

int onep_has_class_drawing(const onep_graph* g, int cls, int64_t exact_crossings,
                           const onep_budget* budget, onep_drawing** out) {
    if (!g || !out || cls < 0 || cls > 2) return ONEP_ERR_PARAM;
    return guarded([&] {
        std::optional<int> exact;
        if (exact_crossings >= 0) exact = static_cast<int>(exact_crossings);
        auto d = has_class_drawing(g->g, static_cast<DrawingClass>(cls), exact, to_budget(budget));
        *out = d ? new onep_drawing{*d} : nullptr;
        return ONEP_OK;
    });
}

/* ---- joins ----------------------------------------------------------- */

int onep_classify_join(const onep_graph* g, const onep_graph* h, int* verdict, char** rule) {
    if (!g || !h || !verdict) return ONEP_ERR_PARAM;
    return guarded([&] {
        auto v = classify_join_both_ge3(g->g, h->g);
        *verdict = to_c_join(v.outcome);
        if (rule) *rule = dup_string(v.rule);
        return ONEP_OK;
    });
}

int onep_check_small_factor_conditions(const onep_graph* g, const char* small_factor,
                                       int candidate, int* verdict, char** rule) {
    if (!g || !small_factor || !verdict) return ONEP_ERR_PARAM;
    return guarded([&] {
        auto h = parse_small_factor(small_factor);
        if (!h) {
            t_last_error = "small factor must be P1, 2P1 or P2";
            return ONEP_ERR_PARAM;
        }
        std::optional<GraphClass> cand;
        if (candidate == ONEP_GRAPH_C0) cand = GraphClass::C0;
        else if (candidate == ONEP_GRAPH_C1) cand = GraphClass::C1;
        else if (candidate >= 0) {
            t_last_error = "candidate class must be C0, C1 or -1";
            return ONEP_ERR_PARAM;
        }
        auto v = check_small_factor_conditions(g->g, *h, cand);
        *verdict = to_c_join(v.outcome);
        if (rule) *rule = dup_string(v.rule);
        return ONEP_OK;
    });
}

int onep_cr_complete_bipartite(int m, int n, int64_t* out) {
    if (!out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = cr_complete_bipartite(m, n);
        return ONEP_OK;
    });
}

int onep_cr_cycle_plus_path(int n, int m, int64_t* out) {
    if (!out) return ONEP_ERR_PARAM;
    return guarded([&] {
        *out = cr_cycle_plus_path(n, m);
        return ONEP_OK;
    });
}

/* ---- generators ------------------------------------------------------ */

int onep_gen_cycle_two_chords(int k, onep_graph** graph, onep_drawing** witness, char** claim) {
    return run_generator([&] { return gen_cycle_two_chords(k); }, graph, witness, claim);
}

int onep_gen_cycle_two_chords_minus(int k, onep_graph** graph, onep_drawing** witness,
                                    char** claim) {
    return run_generator([&] { return gen_cycle_two_chords_minus(k); }, graph, witness, claim);
}

int onep_gen_ladderlike_c0_p1(int k, onep_graph** graph, onep_drawing** witness, char** claim) {
    return run_generator([&] { return gen_ladderlike_c0_p1(k); }, graph, witness, claim);
}

int onep_gen_4l_cycle_c1(int l, onep_graph** graph, onep_drawing** witness, char** claim) {
    return run_generator([&] { return gen_4l_cycle_c1(l); }, graph, witness, claim);
}

}  // extern "C"
