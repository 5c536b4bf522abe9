// onep — command-line front end for the oneplanar shared library.
//
// Exit codes: 0 verdict produced, 2 invalid input, 3 budget exceeded or
// inconclusive.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oneplanar.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInconclusive = 3;

struct StringOut {
    char* s = nullptr;
    ~StringOut() { onep_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct GraphHandle {
    onep_graph* g = nullptr;
    ~GraphHandle() { onep_graph_free(g); }
};

struct DrawingHandle {
    onep_drawing* d = nullptr;
    ~DrawingHandle() { onep_drawing_free(d); }
};

[[noreturn]] void die(const std::string& msg, int code = kExitBadInput) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

void check(int rc, const char* what) {
    if (rc == ONEP_OK) return;
    die(std::string(what) + ": " + onep_last_error(),
        rc == ONEP_ERR_BUDGET ? kExitInconclusive : kExitBadInput);
}

onep_graph* load_graph(const std::string& file, const std::string& name) {
    onep_graph* g = nullptr;
    if (!file.empty() && !name.empty()) die("give either a graph file or an inline name, not both");
    if (!file.empty())
        check(onep_graph_read_file(file.c_str(), &g), "reading graph");
    else if (!name.empty())
        check(onep_graph_from_name(name.c_str(), &g), "parsing graph name");
    else
        die("missing graph: use --graph FILE or --name NAME");
    return g;
}

const char* class_names[] = {"C0-drawing", "C1-drawing", "C2-drawing", "Unnormalized"};
const char* graph_class_names[] = {"C0", "C1", "C2", "NotOnePlanar", "ConditionViolated",
                                   "Inconclusive"};

int parse_class_cap(const std::string& s) {
    if (s == "C0" || s == "c0") return ONEP_CLASS_C0;
    if (s == "C1" || s == "c1") return ONEP_CLASS_C1;
    if (s == "C2" || s == "c2") return ONEP_CLASS_C2;
    die("class must be C0, C1 or C2");
}

struct MachineBlock {
    bool enabled = false;
    std::vector<std::pair<std::string, std::string>> kv;
    void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
    void flush() const {
        if (!enabled) return;
        for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"onep — classification, search and rewriting of 1-planar drawings"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "append a machine-readable key=value block");

    // shared option storage
    std::string graph_file, name, drawing_file, out_file, g_name, g_file, h_name, h_file;
    std::string family, class_cap_str, for_class, h_small;
    bool raw = false;
    std::int64_t max_crossings = -1, node_limit = -1, n_arg = 0;
    int jobs = 1, param = 0;
    std::int64_t exact = -1;

    auto* validate = app.add_subcommand("validate", "validate a drawing file");
    validate->add_option("--drawing", drawing_file, "drawing file")->required();
    validate->add_flag("--raw", raw, "permit adjacent crossings");

    auto* classify_drawing = app.add_subcommand("classify-drawing", "class of a valid drawing");
    classify_drawing->add_option("--drawing", drawing_file)->required();

    auto* normalize = app.add_subcommand("normalize", "eliminate adjacent and overlap-3 crossings");
    normalize->add_option("--drawing", drawing_file)->required();
    normalize->add_option("--out", out_file, "output drawing file");
    normalize->add_flag("--raw", raw, "input may contain adjacent crossings");

    auto* search = app.add_subcommand("search", "minimum 1-planar crossing count");
    search->add_option("--graph", graph_file);
    search->add_option("--name", name, "inline catalog name, e.g. K4,4");
    search->add_option("--max-crossings", max_crossings);
    search->add_option("--class-cap", class_cap_str, "restrict drawings to C0/C1/C2");
    search->add_option("--node-limit", node_limit, "planarity-test budget");
    search->add_option("--jobs", jobs, "worker threads");
    search->add_option("--witness", out_file, "write a minimum witness drawing here");

    auto* classify_graph = app.add_subcommand("classify-graph", "C0/C1/C2/NotOnePlanar by search");
    classify_graph->add_option("--graph", graph_file);
    classify_graph->add_option("--name", name);
    classify_graph->add_option("--max-crossings", max_crossings);
    classify_graph->add_option("--node-limit", node_limit);
    classify_graph->add_option("--jobs", jobs);
    classify_graph->add_option("--witness", out_file);

    auto* has_drawing = app.add_subcommand("has-class-drawing", "find a drawing of a given class");
    has_drawing->add_option("--graph", graph_file);
    has_drawing->add_option("--name", name);
    has_drawing->add_option("--class", class_cap_str)->required();
    has_drawing->add_option("--crossings", exact, "exact crossing count");
    has_drawing->add_option("--jobs", jobs);
    has_drawing->add_option("--witness", out_file);

    auto* classify_join = app.add_subcommand("classify-join", "join class for factors with >= 3 vertices");
    classify_join->set_help_flag("--help", "print help");
    classify_join->add_option("--g", g_name, "first factor (catalog name)");
    classify_join->add_option("--g-file", g_file);
    classify_join->add_option("--h", h_name, "second factor (catalog name)");
    classify_join->add_option("--h-file", h_file);

    auto* check_conditions = app.add_subcommand("check-conditions", "necessary conditions for small factors");
    check_conditions->set_help_flag("--help", "print help");
    check_conditions->add_option("--g", g_name);
    check_conditions->add_option("--g-file", g_file);
    check_conditions->add_option("--h", h_small, "small factor: P1, 2P1 or P2")->required();
    check_conditions->add_option("--for", for_class, "candidate class C0 or C1");

    auto* generate = app.add_subcommand("generate", "extremal family instances");
    generate->add_option("--family", family, "gk | gk-minus | ladder | cycle4l")->required();
    generate->add_option("--param", param, "family parameter (k or l)")->required();
    generate->add_option("--graph-out", graph_file, "write the member graph here");
    generate->add_option("--drawing-out", out_file, "write the witness drawing here");

    auto* bounds = app.add_subcommand("bounds", "crossing and edge bounds for n vertices");
    bounds->add_option("--n", n_arg)->required();

    auto* export_dot = app.add_subcommand("export-dot", "Graphviz text for a graph or drawing");
    export_dot->add_option("--graph", graph_file);
    export_dot->add_option("--name", name);
    export_dot->add_option("--drawing", drawing_file);
    export_dot->add_option("--out", out_file);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    MachineBlock mb;
    mb.enabled = machine;

    onep_budget budget;
    onep_budget_init(&budget);
    budget.max_crossings = max_crossings;
    budget.node_limit = node_limit;
    budget.jobs = jobs;
    if (!class_cap_str.empty()) budget.class_cap = parse_class_cap(class_cap_str);

    if (*validate) {
        DrawingHandle d;
        check(onep_drawing_read_file(drawing_file.c_str(), raw ? 1 : 0, &d.d), "reading drawing");
        int ok = 0;
        StringOut report;
        check(onep_drawing_validate(d.d, raw ? 1 : 0, &ok, &report.s), "validating");
        if (ok) {
            int cls = ONEP_CLASS_UNNORMALIZED;
            int overlap = 0;
            onep_drawing_max_overlap(d.d, &overlap);
            if (!raw) check(onep_drawing_class(d.d, &cls), "classifying");
            std::cout << "valid, class="
                      << (raw ? std::string("raw") : std::string(class_names[cls]))
                      << ", crossings=" << onep_drawing_crossing_count(d.d) << "\n";
            mb.add("valid", "1");
            if (!raw) mb.add("class", class_names[cls]);
            mb.add("crossings", std::to_string(onep_drawing_crossing_count(d.d)));
            mb.add("max_overlap", std::to_string(overlap));
        } else {
            std::cout << "invalid:\n" << report.str();
            mb.add("valid", "0");
        }
        mb.flush();
        return kExitOk;
    }

    if (*classify_drawing) {
        DrawingHandle d;
        check(onep_drawing_read_file(drawing_file.c_str(), 0, &d.d), "reading drawing");
        int cls = 0;
        check(onep_drawing_class(d.d, &cls), "classifying");
        int overlap = 0;
        onep_drawing_max_overlap(d.d, &overlap);
        std::cout << "class=" << class_names[cls] << " crossings="
                  << onep_drawing_crossing_count(d.d) << " max_overlap=" << overlap << "\n";
        mb.add("class", class_names[cls]);
        mb.add("crossings", std::to_string(onep_drawing_crossing_count(d.d)));
        mb.flush();
        return kExitOk;
    }

    if (*normalize) {
        DrawingHandle d;
        check(onep_drawing_read_file(drawing_file.c_str(), raw ? 1 : 0, &d.d), "reading drawing");
        int adj_steps = 0, ov_steps = 0;
        DrawingHandle cleaned, result;
        check(onep_drawing_eliminate_adjacent(d.d, &cleaned.d, &adj_steps), "adjacent cleanup");
        check(onep_drawing_normalize(cleaned.d, &result.d, &ov_steps), "normalizing");
        int cls = 0;
        check(onep_drawing_class(result.d, &cls), "classifying result");
        std::cout << "adjacent-crossings-removed=" << adj_steps
                  << " overlap3-removed=" << ov_steps << " class=" << class_names[cls]
                  << " crossings=" << onep_drawing_crossing_count(result.d) << "\n";
        if (!out_file.empty())
            check(onep_drawing_write_file(result.d, out_file.c_str()), "writing result");
        mb.add("adjacent_steps", std::to_string(adj_steps));
        mb.add("overlap3_steps", std::to_string(ov_steps));
        mb.add("class", class_names[cls]);
        mb.flush();
        return kExitOk;
    }

    if (*search) {
        GraphHandle g;
        g.g = load_graph(graph_file, name);
        int outcome = 0;
        std::int64_t min = -1;
        DrawingHandle w;
        check(onep_min_crossings(g.g, &budget, &outcome, &min, &w.d), "search");
        if (outcome == ONEP_SEARCH_FOUND) {
            int cls = 0;
            onep_drawing_class(w.d, &cls);
            std::cout << "min=" << min << ", class=" << class_names[cls] << "\n";
            mb.add("min", std::to_string(min));
            mb.add("class", class_names[cls]);
            if (!out_file.empty())
                check(onep_drawing_write_file(w.d, out_file.c_str()), "writing witness");
            mb.flush();
            return kExitOk;
        }
        if (outcome == ONEP_SEARCH_NO_DRAWING) {
            std::cout << "no 1-planar drawing within the class cap\n";
            mb.add("min", "none");
            mb.flush();
            return kExitOk;
        }
        std::cout << "budget exceeded, inconclusive\n";
        mb.add("min", "inconclusive");
        mb.flush();
        return kExitInconclusive;
    }

    if (*classify_graph) {
        GraphHandle g;
        g.g = load_graph(graph_file, name);
        int outcome = 0, cls = 0;
        DrawingHandle w;
        StringOut partial;
        check(onep_classify_graph(g.g, &budget, &outcome, &cls, &w.d, &partial.s), "classify");
        if (outcome == ONEP_SEARCH_FOUND) {
            std::cout << "class=" << graph_class_names[cls];
            if (w.d) std::cout << " crossings=" << onep_drawing_crossing_count(w.d);
            std::cout << "\n";
            if (w.d && !out_file.empty())
                check(onep_drawing_write_file(w.d, out_file.c_str()), "writing witness");
            mb.add("class", graph_class_names[cls]);
            mb.flush();
            return kExitOk;
        }
        std::cout << "inconclusive: " << partial.str() << "\n";
        mb.add("class", "Inconclusive");
        mb.flush();
        return kExitInconclusive;
    }

    if (*has_drawing) {
        GraphHandle g;
        g.g = load_graph(graph_file, name);
        DrawingHandle w;
        check(onep_has_class_drawing(g.g, parse_class_cap(class_cap_str), exact, &budget, &w.d),
              "searching");
        if (w.d) {
            int cls = 0;
            onep_drawing_class(w.d, &cls);
            std::cout << "found, class=" << class_names[cls]
                      << ", crossings=" << onep_drawing_crossing_count(w.d) << "\n";
            if (!out_file.empty())
                check(onep_drawing_write_file(w.d, out_file.c_str()), "writing witness");
            mb.add("found", "1");
        } else {
            std::cout << "none\n";
            mb.add("found", "0");
        }
        mb.flush();
        return kExitOk;
    }

    if (*classify_join) {
        GraphHandle g, h;
        g.g = load_graph(g_file, g_name);
        h.g = load_graph(h_file, h_name);
        int verdict = 0;
        StringOut rule;
        check(onep_classify_join(g.g, h.g, &verdict, &rule.s), "classifying join");
        std::cout << graph_class_names[verdict] << " (rule: " << rule.str() << ")\n";
        mb.add("verdict", graph_class_names[verdict]);
        mb.add("rule", rule.str());
        mb.flush();
        return kExitOk;
    }

    if (*check_conditions) {
        GraphHandle g;
        g.g = load_graph(g_file, g_name);
        int cand = -1;
        if (!for_class.empty()) {
            int c = parse_class_cap(for_class);
            if (c == ONEP_CLASS_C2) die("--for accepts C0 or C1");
            cand = c == ONEP_CLASS_C0 ? ONEP_GRAPH_C0 : ONEP_GRAPH_C1;
        }
        int verdict = 0;
        StringOut rule;
        check(onep_check_small_factor_conditions(g.g, h_small.c_str(), cand, &verdict, &rule.s),
              "checking conditions");
        std::cout << graph_class_names[verdict] << " (" << rule.str() << ")\n";
        mb.add("verdict", graph_class_names[verdict]);
        mb.add("rule", rule.str());
        mb.flush();
        return kExitOk;
    }

    if (*generate) {
        GraphHandle g;
        DrawingHandle w;
        StringOut claim;
        int rc;
        if (family == "gk")
            rc = onep_gen_cycle_two_chords(param, &g.g, &w.d, &claim.s);
        else if (family == "gk-minus")
            rc = onep_gen_cycle_two_chords_minus(param, &g.g, &w.d, &claim.s);
        else if (family == "ladder")
            rc = onep_gen_ladderlike_c0_p1(param, &g.g, &w.d, &claim.s);
        else if (family == "cycle4l")
            rc = onep_gen_4l_cycle_c1(param, &g.g, &w.d, &claim.s);
        else
            die("unknown family: " + family);
        check(rc, "generating");
        int cls = 0;
        onep_drawing_class(w.d, &cls);
        std::cout << claim.str() << "\n"
                  << "graph: n=" << onep_graph_vertex_count(g.g)
                  << " m=" << onep_graph_edge_count(g.g)
                  << "; witness: class=" << class_names[cls]
                  << " crossings=" << onep_drawing_crossing_count(w.d) << "\n";
        if (!graph_file.empty())
            check(onep_graph_write_file(g.g, graph_file.c_str()), "writing graph");
        if (!out_file.empty())
            check(onep_drawing_write_file(w.d, out_file.c_str()), "writing drawing");
        mb.add("n", std::to_string(onep_graph_vertex_count(g.g)));
        mb.add("m", std::to_string(onep_graph_edge_count(g.g)));
        mb.add("class", class_names[cls]);
        mb.add("crossings", std::to_string(onep_drawing_crossing_count(w.d)));
        mb.flush();
        return kExitOk;
    }

    if (*bounds) {
        std::int64_t c0 = 0, c1 = -1;
        check(onep_bound_c0_max_crossings(n_arg, &c0), "bounds");
        bool have_c1 = n_arg >= 2 && onep_bound_c1_max_crossings(n_arg, &c1) == ONEP_OK;
        std::cout << "C0-drawing max crossings: " << c0 << "\n";
        if (have_c1) std::cout << "C1-drawing max crossings: " << c1 << "\n";
        mb.add("c0_max_crossings", std::to_string(c0));
        if (have_c1) mb.add("c1_max_crossings", std::to_string(c1));
        if (n_arg >= 3) {
            const char* names[] = {"C0", "C1", "C2"};
            for (int cls = 0; cls <= 2; ++cls) {
                std::int64_t num = 0, den = 1;
                check(onep_bound_max_edges(n_arg, cls, &num, &den), "bounds");
                std::cout << names[cls] << " max edges: " << num;
                if (den != 1) std::cout << "/" << den;
                std::cout << "\n";
                mb.add(std::string(names[cls]) + "_max_edges",
                       den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den));
            }
        }
        mb.flush();
        return kExitOk;
    }

    if (*export_dot) {
        StringOut dot;
        if (!drawing_file.empty()) {
            DrawingHandle d;
            check(onep_drawing_read_file(drawing_file.c_str(), 0, &d.d), "reading drawing");
            check(onep_drawing_to_dot(d.d, &dot.s), "rendering");
        } else {
            GraphHandle g;
            g.g = load_graph(graph_file, name);
            check(onep_graph_to_dot(g.g, &dot.s), "rendering");
        }
        if (out_file.empty()) {
            std::cout << dot.str();
        } else {
            std::ofstream f(out_file);
            if (!f) die("cannot write " + out_file);
            f << dot.str();
        }
        return kExitOk;
    }

    return kExitBadInput;
}
