// gpverify: exact general position / terminal position computations on
// graphs and their Cartesian products.
//
// Exit codes: 0 all checks pass, 1 a violation or counterexample was found,
// 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpos/enumerate.hpp"
#include "gpos/families.hpp"
#include "gpos/graph6.hpp"
#include "gpos/position.hpp"
#include "gpos/product_analysis.hpp"
#include "gpos/report.hpp"
#include "gpos/scan.hpp"
#include "gpos/suites.hpp"
#include "gpos/terminal.hpp"

using namespace gpos;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string format = "jsonl";
    bool no_timing = false;
    int jobs = 1;
    std::optional<int> max_subset_size;
    std::optional<long long> time_budget_ms;

    SearchLimits limits() const {
        SearchLimits l;
        if (max_subset_size) l.max_cardinality = *max_subset_size;
        if (time_budget_ms) l.time_budget = std::chrono::milliseconds(*time_budget_ms);
        return l;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_flag("--no-timing", opts.no_timing, "suppress elapsed-time fields");
    cmd->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--max-subset-size", opts.max_subset_size,
                    "cardinality cap for subset searches (hitting it reports INCONCLUSIVE)");
    cmd->add_option("--time-budget-ms", opts.time_budget_ms,
                    "per-invariant time budget (hitting it reports INCONCLUSIVE)");
}

struct GraphInput {
    std::string family;
    std::string edges_file;
    std::string graph6_file;
    std::optional<int> enumerate_order;
};

void add_input(CLI::App* cmd, GraphInput& in) {
    auto* f = cmd->add_option("--family", in.family, "family spec, e.g. cycle(5), petersen, multipartite(3,2,2)");
    auto* e = cmd->add_option("--edges", in.edges_file, "edge-list file: first line \"n m\", then \"u v\" lines");
    auto* g = cmd->add_option("--graph6", in.graph6_file, "graph6 file, one graph per line");
    auto* n = cmd->add_option("--enumerate", in.enumerate_order, "all connected graphs of this order (<= 7)");
    f->excludes(e)->excludes(g)->excludes(n);
    e->excludes(g)->excludes(n);
    g->excludes(n);
}

std::vector<std::pair<std::string, Graph>> load_graphs(const GraphInput& in) {
    std::vector<std::pair<std::string, Graph>> out;
    if (!in.family.empty()) {
        out.emplace_back(in.family, make_family(parse_family_spec(in.family)));
    } else if (!in.edges_file.empty()) {
        std::ifstream f(in.edges_file);
        if (!f) throw parse_error("cannot open " + in.edges_file);
        out.emplace_back(in.edges_file, read_edge_list(f));
    } else if (!in.graph6_file.empty()) {
        std::ifstream f(in.graph6_file);
        if (!f) throw parse_error("cannot open " + in.graph6_file);
        std::string line;
        while (std::getline(f, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            out.emplace_back(line, parse_graph6(line));
        }
    } else if (in.enumerate_order) {
        for (const auto& g : connected_graphs_exactly(*in.enumerate_order))
            out.emplace_back(encode_graph6(g), g);
    } else {
        throw parameter_error("no graph input given (use --family, --edges, --graph6 or --enumerate)");
    }
    return out;
}

/// One factor for product commands: a family spec or "g6:<line>".
Graph parse_factor(const std::string& text) {
    if (text.rfind("g6:", 0) == 0) return parse_graph6(text.substr(3));
    return make_family(parse_family_spec(text));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

ordered_json value_json(const InvariantValue& v) {
    switch (v.kind) {
    case InvariantValue::Kind::finite: return v.value;
    case InvariantValue::Kind::infinite: return "INFINITE";
    case InvariantValue::Kind::inconclusive: return "INCONCLUSIVE";
    }
    return nullptr;
}

// ---------------------------------------------------------------- invariants

int run_invariants(const GraphInput& input, const std::vector<std::string>& which,
                   const CommonOpts& opts) {
    // graph6 corpora are loaded line by line so one bad line cannot take
    // down a whole scan; every failure is reported and processing continues
    std::vector<std::pair<std::string, Graph>> graphs;
    int parse_failures = 0;
    if (!input.graph6_file.empty()) {
        std::ifstream f(input.graph6_file);
        if (!f) throw parse_error("cannot open " + input.graph6_file);
        std::string line;
        int lineno = 0;
        while (std::getline(f, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            try {
                graphs.emplace_back(line, parse_graph6(line));
            } catch (const parse_error& e) {
                std::cerr << input.graph6_file << ":" << lineno << ": " << e.what() << "\n";
                ++parse_failures;
            }
        }
    } else {
        graphs = load_graphs(input);
    }
    for (const auto& w : which)
        if (w != "gp" && w != "gp-" && w != "tp" && w != "tp-" && w != "geodetic")
            throw parameter_error("unknown invariant: " + w + " (use gp, gp-, tp, tp-, geodetic)");

    struct Task {
        std::size_t graph;
        std::string invariant;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (const auto& w : which) tasks.push_back({i, w});

    std::vector<ReportRecord> records(tasks.size());
    const auto limits = opts.limits();
    detail::parallel_indexed(tasks.size(), opts.jobs, [&](std::size_t t) {
        const auto& [gi, inv] = tasks[t];
        const Graph& g = graphs[gi].second;
        const auto start = std::chrono::steady_clock::now();
        InvariantValue v;
        if (inv == "gp") v = gp_number(g, limits);
        else if (inv == "gp-") v = lower_gp_number(g, limits);
        else if (inv == "tp") v = terminal_numbers(g, limits).tp;
        else if (inv == "tp-") v = terminal_numbers(g, limits).tp_minus;
        else v = geodetic_number(g, limits);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        records[t] = {graphs[gi].first, inv, v, elapsed};
    });

    if (opts.format == "csv") std::cout << ReportRecord::csv_header(!opts.no_timing) << "\n";
    for (const auto& r : records) {
        if (opts.format == "csv") std::cout << r.to_csv(!opts.no_timing) << "\n";
        else std::cout << r.to_json(!opts.no_timing).dump() << "\n";
    }
    return parse_failures > 0 ? 2 : 0;
}

// ----------------------------------------------------------------- construct

int run_construct(const std::string& algorithm, const GraphInput& input) {
    const auto graphs = load_graphs(input);
    int exit_code = 0;
    for (const auto& [id, g] : graphs) {
        std::cout << "graph: " << id << "\n";
        VertexSet set(g.order());
        if (algorithm == "diam2") {
            const auto r = construct_diam2(g);
            std::cout << r.trace.to_string();
            set = r.set;
        } else if (algorithm == "diam3") {
            const auto r = construct_diam3(g);
            std::cout << r.trace.to_string();
            set = r.set;
        } else {
            set = construct_structured(g);
        }
        const auto check = check_terminal_set(all_pairs_distances(g), set);
        std::cout << "set = " << set.to_string() << "\n";
        std::cout << "verified: " << check.to_string() << "\n";
        if (!check.ok()) exit_code = 1;
    }
    return exit_code;
}

// ------------------------------------------------------------------- product

int run_product_layer_check(const std::string& left, const std::string& right,
                            const std::string& set_text, int anchor) {
    const Graph g = parse_factor(left), h = parse_factor(right);
    const auto r = layer_embed_check(g, h, VertexSet::of(g.order(), parse_int_list(set_text)), anchor);
    std::cout << "set " << r.embedding.source.to_string() << " at anchor " << r.embedding.anchor << "\n";
    std::cout << "terminal in factor:  "
              << (r.terminal_in_factor ? std::string("yes") : "no (" + r.factor_detail.to_string() + ")")
              << "\n";
    std::cout << "maximal in product:  "
              << (r.maximal_in_product
                      ? std::string("yes")
                      : "no (extendable by " + r.index.coord_string(*r.product_extender) + ")")
              << "\n";
    std::cout << "image: " << r.index.set_string(r.embedding.image) << "\n";
    std::cout << (r.agree ? "equivalence holds" : "EQUIVALENCE VIOLATED") << "\n";
    return r.agree ? 0 : 1;
}

int run_product_universal_line(const std::string& left, const std::string& right) {
    const auto r = universal_line_product_criterion(parse_factor(left), parse_factor(right));
    std::cout << "adjacent maximal pair in a factor: " << (r.condition_adjacent_pair ? "yes" : "no") << "\n";
    std::cout << "geodetic numbers: " << r.geodetic_left << ", " << r.geodetic_right
              << (r.condition_geodetic ? " (both two)" : "") << "\n";
    std::cout << "predicted universal line: " << (r.predicted ? "yes" : "no") << "\n";
    std::cout << "observed universal line:  " << (r.observed ? "yes" : "no") << "\n";
    std::cout << (r.agree ? "criterion agrees with detection" : "CRITERION VIOLATED") << "\n";
    return r.agree ? 0 : 1;
}

int run_product_clique(const std::string& orders_text) {
    const auto r = clique_product_witness(parse_int_list(orders_text));
    std::cout << "expected lower gp number: " << r.expected << "\n";
    std::cout << "witness layer: " << r.witness.to_string()
              << " (maximal: " << (r.witness_maximal ? "yes" : "no") << ")\n";
    if (r.exact) {
        std::cout << "exact search: " << r.exact->value_string() << "\n";
        if (!(r.exact->is_finite() && r.exact->value == r.expected)) {
            std::cout << "VALUE MISMATCH\n";
            return 1;
        }
    }
    return 0;
}

int run_product_multipartite(const std::string& left_parts, const std::string& right_parts) {
    const auto r = multipartite_product_witness(parse_int_list(left_parts), parse_int_list(right_parts));
    std::cout << "bounds: [" << r.lower << ", " << r.upper << "]\n";
    if (r.exact) std::cout << "exact value: " << *r.exact << "\n";
    std::cout << "diagonal witness " << r.index.set_string(r.diagonal_set)
              << " maximal: " << (r.diagonal_maximal ? "yes" : "no") << "\n";
    if (r.six_pair_set)
        std::cout << "three-pairs-plus-column witness " << r.index.set_string(*r.six_pair_set)
                  << " maximal: " << (r.six_pair_maximal ? "yes" : "no") << "\n";
    if (r.pair_scan_ran)
        std::cout << "maximal pair scan: "
                  << (r.maximal_pair_found ? "found " + r.index.set_string(*r.maximal_pair_found)
                                           : std::string("none found"))
                  << "\n";
    if (r.exact_search) std::cout << "exact search: " << r.exact_search->value_string() << "\n";
    bool ok = true;
    if (r.exact && r.exact_search && r.exact_search->is_finite() && r.exact_search->value != *r.exact)
        ok = false;
    if (r.exact_search && r.exact_search->is_finite() &&
        (r.exact_search->value < r.lower || r.exact_search->value > r.upper))
        ok = false;
    if (!ok) std::cout << "BOUNDS VIOLATED\n";
    return ok ? 0 : 1;
}

int run_product_orthogonal(const std::string& graph_text, int layers, const std::string& sets_text) {
    const Graph g = parse_factor(graph_text);
    std::vector<VertexSet> sets;
    std::stringstream ss(sets_text);
    std::string item;
    while (std::getline(ss, item, ';')) sets.push_back(VertexSet::of(g.order(), parse_int_list(item)));
    const auto r = orthogonal_layers(g, layers, sets);
    std::cout << "union of layer images in general position: " << (r.union_gp ? "yes" : "no") << "\n";
    if (r.union_witness) std::cout << "  collinear triple " << r.union_witness->to_string() << "\n";
    std::cout << "sets pairwise orthogonal: " << (r.sets_orthogonal ? "yes" : "no") << "\n";
    if (r.violating_pair)
        std::cout << "  sets " << r.violating_pair->first << " and " << r.violating_pair->second << ": "
                  << r.pair_witness->to_string() << "\n";
    std::cout << (r.agree ? "correspondence holds" : "CORRESPONDENCE VIOLATED") << "\n";
    return r.agree ? 0 : 1;
}

// ---------------------------------------------------------------------- scan

int run_scan_pairs(int max_order, const std::string& graph6_file, const CommonOpts& opts) {
    ScanOptions so{opts.jobs, opts.limits()};
    PairScanResult r;
    if (!graph6_file.empty()) {
        std::ifstream f(graph6_file);
        if (!f) throw parse_error("cannot open " + graph6_file);
        r = scan_pairs_conjecture_over(read_graph6_stream(f), so);
    } else {
        r = scan_pairs_conjecture(max_order, so);
    }
    if (opts.format == "csv") std::cout << "left,right,gp_lower_left,gp_lower_right,gp_lower_product,ok\n";
    for (const auto& rec : r.records) {
        const bool ok = !rec.violation();
        if (opts.format == "csv") {
            std::cout << rec.left_id << "," << rec.right_id << "," << rec.left_lower.value_string()
                      << "," << rec.right_lower.value_string() << ","
                      << rec.product_lower.value_string() << "," << (ok ? "true" : "false") << "\n";
        } else {
            ordered_json j;
            j["left"] = rec.left_id;
            j["right"] = rec.right_id;
            j["gp_lower_left"] = value_json(rec.left_lower);
            j["gp_lower_right"] = value_json(rec.right_lower);
            j["gp_lower_product"] = value_json(rec.product_lower);
            j["ok"] = ok;
            std::cout << j.dump() << "\n";
        }
    }
    std::cerr << r.records.size() << " pairs, " << r.violations << " violations, " << r.inconclusive
              << " inconclusive\n";
    return r.violations > 0 ? 1 : 0;
}

int run_scan_existence(int max_order, const std::string& graph6_file, const CommonOpts& opts) {
    ScanOptions so{opts.jobs, opts.limits()};
    ExistenceScanResult r;
    if (!graph6_file.empty()) {
        std::ifstream f(graph6_file);
        if (!f) throw parse_error("cannot open " + graph6_file);
        r = scan_terminal_existence_over(read_graph6_stream(f), so);
    } else {
        r = scan_terminal_existence(max_order, so);
    }
    if (opts.format == "csv") std::cout << "graph,first_terminal,ok\n";
    for (const auto& rec : r.records) {
        if (opts.format == "csv") {
            std::cout << rec.graph_id << "," << rec.first_terminal.value_string() << ","
                      << (rec.counterexample ? "false" : "true") << "\n";
        } else {
            ordered_json j;
            j["graph"] = rec.graph_id;
            j["first_terminal"] = value_json(rec.first_terminal);
            if (rec.first_terminal.is_finite()) j["witness"] = rec.first_terminal.witness.to_vector();
            j["ok"] = !rec.counterexample;
            if (rec.counterexample) {
                j["has_simplicial_vertex"] = rec.has_simplicial_vertex;
                j["has_clique_cutset"] = rec.has_clique_cutset;
                j["has_twins"] = rec.has_twins;
            }
            std::cout << j.dump() << "\n";
        }
    }
    std::cerr << r.records.size() << " graphs, " << r.counterexamples << " counterexamples, "
              << r.inconclusive << " inconclusive\n";
    return r.counterexamples > 0 ? 1 : 0;
}

// --------------------------------------------------------------------- suite

int run_suites(const std::string& name, const std::string& format) {
    std::vector<std::string> names;
    if (name == "all") names = suites::suite_names();
    else names.push_back(name);
    int checks = 0, failures = 0;
    for (const auto& n : names) {
        const auto result = suites::run_suite(n);
        for (const auto& c : result.checks) {
            ++checks;
            if (!c.pass) ++failures;
            if (format == "jsonl") {
                ordered_json j;
                j["suite"] = result.name;
                j["check"] = c.name;
                j["pass"] = c.pass;
                j["detail"] = c.detail;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (c.pass ? "PASS" : "FAIL") << " [" << result.name << "] " << c.name
                          << " -- " << c.detail << "\n";
            }
        }
    }
    if (format == "jsonl") {
        ordered_json j;
        j["checks"] = checks;
        j["failures"] = failures;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << checks << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact general position and terminal position computations"};
    app.require_subcommand(1);

    auto* inv_cmd = app.add_subcommand("invariants", "compute invariants of input graphs");
    GraphInput inv_input;
    CommonOpts inv_opts;
    std::string which_text = "gp,gp-,tp,tp-";
    add_input(inv_cmd, inv_input);
    add_common(inv_cmd, inv_opts);
    inv_cmd->add_option("--which", which_text, "comma list from gp, gp-, tp, tp-, geodetic");

    auto* con_cmd = app.add_subcommand("construct", "run a terminal-set construction, printing its trace");
    GraphInput con_input;
    std::string algorithm;
    con_cmd->add_option("algorithm", algorithm, "diam2 | diam3 | structured")
        ->required()
        ->check(CLI::IsMember({"diam2", "diam3", "structured"}));
    add_input(con_cmd, con_input);

    auto* prod_cmd = app.add_subcommand("product", "Cartesian-product checks");
    prod_cmd->require_subcommand(1);
    std::string p_left, p_right, p_set, p_orders, p_lparts, p_rparts, p_graph, p_sets;
    int p_anchor = 0, p_layers = 2;

    auto* layer_cmd = prod_cmd->add_subcommand("layer-check", "terminal property vs layer maximality");
    layer_cmd->add_option("--left", p_left, "factor carrying the set")->required();
    layer_cmd->add_option("--right", p_right, "other factor")->required();
    layer_cmd->add_option("--set", p_set, "comma list of vertices of the left factor")->required();
    layer_cmd->add_option("--anchor", p_anchor, "anchor vertex in the right factor");

    auto* uline_cmd = prod_cmd->add_subcommand("universal-line", "universal-line criterion vs detection");
    uline_cmd->add_option("--left", p_left)->required();
    uline_cmd->add_option("--right", p_right)->required();

    auto* clique_cmd = prod_cmd->add_subcommand("clique", "products of complete graphs");
    clique_cmd->add_option("--orders", p_orders, "comma list of clique orders")->required();

    auto* multi_cmd = prod_cmd->add_subcommand("multipartite", "products of complete multipartite graphs");
    multi_cmd->add_option("--left-parts", p_lparts, "part sizes of the left factor")->required();
    multi_cmd->add_option("--right-parts", p_rparts, "part sizes of the right factor")->required();

    auto* orth_cmd = prod_cmd->add_subcommand("orthogonal", "orthogonal sets vs layers of G x K_r");
    orth_cmd->add_option("--graph", p_graph, "the factor G")->required();
    orth_cmd->add_option("--r", p_layers, "number of layers");
    orth_cmd->add_option("--sets", p_sets, "semicolon-separated vertex lists, e.g. \"0,3;1,5\"")->required();

    auto* scan_cmd = app.add_subcommand("scan", "conjecture scans over graph corpora");
    scan_cmd->require_subcommand(1);
    int s_max_order = 4;
    std::string s_graph6;
    CommonOpts scan_opts;
    auto* pairs_cmd =
        scan_cmd->add_subcommand("conjecture-product", "product lower-bound conjecture over factor pairs");
    pairs_cmd->add_option("--max-order", s_max_order, "enumerate factors up to this order (<= 5)");
    pairs_cmd->add_option("--graph6", s_graph6, "factor corpus file instead of enumeration");
    add_common(pairs_cmd, scan_opts);
    auto* exist_cmd =
        scan_cmd->add_subcommand("terminal-existence", "every connected graph has a terminal set");
    exist_cmd->add_option("--max-order", s_max_order, "enumerate graphs up to this order (<= 7)");
    exist_cmd->add_option("--graph6", s_graph6, "graph corpus file instead of enumeration");
    add_common(exist_cmd, scan_opts);

    auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    std::string suite_format = "text";
    suite_cmd->add_option("name", suite_name, "suite name or \"all\"")->required();
    suite_cmd->add_option("--format", suite_format, "output format: text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv_cmd->parsed()) {
            std::vector<std::string> which;
            std::stringstream ss(which_text);
            std::string item;
            while (std::getline(ss, item, ',')) which.push_back(item);
            return run_invariants(inv_input, which, inv_opts);
        }
        if (con_cmd->parsed()) return run_construct(algorithm, con_input);
        if (prod_cmd->parsed()) {
            if (layer_cmd->parsed()) return run_product_layer_check(p_left, p_right, p_set, p_anchor);
            if (uline_cmd->parsed()) return run_product_universal_line(p_left, p_right);
            if (clique_cmd->parsed()) return run_product_clique(p_orders);
            if (multi_cmd->parsed()) return run_product_multipartite(p_lparts, p_rparts);
            if (orth_cmd->parsed()) return run_product_orthogonal(p_graph, p_layers, p_sets);
        }
        if (scan_cmd->parsed()) {
            if (pairs_cmd->parsed()) return run_scan_pairs(s_max_order, s_graph6, scan_opts);
            if (exist_cmd->parsed()) return run_scan_existence(s_max_order, s_graph6, scan_opts);
        }
        if (suite_cmd->parsed()) return run_suites(suite_name, suite_format);
    } catch (const contract_violation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_class_error& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
