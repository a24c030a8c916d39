#pragma once

#include <string>
#include <vector>

#include "gpos/enumerate.hpp"
#include "gpos/families.hpp"
#include "gpos/position.hpp"
#include "gpos/product_analysis.hpp"
#include "gpos/scan.hpp"
#include "gpos/terminal.hpp"

namespace gpos::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void expect_value(SuiteResult& out, const std::string& name, const InvariantValue& got, int expected) {
    out.checks.push_back({name, got.is_finite() && got.value == expected,
                          "expected " + std::to_string(expected) + ", got " + got.value_string()});
}

inline void expect_terminal_numbers(SuiteResult& out, const std::string& label, const Graph& g,
                                    int tp, int tp_minus) {
    const auto t = terminal_numbers(g);
    expect_value(out, "tp(" + label + ")", t.tp, tp);
    expect_value(out, "tp-(" + label + ")", t.tp_minus, tp_minus);
}

} // namespace detail

inline SuiteResult suite_petersen() {
    SuiteResult out{"petersen", {}};
    const Graph petersen = make_family(FamilySpec::kneser2(5));
    detail::expect_value(out, "gp(petersen)", gp_number(petersen), 6);
    detail::expect_value(out, "gp-(petersen)", lower_gp_number(petersen), 4);
    detail::expect_terminal_numbers(out, "petersen", petersen, 6, 6);
    return out;
}

inline SuiteResult suite_kneser() {
    SuiteResult out{"kneser", {}};
    for (int n = 5; n <= 8; ++n) {
        const int expected = n == 5 ? 6 : n / 2;
        detail::expect_terminal_numbers(out, "kneser2(" + std::to_string(n) + ")",
                                        make_family(FamilySpec::kneser2(n)), expected, expected);
    }
    return out;
}

inline SuiteResult suite_linegraph() {
    SuiteResult out{"linegraph", {}};
    for (int n = 4; n <= 6; ++n) {
        const Graph g = make_family(FamilySpec::line_of_complete(n));
        const auto t = terminal_numbers(g);
        detail::expect_value(out, "tp(linecomplete(" + std::to_string(n) + "))", t.tp,
                             n % 3 == 0 ? n : n - 1);
        if (n <= 5)
            detail::expect_value(out, "tp-(linecomplete(" + std::to_string(n) + "))", t.tp_minus, n - 1);
    }
    return out;
}

inline SuiteResult suite_multipartite() {
    SuiteResult out{"multipartite", {}};
    const std::vector<std::vector<int>> part_lists = {{2, 2}, {3, 2}, {2, 2, 2}, {3, 3, 2}, {4, 3, 2}};
    for (const auto& parts : part_lists) {
        std::string label = "multipartite(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            label += (i ? "," : "") + std::to_string(parts[i]);
        label += ")";
        detail::expect_terminal_numbers(out, label, make_family(FamilySpec::multipartite(parts)),
                                        int(parts.size()), int(parts.size()));
    }
    return out;
}

inline SuiteResult suite_realisation() {
    SuiteResult out{"realisation", {}};
    // three parts sized 4, 3, 2: lower gp 2, terminal numbers 3, gp 4
    const Graph g = make_family(FamilySpec::multipartite({4, 3, 2}));
    detail::expect_value(out, "gp-(multipartite(4,3,2))", lower_gp_number(g), 2);
    detail::expect_terminal_numbers(out, "multipartite(4,3,2)", g, 3, 3);
    detail::expect_value(out, "gp(multipartite(4,3,2))", gp_number(g), 4);
    return out;
}

inline SuiteResult suite_products_clique() {
    SuiteResult out{"products-clique", {}};
    const std::vector<std::pair<std::vector<int>, int>> cases = {
        {{2, 3}, 2}, {{3, 3}, 3}, {{3, 4}, 3}};
    for (const auto& [orders, expected] : cases) {
        const auto r = clique_product_witness(orders);
        std::string label = "gp-(K" + std::to_string(orders[0]) + " x K" + std::to_string(orders[1]) + ")";
        const bool pass = r.expected == expected && r.witness_maximal && r.exact &&
                          r.exact->is_finite() && r.exact->value == expected;
        out.checks.push_back({label, pass,
                              "expected " + std::to_string(expected) + ", exact search " +
                                  (r.exact ? r.exact->value_string() : std::string("skipped"))});
    }
    return out;
}

inline SuiteResult suite_products_odd_wheel() {
    SuiteResult out{"products-odd-wheel", {}};
    const std::vector<std::pair<std::pair<FamilySpec, FamilySpec>, std::string>> cases = {
        {{FamilySpec::cycle(5), FamilySpec::complete(3)}, "gp-(C5 x K3)"},
        {{FamilySpec::cycle(5), FamilySpec::cycle(5)}, "gp-(C5 x C5)"},
        {{FamilySpec::wheel(6), FamilySpec::cycle(5)}, "gp-(W6 x C5)"},
    };
    for (const auto& [specs, label] : cases) {
        const auto p = cartesian_product(make_family(specs.first), make_family(specs.second)).first;
        detail::expect_value(out, label, lower_gp_number(p), 3);
    }
    return out;
}

inline SuiteResult suite_multipartite_product() {
    SuiteResult out{"multipartite-product", {}};
    const auto r = multipartite_product_witness({3, 3, 3}, {3, 3, 3});
    out.checks.push_back({"no maximal gp pair in K333 x K333",
                          r.pair_scan_ran && !r.maximal_pair_found,
                          r.maximal_pair_found ? "found " + r.maximal_pair_found->to_string() : "none found"});
    out.checks.push_back({"diagonal witness maximal of size 3",
                          r.diagonal_maximal && r.diagonal_set.count() == 3,
                          "size " + std::to_string(r.diagonal_set.count())});
    out.checks.push_back({"gp-(K333 x K333) pinned to 3",
                          r.exact.has_value() && *r.exact == 3,
                          "bounds [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]"});
    return out;
}

inline SuiteResult suite_universal_line() {
    SuiteResult out{"universal-line", {}};
    int pairs = 0, mismatches = 0;
    const auto factors = connected_graphs_upto(4);
    for (const auto& g : factors) {
        if (g.order() < 2) continue;
        for (const auto& h : factors) {
            if (h.order() < 2) continue;
            ++pairs;
            if (!universal_line_product_criterion(g, h).agree) ++mismatches;
        }
    }
    out.checks.push_back({"universal-line criterion matches detection (factor orders 2..4)",
                          mismatches == 0,
                          std::to_string(pairs) + " ordered pairs, " + std::to_string(mismatches) + " mismatches"});
    return out;
}

inline SuiteResult suite_layer_lemma() {
    SuiteResult out{"layer-lemma", {}};
    int triples = 0, mismatches = 0;
    const auto factors = connected_graphs_upto(4);
    for (const auto& g : factors) {
        if (g.order() < 2) continue;
        const auto dm = all_pairs_distances(g);
        std::vector<VertexSet> maximal_sets;
        for_each_maximal_gp_set(dm, {}, [&](const VertexSet& s) {
            maximal_sets.push_back(s);
            return true;
        });
        for (const auto& h : factors) {
            if (h.order() < 2) continue;
            for (const auto& s : maximal_sets) {
                ++triples;
                if (!layer_embed_check(g, h, s, 0).agree) ++mismatches;
            }
        }
    }
    out.checks.push_back({"layer maximality equals terminal property (factor orders 2..4)",
                          mismatches == 0,
                          std::to_string(triples) + " embeddings, " + std::to_string(mismatches) + " mismatches"});
    return out;
}

inline SuiteResult suite_constructions() {
    SuiteResult out{"constructions", {}};
    int d2 = 0, d3 = 0, chordal = 0, cograph = 0, failures = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : connected_graphs_exactly(n)) {
            const auto dm = all_pairs_distances(g);
            const int d = diameter(g, dm);
            try {
                if (d <= 2) {
                    ++d2;
                    if (!is_terminal_set(dm, construct_diam2(g).set)) ++failures;
                }
                if (d == 3) {
                    ++d3;
                    if (!is_terminal_set(dm, construct_diam3(g).set)) ++failures;
                }
                if (is_chordal(g)) {
                    ++chordal;
                    if (!is_terminal_set(dm, construct_structured(g))) ++failures;
                }
                if (is_cograph(g)) {
                    ++cograph;
                    if (!is_terminal_set(dm, construct_structured(g))) ++failures;
                }
            } catch (const contract_violation&) {
                ++failures;
            }
        }
    }
    out.checks.push_back({"greedy and structured constructions verified (orders 1..7)",
                          failures == 0,
                          std::to_string(d2) + " diameter-2, " + std::to_string(d3) + " diameter-3, " +
                              std::to_string(chordal) + " chordal, " + std::to_string(cograph) +
                              " cograph runs, " + std::to_string(failures) + " failures"});
    return out;
}

inline SuiteResult suite_scans() {
    SuiteResult out{"scans", {}};
    const auto pairs = scan_pairs_conjecture(4);
    out.checks.push_back({"product lower-bound scan, factor orders up to 4",
                          pairs.violations == 0 && pairs.inconclusive == 0,
                          std::to_string(pairs.records.size()) + " pairs, " +
                              std::to_string(pairs.violations) + " violations"});
    const auto existence = scan_terminal_existence(7);
    out.checks.push_back({"terminal existence scan, orders up to 7",
                          existence.counterexamples == 0 && existence.inconclusive == 0,
                          std::to_string(existence.records.size()) + " graphs, " +
                              std::to_string(existence.counterexamples) + " counterexamples"});
    return out;
}

inline SuiteResult suite_diam2_independence() {
    SuiteResult out{"diam2-independence", {}};
    int sets = 0, independent = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            const auto dm = all_pairs_distances(g);
            if (diameter(g, dm) != 2) continue;
            for_each_maximal_gp_set(dm, {}, [&](const VertexSet& s) {
                if (!is_terminal_set(dm, s)) return true;
                ++sets;
                bool has_edge = false;
                s.for_each([&](int u) {
                    if (g.neighbours(u).intersects(s)) has_edge = true;
                });
                if (!has_edge) ++independent;
                return true;
            });
        }
    out.checks.push_back({"terminal sets of diameter-2 graphs contain an edge (orders 2..6)",
                          independent == 0,
                          std::to_string(sets) + " terminal sets, " + std::to_string(independent) +
                              " independent ones"});
    return out;
}

inline std::vector<std::string> suite_names() {
    return {"petersen", "kneser", "linegraph", "multipartite", "realisation",
            "products-clique", "products-odd-wheel", "multipartite-product",
            "universal-line", "layer-lemma", "constructions", "scans",
            "diam2-independence"};
}

inline SuiteResult run_suite(const std::string& name) {
    if (name == "petersen") return suite_petersen();
    if (name == "kneser") return suite_kneser();
    if (name == "linegraph") return suite_linegraph();
    if (name == "multipartite") return suite_multipartite();
    if (name == "realisation") return suite_realisation();
    if (name == "products-clique") return suite_products_clique();
    if (name == "products-odd-wheel") return suite_products_odd_wheel();
    if (name == "multipartite-product") return suite_multipartite_product();
    if (name == "universal-line") return suite_universal_line();
    if (name == "layer-lemma") return suite_layer_lemma();
    if (name == "constructions") return suite_constructions();
    if (name == "scans") return suite_scans();
    if (name == "diam2-independence") return suite_diam2_independence();
    throw parameter_error("unknown suite: " + name);
}

} // namespace gpos::suites
