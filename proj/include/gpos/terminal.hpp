#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpos/cliques.hpp"
#include "gpos/core.hpp"
#include "gpos/distance.hpp"
#include "gpos/graph.hpp"
#include "gpos/position.hpp"
#include "gpos/search.hpp"
#include "gpos/structure.hpp"

namespace gpos {

/// Certificate that u is terminal with respect to S: a shortest path with u
/// as an endpoint through y to x, both in S, i.e. d(u,x) = d(u,y) + d(y,x).
struct BadPathWitness {
    int endpoint = -1;
    int via = -1;    // y
    int target = -1; // x

    std::string to_string() const {
        return std::to_string(endpoint) + " -> " + std::to_string(via) + " -> " + std::to_string(target);
    }
};

/// First (x ascending, then y) bad path for u, or nullopt.
inline std::optional<BadPathWitness> find_bad_path(const DistanceMatrix& dm, const VertexSet& s, int u) {
    if (s.test(u)) throw parameter_error("find_bad_path: vertex " + std::to_string(u) + " lies in the set");
    const auto members = s.to_vector();
    for (int x : members)
        for (int y : members) {
            if (x == y) continue;
            if (!dm.reachable(u, x) || !dm.reachable(u, y) || !dm.reachable(y, x)) continue;
            if (dm.raw(u, x) == dm.raw(u, y) + dm.raw(y, x)) return BadPathWitness{u, y, x};
        }
    return std::nullopt;
}

inline bool is_terminal_vertex(const DistanceMatrix& dm, const VertexSet& s, int u) {
    return find_bad_path(dm, s, u).has_value();
}

/// Outcome of the terminal-set test with the reason a set fails.
struct TerminalCheck {
    enum class Result { yes, not_gp, not_maximal, vertex_not_terminal };

    Result result = Result::yes;
    CollinearWitness collinear;  // not_gp
    int extender = -1;           // not_maximal
    int vertex = -1;             // vertex_not_terminal

    bool ok() const { return result == Result::yes; }

    std::string to_string() const {
        switch (result) {
        case Result::yes: return "terminal";
        case Result::not_gp: return "not in general position, witness " + collinear.to_string();
        case Result::not_maximal: return "not maximal, extendable by " + std::to_string(extender);
        case Result::vertex_not_terminal: return "vertex " + std::to_string(vertex) + " is not terminal";
        }
        return "?";
    }
};

/// S is terminal iff it is a maximal general position set and every outside
/// vertex is the endpoint of a shortest path through two members of S.
inline TerminalCheck check_terminal_set(const DistanceMatrix& dm, const VertexSet& s) {
    TerminalCheck out;
    if (auto w = find_collinear_triple(dm, s)) {
        out.result = TerminalCheck::Result::not_gp;
        out.collinear = *w;
        return out;
    }
    if (auto ext = find_gp_extension(dm, s)) {
        out.result = TerminalCheck::Result::not_maximal;
        out.extender = *ext;
        return out;
    }
    for (int u = 0; u < dm.order(); ++u) {
        if (s.test(u)) continue;
        if (!is_terminal_vertex(dm, s, u)) {
            out.result = TerminalCheck::Result::vertex_not_terminal;
            out.vertex = u;
            return out;
        }
    }
    return out;
}

inline bool is_terminal_set(const DistanceMatrix& dm, const VertexSet& s) {
    return check_terminal_set(dm, s).ok();
}

/// Largest and smallest terminal sets, by enumerating maximal general
/// position sets and filtering on the terminal property. Both values are
/// INFINITE when no terminal set exists.
struct TerminalNumbers {
    InvariantValue tp;
    InvariantValue tp_minus;
};

inline TerminalNumbers terminal_numbers(const Graph& g, const SearchLimits& limits = {}) {
    const auto dm = all_pairs_distances(g);
    int best_max = -1, best_min = -1;
    VertexSet set_max, set_min;
    const auto status = for_each_maximal_gp_set(dm, limits, [&](const VertexSet& s) {
        bool terminal = true;
        for (int u = 0; u < dm.order() && terminal; ++u)
            if (!s.test(u) && !is_terminal_vertex(dm, s, u)) terminal = false;
        if (terminal) {
            const int k = s.count();
            if (k > best_max) {
                best_max = k;
                set_max = s;
            }
            if (best_min < 0 || k < best_min) {
                best_min = k;
                set_min = s;
            }
        }
        return true;
    });
    if (status == SearchStatus::capped) {
        const auto capped = InvariantValue::inconclusive("node budget / time budget");
        return {capped, capped};
    }
    if (best_max < 0) return {InvariantValue::infinite(), InvariantValue::infinite()};
    return {InvariantValue::finite(best_max, set_max), InvariantValue::finite(best_min, set_min)};
}

/// First terminal set the maximal-gp enumeration meets, for existence scans.
inline InvariantValue first_terminal_set(const Graph& g, const SearchLimits& limits = {}) {
    const auto dm = all_pairs_distances(g);
    std::optional<VertexSet> found;
    const auto status = for_each_maximal_gp_set(dm, limits, [&](const VertexSet& s) {
        bool terminal = true;
        for (int u = 0; u < dm.order() && terminal; ++u)
            if (!s.test(u) && !is_terminal_vertex(dm, s, u)) terminal = false;
        if (terminal) {
            found = s;
            return false;
        }
        return true;
    });
    if (found) return InvariantValue::finite(found->count(), *found);
    if (status == SearchStatus::capped) return InvariantValue::inconclusive("node budget / time budget");
    return InvariantValue::infinite();
}

/// One stage of a greedy terminal-set construction. Diameter-3 stages also
/// record the candidate pool T and the chosen clique before and after the
/// distance refinement.
struct ConstructionStage {
    VertexSet clique;
    std::optional<VertexSet> t_set;
    std::optional<VertexSet> r_pre;
    std::optional<VertexSet> r_post;
};

struct ConstructionTrace {
    std::vector<ConstructionStage> stages;

    /// One line per stage: "W_i = {...} | T = {...} | R_pre = {...} | R_post = {...}".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < stages.size(); ++i) {
            const auto& st = stages[i];
            out += "W_" + std::to_string(i + 1) + " = " + st.clique.to_string();
            if (st.t_set) out += " | T = " + st.t_set->to_string();
            if (st.r_pre) out += " | R_pre = " + st.r_pre->to_string();
            if (st.r_post) out += " | R_post = " + st.r_post->to_string();
            out += "\n";
        }
        return out;
    }
};

struct Construction {
    VertexSet set;
    ConstructionTrace trace;
};

namespace detail {

/// Maximum clique of the subgraph induced by `allowed`, returned in the
/// ambient labelling; ties broken colexicographically on ambient ids.
inline VertexSet maximum_clique_within(const Graph& g, const VertexSet& allowed) {
    VertexSet best(g.order());
    if (allowed.empty()) return best;
    const auto sub = induced_subgraph(g, allowed);
    for (const auto& c : maximal_cliques(sub.graph)) {
        VertexSet mapped(g.order());
        c.for_each([&](int v) { mapped.set(sub.old_of_new[v]); });
        if (mapped.count() > best.count() ||
            (mapped.count() == best.count() && mapped.colex_less(best)))
            best = mapped;
    }
    return best;
}

inline void verify_terminal_or_throw(const DistanceMatrix& dm, const VertexSet& s, const char* who) {
    const auto check = check_terminal_set(dm, s);
    if (!check.ok())
        throw contract_violation(std::string(who) + ": produced set " + s.to_string() + " is not terminal: " + check.to_string());
}

} // namespace detail

/// Greedy terminal set for diameter <= 2: W_1 a maximum clique, then each
/// W_i the largest clique with no edges to the accumulated set.
inline Construction construct_diam2(const Graph& g) {
    if (!is_connected(g)) throw parameter_error("construct_diam2: graph must be connected");
    const auto dm = all_pairs_distances(g);
    if (diameter(g, dm) > 2) throw parameter_error("construct_diam2: diameter exceeds two");
    Construction out;
    VertexSet acc(g.order());
    while (true) {
        VertexSet eligible(g.order());
        for (int v = 0; v < g.order(); ++v)
            if (!acc.test(v) && !g.neighbours(v).intersects(acc)) eligible.set(v);
        if (eligible.empty()) break;
        const VertexSet w = detail::maximum_clique_within(g, eligible);
        out.trace.stages.push_back({w, std::nullopt, std::nullopt, std::nullopt});
        acc |= w;
    }
    detail::verify_terminal_or_throw(dm, acc, "construct_diam2");
    out.set = acc;
    return out;
}

/// Staged terminal set for diameter <= 3. Stage j collects the vertices
/// equidistant from every earlier clique and non-adjacent to the accumulated
/// set, picks a maximum clique R among them, and drops the distance-3
/// vertices of R whenever R mixes distances two and three to some earlier
/// clique.
inline Construction construct_diam3(const Graph& g) {
    if (!is_connected(g)) throw parameter_error("construct_diam3: graph must be connected");
    const auto dm = all_pairs_distances(g);
    if (diameter(g, dm) > 3) throw parameter_error("construct_diam3: diameter exceeds three");
    Construction out;
    std::vector<VertexSet> cliques;

    const VertexSet w1 = maximum_clique(g);
    cliques.push_back(w1);
    out.trace.stages.push_back({w1, std::nullopt, std::nullopt, std::nullopt});
    VertexSet acc = w1;

    while (true) {
        VertexSet t(g.order());
        for (int v = 0; v < g.order(); ++v) {
            if (acc.test(v) || g.neighbours(v).intersects(acc)) continue;
            bool equidistant = true;
            for (const auto& w : cliques) {
                int d = -2;
                w.for_each([&](int x) {
                    const int dx = dm.raw(v, x);
                    if (d == -2) d = dx;
                    else if (dx != d) equidistant = false;
                });
                if (!equidistant) break;
            }
            if (equidistant) t.set(v);
        }
        if (t.empty()) break;

        VertexSet r = detail::maximum_clique_within(g, t);
        const VertexSet r_pre = r;
        for (const auto& w : cliques) {
            const int anchor = w.first();
            bool has2 = false, has3 = false;
            r.for_each([&](int v) {
                const int d = dm.raw(v, anchor); // members of T are equidistant from w
                if (d == 2) has2 = true;
                else if (d == 3) has3 = true;
            });
            if (has2 && has3) {
                VertexSet keep(g.order());
                r.for_each([&](int v) {
                    if (dm.raw(v, anchor) == 2) keep.set(v);
                });
                r = keep;
            }
        }
        if (r.empty())
            throw contract_violation("construct_diam3: refinement emptied the stage clique");
        out.trace.stages.push_back({r, t, r_pre, r});
        cliques.push_back(r);
        acc |= r;
    }
    detail::verify_terminal_or_throw(dm, acc, "construct_diam3");
    out.set = acc;
    return out;
}

enum class ExtendKind { simplicial, twin };

/// Rebuilds a terminal set of g from a terminal set s of g - removed.
/// s is given in g's labelling (without `removed`). For kind simplicial the
/// removed vertex must be simplicial in g; for kind twin it must have a twin
/// in g. The result is verified terminal in g.
inline VertexSet extend_terminal(const Graph& g, int removed, const VertexSet& s, ExtendKind kind) {
    const int n = g.order();
    if (removed < 0 || removed >= n) throw parameter_error("extend_terminal: removed vertex out of range");
    if (s.test(removed)) throw contract_violation("extend_terminal: set contains the removed vertex");

    VertexSet rest = VertexSet::full(n);
    rest.reset(removed);
    const auto sub = induced_subgraph(g, rest);
    VertexSet s_sub(sub.graph.order());
    s.for_each([&](int v) { s_sub.set(sub.new_of_old[v]); });
    const auto sub_dm = all_pairs_distances(sub.graph);
    if (!is_terminal_set(sub_dm, s_sub))
        throw contract_violation("extend_terminal: set is not terminal in the reduced graph");

    VertexSet result = s;
    if (kind == ExtendKind::simplicial) {
        if (!is_simplicial(g, removed))
            throw contract_violation("extend_terminal: removed vertex is not simplicial");
        if (s == g.neighbours(removed)) result.set(removed);
    } else {
        int y = -1;
        for (int v = 0; v < n && y < 0; ++v)
            if (v != removed && twins(g, removed, v)) y = v;
        if (y < 0) throw contract_violation("extend_terminal: removed vertex has no twin");
        if (s.test(y)) {
            const bool s_meets_ny = s.intersects(g.neighbours(y));
            if (!s_meets_ny) result.set(removed);
            else if (g.adjacent(removed, y)) result.set(removed);
        }
    }

    detail::verify_terminal_or_throw(all_pairs_distances(g), result, "extend_terminal");
    return result;
}

/// Merges per-component terminal sets across a clique cut-set w: if every
/// component produced exactly w, the answer is w; otherwise the first
/// component set reaching outside w already works for the whole graph.
inline VertexSet combine_clique_cutset(const Graph& g, const VertexSet& w,
                                       const std::vector<VertexSet>& per_component) {
    if (w.empty() || !is_clique(g, w))
        throw contract_violation("combine_clique_cutset: cut-set is not a non-empty clique");
    Graph without(g.order());
    for (auto [u, v] : g.edges())
        if (!w.test(u) && !w.test(v)) without.add_edge(u, v);
    std::vector<VertexSet> comps;
    for (auto& c : components(without)) {
        VertexSet trimmed = c;
        trimmed -= w;
        if (trimmed.any()) comps.push_back(trimmed);
    }
    if (comps.size() < 2) throw contract_violation("combine_clique_cutset: removing w does not disconnect the graph");
    if (per_component.size() != comps.size())
        throw contract_violation("combine_clique_cutset: expected one terminal set per component");

    const auto g_dm = all_pairs_distances(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto sub = induced_subgraph(g, comps[i] | w);
        VertexSet s_sub(sub.graph.order());
        per_component[i].for_each([&](int v) {
            if (sub.new_of_old[v] < 0)
                throw contract_violation("combine_clique_cutset: component set leaves its block");
            s_sub.set(sub.new_of_old[v]);
        });
        if (!is_terminal_set(all_pairs_distances(sub.graph), s_sub))
            throw contract_violation("combine_clique_cutset: component set is not terminal in its block");
    }

    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (per_component[i].intersects(comps[i])) {
            detail::verify_terminal_or_throw(g_dm, per_component[i], "combine_clique_cutset");
            return per_component[i];
        }
    }
    detail::verify_terminal_or_throw(g_dm, w, "combine_clique_cutset");
    return w;
}

/// Terminal set for graphs in the supported classes: per-component recursion
/// for disconnected inputs, simplicial peeling for chordal graphs, twin
/// peeling for cographs, and the greedy constructions for diameter <= 3.
inline VertexSet construct_structured(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw parameter_error("construct_structured: empty graph");

    const auto comps = components(g);
    if (comps.size() > 1) {
        VertexSet out(n);
        for (const auto& comp : comps) {
            const auto sub = induced_subgraph(g, comp);
            const VertexSet part = construct_structured(sub.graph);
            part.for_each([&](int v) { out.set(sub.old_of_new[v]); });
        }
        detail::verify_terminal_or_throw(all_pairs_distances(g), out, "construct_structured");
        return out;
    }

    if (n == 1) return VertexSet::full(1);

    if (is_chordal(g)) {
        int u = -1;
        for (int v = 0; v < n && u < 0; ++v)
            if (is_simplicial(g, v)) u = v;
        VertexSet rest = VertexSet::full(n);
        rest.reset(u);
        const auto sub = induced_subgraph(g, rest);
        const VertexSet inner = construct_structured(sub.graph);
        VertexSet mapped(n);
        inner.for_each([&](int v) { mapped.set(sub.old_of_new[v]); });
        return extend_terminal(g, u, mapped, ExtendKind::simplicial);
    }

    if (is_cograph(g)) {
        const auto pair = find_twin_pair(g);
        if (!pair) throw contract_violation("construct_structured: cograph without twins");
        const int removed = pair->second;
        VertexSet rest = VertexSet::full(n);
        rest.reset(removed);
        const auto sub = induced_subgraph(g, rest);
        const VertexSet inner = construct_structured(sub.graph);
        VertexSet mapped(n);
        inner.for_each([&](int v) { mapped.set(sub.old_of_new[v]); });
        return extend_terminal(g, removed, mapped, ExtendKind::twin);
    }

    const auto dm = all_pairs_distances(g);
    const int d = diameter(g, dm);
    if (d <= 2) return construct_diam2(g).set;
    if (d <= 3) return construct_diam3(g).set;
    throw unsupported_class_error("construct_structured: graph is not chordal, not a cograph, and has diameter > 3");
}

} // namespace gpos
