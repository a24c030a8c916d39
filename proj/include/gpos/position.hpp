#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/distance.hpp"
#include "gpos/graph.hpp"
#include "gpos/search.hpp"
#include "gpos/structure.hpp"

namespace gpos {

/// Three vertices on a common shortest path: y strictly between x and z.
struct CollinearWitness {
    int x = -1, y = -1, z = -1;

    std::string to_string() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
    }
};

/// First betweenness triple inside s (x ascending, then z, then y), or
/// nullopt when s is in general position. Triples spanning components are
/// never collinear.
inline std::optional<CollinearWitness> find_collinear_triple(const DistanceMatrix& dm, const VertexSet& s) {
    const auto m = s.to_vector();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (int y : m) {
                if (y == m[i] || y == m[j]) continue;
                if (dm.strictly_between(m[i], y, m[j]))
                    return CollinearWitness{m[i], y, m[j]};
            }
    return std::nullopt;
}

inline bool in_general_position(const DistanceMatrix& dm, const VertexSet& s) {
    return !find_collinear_triple(dm, s).has_value();
}

namespace detail {

/// Adding u to gp set `members` keeps general position?
inline bool extends_gp(const DistanceMatrix& dm, const std::vector<int>& members, int u) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int x = members[i];
        if (x == u) return false;
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (dm.collinear(u, x, members[j])) return false;
    }
    return true;
}

} // namespace detail

/// Smallest vertex whose addition keeps s in general position, or nullopt
/// when s is maximal. Throws contract_violation (with the collinear triple)
/// when s itself is not in general position.
inline std::optional<int> find_gp_extension(const DistanceMatrix& dm, const VertexSet& s) {
    if (auto w = find_collinear_triple(dm, s))
        throw contract_violation("find_gp_extension: set not in general position, witness " + w->to_string());
    const auto members = s.to_vector();
    for (int u = 0; u < dm.order(); ++u) {
        if (s.test(u)) continue;
        if (detail::extends_gp(dm, members, u)) return u;
    }
    return std::nullopt;
}

inline bool is_maximal_gp(const DistanceMatrix& dm, const VertexSet& s) {
    return !find_gp_extension(dm, s).has_value();
}

namespace detail {

struct GpTree {
    const DistanceMatrix& dm;
    int n;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    SearchLimits::Deadline deadline;
    int max_card;
    bool capped = false;

    bool out_of_budget() {
        if (++nodes > budget) {
            capped = true;
            return true;
        }
        if ((nodes & 1023) == 0 && deadline.passed()) {
            capped = true;
            return true;
        }
        return false;
    }
};

/// DFS over all general position sets, adding vertices in ascending order.
/// `ext` always holds every vertex (of any index) whose addition keeps the
/// set in general position, so a node with empty `ext` is a maximal set.
template <typename Visit>
void gp_tree_walk(GpTree& t, VertexSet& s, std::vector<int>& members, const VertexSet& ext,
                  int min_next, Visit&& visit) {
    if (t.out_of_budget()) return;
    if (!visit(s, members, ext, min_next)) return;
    if (int(members.size()) >= t.max_card) return;
    for (int v = ext.next(min_next - 1); v >= 0 && !t.capped; v = ext.next(v)) {
        VertexSet child_ext(t.n);
        ext.for_each([&](int u) {
            if (u == v) return;
            for (int x : members)
                if (t.dm.collinear(u, v, x)) return;
            child_ext.set(u);
        });
        s.set(v);
        members.push_back(v);
        gp_tree_walk(t, s, members, child_ext, v + 1, visit);
        members.pop_back();
        s.reset(v);
    }
}

template <typename Visit>
SearchStatus gp_tree_run(const DistanceMatrix& dm, const SearchLimits& limits, Visit&& visit) {
    GpTree t{dm, dm.order(), 0, limits.node_budget, limits.start_deadline(),
             limits.max_cardinality.value_or(dm.order()), false};
    VertexSet s(t.n);
    std::vector<int> members;
    VertexSet ext = VertexSet::full(t.n); // any single vertex is in general position
    gp_tree_walk(t, s, members, ext, 0, visit);
    return t.capped ? SearchStatus::capped : SearchStatus::exact;
}

} // namespace detail

/// Largest general position set, branch and bound over the gp-set tree.
inline InvariantValue gp_number(const Graph& g, const SearchLimits& limits = {}) {
    const auto dm = all_pairs_distances(g);
    if (g.order() == 0) return InvariantValue::finite(0, VertexSet(0));
    int best = 0;
    VertexSet best_set(g.order());
    const auto status = detail::gp_tree_run(
        dm, limits,
        [&](const VertexSet& s, const std::vector<int>& members, const VertexSet& ext, int min_next) {
            if (int(members.size()) > best) {
                best = int(members.size());
                best_set = s;
            }
            int remaining = 0;
            for (int v = ext.next(min_next - 1); v >= 0; v = ext.next(v)) ++remaining;
            return int(members.size()) + remaining > best;
        });
    if (status == SearchStatus::capped) return InvariantValue::inconclusive("node budget / time budget");
    return InvariantValue::finite(best, best_set);
}

/// Every maximal general position set exactly once (ascending-vertex DFS
/// discovery order). The callback may return false to stop early.
template <typename Fn>
SearchStatus for_each_maximal_gp_set(const DistanceMatrix& dm, const SearchLimits& limits, Fn&& fn) {
    bool stopped = false;
    const auto status = detail::gp_tree_run(
        dm, limits,
        [&](const VertexSet& s, const std::vector<int>& members, const VertexSet& ext, int) {
            if (!members.empty() && ext.empty()) {
                if (!fn(s)) {
                    stopped = true;
                    return false;
                }
            }
            return !stopped;
        });
    return stopped ? SearchStatus::exact : status;
}

/// Smallest maximal general position set: ascending cardinality, subsets in
/// colexicographic order, first hit wins.
inline InvariantValue lower_gp_number(const Graph& g, const SearchLimits& limits = {}) {
    const auto dm = all_pairs_distances(g);
    const int n = g.order();
    if (n == 0) return InvariantValue::finite(0, VertexSet(0));
    const int kmax = limits.max_cardinality.value_or(n);
    std::uint64_t nodes = 0;
    const auto deadline = limits.start_deadline();
    for (int k = 1; k <= kmax; ++k) {
        for (Combinations combo(n, k); !combo.done(); combo.advance()) {
            if (++nodes > limits.node_budget)
                return InvariantValue::inconclusive("node budget (" + std::to_string(limits.node_budget) + ")");
            if ((nodes & 1023) == 0 && deadline.passed())
                return InvariantValue::inconclusive("time budget");
            const auto& idx = combo.current();
            bool gp = true;
            for (std::size_t i = 0; i < idx.size() && gp; ++i)
                for (std::size_t j = i + 1; j < idx.size() && gp; ++j)
                    for (int y : idx) {
                        if (y == idx[i] || y == idx[j]) continue;
                        if (dm.strictly_between(idx[i], y, idx[j])) {
                            gp = false;
                            break;
                        }
                    }
            if (!gp) continue;
            const auto s = VertexSet::of(n, idx);
            if (is_maximal_gp(dm, s)) return InvariantValue::finite(k, s);
        }
    }
    if (kmax < n) return InvariantValue::inconclusive("cardinality cap (" + std::to_string(kmax) + ")");
    return InvariantValue::infinite(); // unreachable: V itself contains a maximal gp set
}

/// Line through u and v: vertices metrically between them or beyond either
/// end, computed within their common component.
struct LineResult {
    int u = -1, v = -1;
    VertexSet members;
};

inline LineResult line_of(const DistanceMatrix& dm, int u, int v) {
    if (u == v) throw parameter_error("line_of: endpoints must differ");
    if (u < 0 || v < 0 || u >= dm.order() || v >= dm.order())
        throw parameter_error("line_of: vertex out of range");
    if (!dm.reachable(u, v)) throw parameter_error("line_of: endpoints in different components");
    LineResult out{u, v, VertexSet(dm.order())};
    const int duv = dm.raw(u, v);
    for (int w = 0; w < dm.order(); ++w) {
        if (!dm.reachable(u, w)) continue;
        const int a = dm.raw(u, w), b = dm.raw(w, v);
        if (duv == a + b || duv == (a > b ? a - b : b - a)) out.members.set(w);
    }
    return out;
}

/// First pair (ascending u, then v) whose line covers the whole graph.
inline std::optional<std::pair<int, int>> has_universal_line(const Graph& g) {
    if (!is_connected(g)) throw parameter_error("has_universal_line: graph must be connected");
    const auto dm = all_pairs_distances(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int duv = dm.raw(u, v);
            bool universal = true;
            for (int w = 0; w < n && universal; ++w) {
                const int a = dm.raw(u, w), b = dm.raw(w, v);
                if (!(duv == a + b || duv == (a > b ? a - b : b - a))) universal = false;
            }
            if (universal) return std::make_pair(u, v);
        }
    return std::nullopt;
}

/// Smallest set covering every vertex by some shortest path between two of
/// its members. Ascending-cardinality exact search.
inline InvariantValue geodetic_number(const Graph& g, const SearchLimits& limits = {}) {
    if (!is_connected(g)) throw parameter_error("geodetic_number: graph must be connected");
    const auto dm = all_pairs_distances(g);
    const int n = g.order();
    if (n == 0) return InvariantValue::finite(0, VertexSet(0));
    const int kmax = limits.max_cardinality.value_or(n);
    std::uint64_t nodes = 0;
    const auto deadline = limits.start_deadline();
    for (int k = 1; k <= kmax; ++k) {
        for (Combinations combo(n, k); !combo.done(); combo.advance()) {
            if (++nodes > limits.node_budget) return InvariantValue::inconclusive("node budget");
            if ((nodes & 1023) == 0 && deadline.passed()) return InvariantValue::inconclusive("time budget");
            const auto& idx = combo.current();
            bool covers = true;
            for (int w = 0; w < n && covers; ++w) {
                bool hit = false;
                for (std::size_t i = 0; i < idx.size() && !hit; ++i)
                    for (std::size_t j = i; j < idx.size() && !hit; ++j)
                        if (dm.raw(idx[i], w) + dm.raw(w, idx[j]) == dm.raw(idx[i], idx[j])) hit = true;
                covers = hit;
            }
            if (covers) return InvariantValue::finite(k, VertexSet::of(n, idx));
        }
    }
    return InvariantValue::inconclusive("cardinality cap (" + std::to_string(kmax) + ")");
}

/// Why two general position sets fail to be orthogonal: a shortest path from
/// `from` in S1 to `to` in S2 carrying more than two members of the multiset
/// union. `middle` is a third vertex strictly between, or -1 when an
/// endpoint itself is over-counted (shared between the sets).
struct OrthogonalityViolation {
    int from = -1, to = -1, middle = -1;

    std::string to_string() const {
        if (middle < 0)
            return "endpoints (" + std::to_string(from) + "," + std::to_string(to) + ") over-counted";
        return "path " + std::to_string(from) + " -> " + std::to_string(middle) + " -> " + std::to_string(to);
    }
};

/// Checks Definition of orthogonal general position sets: every shortest
/// path starting in s1 and ending in s2 carries exactly two members of the
/// multiset s1 ∪ s2 (shared vertices count twice).
inline std::optional<OrthogonalityViolation> find_orthogonality_violation(
    const DistanceMatrix& dm, const VertexSet& s1, const VertexSet& s2) {
    for (const auto* s : {&s1, &s2})
        if (auto w = find_collinear_triple(dm, *s))
            throw contract_violation("orthogonality check: input set not in general position, witness " + w->to_string());
    const VertexSet both = s1 | s2;
    std::optional<OrthogonalityViolation> found;
    s1.for_each([&](int x) {
        if (found) return;
        s2.for_each([&](int y) {
            if (found || x == y || !dm.reachable(x, y)) return;
            if (s2.test(x) || s1.test(y)) {
                found = OrthogonalityViolation{x, y, -1};
                return;
            }
            both.for_each([&](int w) {
                if (found || w == x || w == y) return;
                if (dm.strictly_between(x, w, y)) found = OrthogonalityViolation{x, y, w};
            });
        });
    });
    return found;
}

inline bool are_orthogonal_gp(const DistanceMatrix& dm, const VertexSet& s1, const VertexSet& s2) {
    return !find_orthogonality_violation(dm, s1, s2).has_value();
}

} // namespace gpos
