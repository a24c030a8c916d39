#pragma once

#include <vector>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P ∪ X with most neighbours in P, lowest index on ties.
    int pivot = -1, best = -1;
    auto consider = [&](int v) {
        const int c = (p & g.neighbours(v)).count();
        if (c > best) {
            best = c;
            pivot = v;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    VertexSet candidates = p;
    if (pivot >= 0) candidates -= g.neighbours(pivot);
    candidates.for_each([&](int v) {
        r.set(v);
        bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    });
}

} // namespace detail

/// All maximal cliques, in the (deterministic) discovery order of pivoting
/// Bron-Kerbosch with ascending-index candidate processing.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    VertexSet r(g.order());
    detail::bron_kerbosch(g, r, VertexSet::full(g.order()), VertexSet(g.order()), out);
    return out;
}

/// Maximum clique; among maximum cliques the colexicographically smallest.
/// Empty graph yields the empty set.
inline VertexSet maximum_clique(const Graph& g) {
    VertexSet best(g.order());
    for (const auto& c : maximal_cliques(g)) {
        if (c.count() > best.count() || (c.count() == best.count() && c.colex_less(best)))
            best = c;
    }
    return best;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int u) {
        s.for_each([&](int v) {
            if (u < v && !g.adjacent(u, v)) ok = false;
        });
    });
    return ok;
}

} // namespace gpos
