#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpos/cliques.hpp"
#include "gpos/core.hpp"
#include "gpos/distance.hpp"
#include "gpos/graph.hpp"

namespace gpos {

inline std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n), frontier(n);
        comp.set(s);
        frontier.set(s);
        while (frontier.any()) {
            VertexSet next(n);
            frontier.for_each([&](int u) { next |= g.neighbours(u); });
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

/// Diameter of a connected graph (0 for a single vertex).
inline int diameter(const Graph& g, const DistanceMatrix& dm) {
    if (!is_connected(g)) throw parameter_error("diameter: graph is disconnected");
    int d = 0;
    for (int u = 0; u < g.order(); ++u) {
        const int e = eccentricity(dm, u);
        if (e > d) d = e;
    }
    return d;
}

inline bool is_simplicial(const Graph& g, int u) {
    return is_clique(g, g.neighbours(u));
}

/// N(u) = N(v), which forces u and v non-adjacent.
inline bool open_twins(const Graph& g, int u, int v) {
    return u != v && g.neighbours(u) == g.neighbours(v);
}

/// N[u] = N[v], which forces u ~ v.
inline bool closed_twins(const Graph& g, int u, int v) {
    if (u == v || !g.adjacent(u, v)) return false;
    VertexSet cu = g.neighbours(u);
    cu.set(u);
    VertexSet cv = g.neighbours(v);
    cv.set(v);
    return cu == cv;
}

inline bool twins(const Graph& g, int u, int v) {
    return open_twins(g, u, v) || closed_twins(g, u, v);
}

/// First pair of twins in ascending (u,v) order, or nullopt.
inline std::optional<std::pair<int, int>> find_twin_pair(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (twins(g, u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

/// Chordality via greedy perfect elimination: repeatedly delete a simplicial
/// vertex; chordal graphs always expose one and stay chordal.
inline bool is_chordal(const Graph& g) {
    const int n = g.order();
    VertexSet alive = VertexSet::full(n);
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (int u = 0; u < n; ++u) rows.push_back(g.neighbours(u));
    for (int removed = 0; removed < n; ++removed) {
        int pick = -1;
        for (int u = 0; u < n && pick < 0; ++u) {
            if (!alive.test(u)) continue;
            bool simp = true;
            rows[u].for_each([&](int a) {
                if (!simp) return;
                rows[u].for_each([&](int b) {
                    if (a < b && !g.adjacent(a, b)) simp = false;
                });
            });
            if (simp) pick = u;
        }
        if (pick < 0) return false;
        alive.reset(pick);
        for (int u = 0; u < n; ++u)
            if (alive.test(u)) rows[u].reset(pick);
    }
    return true;
}

/// No induced P4: every connected 4-vertex induced subgraph with exactly
/// three edges and maximum degree two is a P4.
inline bool is_cograph(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int v[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(v[i], v[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    // 3 edges on 4 vertices: P4, K1,3, or K3+isolated.
                    bool star_or_triangle = false;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 3 || deg[i] == 0) star_or_triangle = true;
                    if (!star_or_triangle) return false;
                }
    return true;
}

/// Some clique whose removal disconnects the graph. Enumerates cliques by
/// ascending-index extension; meant for small graphs.
inline std::optional<VertexSet> find_clique_cutset(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw capacity_error("find_clique_cutset: limited to n <= 20");
    std::optional<VertexSet> found;
    auto disconnects = [&](const VertexSet& s) {
        if (s.count() >= n - 1) return false;
        Graph rest(n);
        for (auto [u, v] : g.edges())
            if (!s.test(u) && !s.test(v)) rest.add_edge(u, v);
        int live_components = 0;
        for (const auto& c : components(rest)) {
            VertexSet t = c;
            t -= s;
            if (t.any()) ++live_components;
        }
        return live_components >= 2;
    };
    // grow cliques one larger-indexed common neighbour at a time
    std::vector<std::pair<VertexSet, VertexSet>> stack; // (clique, candidates)
    for (int v = n - 1; v >= 0; --v) {
        VertexSet c(n);
        c.set(v);
        VertexSet cand(n);
        g.neighbours(v).for_each([&](int u) {
            if (u > v) cand.set(u);
        });
        stack.emplace_back(c, cand);
    }
    while (!stack.empty() && !found) {
        auto [clique, cand] = stack.back();
        stack.pop_back();
        if (disconnects(clique)) {
            found = clique;
            break;
        }
        cand.for_each([&](int u) {
            VertexSet c2 = clique;
            c2.set(u);
            VertexSet cand2 = cand & g.neighbours(u);
            for (int x = cand2.first(); x >= 0 && x <= u; x = cand2.next(x)) cand2.reset(x);
            stack.emplace_back(c2, cand2);
        });
    }
    return found;
}

inline bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            bool ok = true;
            g.neighbours(u).for_each([&](int v) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

struct StructuralReport {
    bool connected = false;
    std::vector<VertexSet> component_list;
    std::vector<int> component_diameters;
    VertexSet simplicial;
    std::vector<std::pair<int, int>> open_twin_pairs;
    std::vector<std::pair<int, int>> closed_twin_pairs;
    bool chordal = false;
    bool cograph = false;
};

inline StructuralReport structural_report(const Graph& g) {
    StructuralReport r;
    r.component_list = components(g);
    r.connected = g.order() <= 1 || r.component_list.size() == 1;
    const DistanceMatrix dm = all_pairs_distances(g);
    for (const auto& comp : r.component_list) {
        int d = 0;
        comp.for_each([&](int u) {
            const int e = eccentricity(dm, u);
            if (e > d) d = e;
        });
        r.component_diameters.push_back(d);
    }
    r.simplicial = VertexSet(g.order());
    for (int u = 0; u < g.order(); ++u)
        if (is_simplicial(g, u)) r.simplicial.set(u);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (open_twins(g, u, v)) r.open_twin_pairs.emplace_back(u, v);
            if (closed_twins(g, u, v)) r.closed_twin_pairs.emplace_back(u, v);
        }
    r.chordal = is_chordal(g);
    r.cograph = is_cograph(g);
    return r;
}

} // namespace gpos
