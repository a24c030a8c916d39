#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

namespace detail {

// Adjacency as an upper-triangle bit string, row-major pair order
// (0,1),(0,2),...,(0,n-1),(1,2),...; the first pair is the most significant
// bit, so lexicographic comparison of strings is numeric comparison.
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

} // namespace detail

/// Lexicographically minimal adjacency bit string over all vertex
/// permutations. Intended for small orders (full n! minimisation).
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw capacity_error("canonical_code: full permutation search limited to n <= 8");
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    bool adj[8][8] = {};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = i != j && g.adjacent(i, j);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t val = 0;
        bool worse = false;
        for (int k = 0; k < m; ++k) {
            val = (val << 1) | (adj[perm[pairs[k].first]][perm[pairs[k].second]] ? 1u : 0u);
            if (val > (best >> (m - 1 - k))) {
                worse = true;
                break;
            }
        }
        if (!worse && val < best) best = val;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    const int m = n * (n - 1) / 2;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if ((code >> (m - 1 - k)) & 1) g.add_edge(i, j);
            ++k;
        }
    return g;
}

namespace detail {

inline bool mask_connected(int n, const std::uint8_t rows[8]) {
    if (n <= 1) return true;
    std::uint8_t comp = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int i = 0; i < n; ++i)
            if ((frontier >> i) & 1) next |= rows[i];
        next &= std::uint8_t(~comp);
        comp |= next;
        frontier = next;
    }
    return comp == std::uint8_t((1u << n) - 1);
}

} // namespace detail

/// One representative per isomorphism class of connected graphs on exactly
/// n vertices, in ascending canonical-code order. The representative's
/// labelling is the canonical one.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw parameter_error("enumerate_connected_graphs: n must be >= 1");
    if (n > 6) throw capacity_error("enumerate_connected_graphs: n > 6; ingest a graph6 corpus instead");
    const int m = n * (n - 1) / 2;
    std::set<std::uint64_t> codes;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::uint8_t rows[8] = {};
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if ((mask >> (m - 1 - k)) & 1) {
                    rows[i] |= std::uint8_t(1u << j);
                    rows[j] |= std::uint8_t(1u << i);
                }
                ++k;
            }
        if (!detail::mask_connected(n, rows)) continue;
        codes.insert(canonical_code(graph_from_code(n, mask)));
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

/// Connected classes on exactly n vertices for n <= 7. Order 7 is produced
/// by attaching one vertex to each order-6 representative in every possible
/// way and deduplicating by canonical code; every connected graph arises
/// this way because deleting a non-cut vertex leaves a connected graph.
inline std::vector<Graph> connected_graphs_exactly(int n) {
    if (n <= 6) return enumerate_connected_graphs(n);
    if (n != 7) throw capacity_error("connected_graphs_exactly: supported up to n = 7");
    const auto base = enumerate_connected_graphs(6);
    std::set<std::uint64_t> codes;
    for (const auto& b : base) {
        for (int nbhd = 1; nbhd < (1 << 6); ++nbhd) {
            Graph g(7);
            for (auto [u, v] : b.edges()) g.add_edge(u, v);
            for (int u = 0; u < 6; ++u)
                if ((nbhd >> u) & 1) g.add_edge(u, 6);
            codes.insert(canonical_code(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(graph_from_code(7, c));
    return out;
}

/// Connected classes of every order 1..n, ascending order then code.
inline std::vector<Graph> connected_graphs_upto(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        auto part = connected_graphs_exactly(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace gpos
