#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpos/core.hpp"

namespace gpos {

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as one VertexSet row per vertex (the open
/// neighbourhood), so symmetry and irreflexivity are enforced at build time.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw parameter_error("Graph: negative order");
        rows_.assign(n, VertexSet(n));
    }

    int order() const { return n_; }

    int size() const {
        int deg_sum = 0;
        for (const auto& row : rows_) deg_sum += row.count();
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    const VertexSet& neighbours(int u) const { return rows_[u]; }

    int degree(int u) const { return rows_[u].count(); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw parameter_error("Graph: endpoint out of range");
        if (u == v) throw parameter_error("Graph: self-loop rejected");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            rows_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// Builds a graph from explicit edges; duplicate edges collapse.
inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw parse_error("edge list: self-loop at " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

/// Text format: first line "n m", then m lines "u v", 0-indexed.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("edge list: empty input");
    std::istringstream header(line);
    int n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw parse_error("edge list: bad header line, expected \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw parse_error("edge list: expected " + std::to_string(m) + " edge lines");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw parse_error("edge list: bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

/// Relabels the subgraph induced by w to 0..|w|-1.
/// Returns the graph plus the old-id list indexed by new id; old_to_new is
/// filled with -1 outside w when provided.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old; // -1 for vertices outside w
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw parameter_error("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.old_of_new = w.to_vector();
    out.new_of_old.assign(g.order(), -1);
    for (std::size_t i = 0; i < out.old_of_new.size(); ++i)
        out.new_of_old[out.old_of_new[i]] = int(i);
    Graph h(int(out.old_of_new.size()));
    for (std::size_t i = 0; i < out.old_of_new.size(); ++i) {
        const int u = out.old_of_new[i];
        g.neighbours(u).for_each([&](int v) {
            if (out.new_of_old[v] >= 0 && u < v) h.add_edge(int(i), out.new_of_old[v]);
        });
    }
    out.graph = std::move(h);
    return out;
}

} // namespace gpos
