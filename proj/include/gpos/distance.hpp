#pragma once

#include <vector>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

/// All-pairs shortest-path distances. Pairs in different components hold the
/// UNREACHABLE sentinel; it is a distinct marker, never a large integer, and
/// doing arithmetic on it is a bug. Use reachable() or at() (which throws)
/// before adding distances.
class DistanceMatrix {
public:
    static constexpr int UNREACHABLE = -1;

    DistanceMatrix() = default;

    explicit DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * n, UNREACHABLE) {}

    int order() const { return n_; }

    /// Raw entry: a distance or UNREACHABLE.
    int raw(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }

    bool reachable(int u, int v) const { return raw(u, v) != UNREACHABLE; }

    /// Checked entry: throws on unreachable pairs.
    int at(int u, int v) const {
        const int x = raw(u, v);
        if (x == UNREACHABLE)
            throw contract_violation("distance requested across components: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        return x;
    }

    void set(int u, int v, int value) { d_[std::size_t(u) * n_ + v] = value; }

    /// True when y lies strictly between x and z on some shortest path:
    /// all three distinct, mutually reachable, d(x,z) = d(x,y) + d(y,z).
    bool strictly_between(int x, int y, int z) const {
        if (x == y || y == z || x == z) return false;
        const int xz = raw(x, z);
        if (xz == UNREACHABLE) return false;
        const int xy = raw(x, y);
        if (xy == UNREACHABLE) return false;
        const int yz = raw(y, z);
        if (yz == UNREACHABLE) return false;
        return xz == xy + yz;
    }

    /// True when some shortest path carries all three vertices, i.e. one of
    /// them lies strictly between the other two.
    bool collinear(int a, int b, int c) const {
        return strictly_between(a, b, c) || strictly_between(b, a, c) ||
               strictly_between(a, c, b);
    }

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// BFS from every vertex, frontier expansion on adjacency rows.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    for (int s = 0; s < n; ++s) {
        VertexSet visited(n), frontier(n);
        visited.set(s);
        frontier.set(s);
        int depth = 0;
        while (frontier.any()) {
            frontier.for_each([&](int u) { dm.set(s, u, depth); });
            VertexSet next(n);
            frontier.for_each([&](int u) { next |= g.neighbours(u); });
            next -= visited;
            visited |= next;
            frontier = next;
            ++depth;
        }
    }
    return dm;
}

/// Largest finite distance from u (its component's eccentricity).
inline int eccentricity(const DistanceMatrix& dm, int u) {
    int e = 0;
    for (int v = 0; v < dm.order(); ++v)
        if (dm.reachable(u, v) && dm.raw(u, v) > e) e = dm.raw(u, v);
    return e;
}

} // namespace gpos
