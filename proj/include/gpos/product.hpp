#pragma once

#include <string>
#include <utility>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

/// Bijection between product-vertex indices and coordinate pairs (g,h):
/// encode(g,h) = g*nH + h.
struct ProductIndex {
    int nG = 0;
    int nH = 0;

    int encode(int g, int h) const { return g * nH + h; }
    std::pair<int, int> decode(int q) const { return {q / nH, q % nH}; }
    int left(int q) const { return q / nH; }
    int right(int q) const { return q % nH; }

    std::string coord_string(int q) const {
        auto [g, h] = decode(q);
        return "(" + std::to_string(g) + "," + std::to_string(h) + ")";
    }

    /// Renders a product-vertex set as "{(g,h), ...}".
    std::string set_string(const VertexSet& s) const {
        std::string out = "{";
        bool first = true;
        s.for_each([&](int q) {
            if (!first) out += ", ";
            out += coord_string(q);
            first = false;
        });
        return out + "}";
    }
};

/// Cartesian product: (u1,v1) ~ (u2,v2) iff u1 = u2 and v1 ~ v2, or
/// u1 ~ u2 and v1 = v2. Distances add across factors.
inline std::pair<Graph, ProductIndex> cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw parameter_error("cartesian_product: factors must be non-empty");
    const long long total = (long long)g.order() * h.order();
    if (total > 1 << 16)
        throw capacity_error("cartesian_product: product order exceeds capacity");
    ProductIndex idx{g.order(), h.order()};
    Graph p{int(total)};
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            h.neighbours(b).for_each([&](int b2) {
                if (b < b2) p.add_edge(idx.encode(a, b), idx.encode(a, b2));
            });
            g.neighbours(a).for_each([&](int a2) {
                if (a < a2) p.add_edge(idx.encode(a, b), idx.encode(a2, b));
            });
        }
    return {std::move(p), idx};
}

/// Image of a factor set inside one layer of the product.
/// Left: S x {anchor} for S in V(G); right: {anchor} x S for S in V(H).
enum class FactorSide { left, right };

inline VertexSet layer_image(const ProductIndex& idx, FactorSide side, const VertexSet& s, int anchor) {
    VertexSet image(idx.nG * idx.nH);
    if (side == FactorSide::left) {
        if (anchor < 0 || anchor >= idx.nH) throw parameter_error("layer_image: anchor out of range");
        s.for_each([&](int v) { image.set(idx.encode(v, anchor)); });
    } else {
        if (anchor < 0 || anchor >= idx.nG) throw parameter_error("layer_image: anchor out of range");
        s.for_each([&](int v) { image.set(idx.encode(anchor, v)); });
    }
    return image;
}

} // namespace gpos
