#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/distance.hpp"
#include "gpos/families.hpp"
#include "gpos/graph.hpp"
#include "gpos/position.hpp"
#include "gpos/product.hpp"
#include "gpos/terminal.hpp"

namespace gpos {

/// A factor set copied into one layer of a product.
struct LayerEmbedding {
    FactorSide side = FactorSide::left;
    int anchor = 0;
    VertexSet source;
    VertexSet image; // product ids
};

/// Both sides of the layer-maximality equivalence, evaluated independently:
/// a maximal general position set S of G stays maximal as S x {anchor} in
/// G box H exactly when S is a terminal set of G. Any disagreement between
/// the two columns is flagged.
struct LayerCheckReport {
    LayerEmbedding embedding;
    ProductIndex index;
    bool terminal_in_factor = false;
    TerminalCheck factor_detail;
    bool maximal_in_product = false;
    std::optional<int> product_extender;
    bool agree = false;
};

inline LayerCheckReport layer_embed_check(const Graph& g, const Graph& h, const VertexSet& s, int anchor) {
    if (g.order() < 2 || h.order() < 2)
        throw parameter_error("layer_embed_check: both factors need order at least two");
    const auto dm_g = all_pairs_distances(g);
    if (auto w = find_collinear_triple(dm_g, s))
        throw contract_violation("layer_embed_check: set not in general position, witness " + w->to_string());
    if (auto ext = find_gp_extension(dm_g, s))
        throw contract_violation("layer_embed_check: set not maximal, extendable by " + std::to_string(*ext));

    LayerCheckReport out;
    out.factor_detail = check_terminal_set(dm_g, s);
    out.terminal_in_factor = out.factor_detail.ok();

    auto [p, idx] = cartesian_product(g, h);
    out.index = idx;
    out.embedding = {FactorSide::left, anchor, s, layer_image(idx, FactorSide::left, s, anchor)};
    const auto dm_p = all_pairs_distances(p);
    out.product_extender = find_gp_extension(dm_p, out.embedding.image);
    out.maximal_in_product = !out.product_extender.has_value();
    out.agree = out.terminal_in_factor == out.maximal_in_product;
    return out;
}

/// Smallest adjacent pair forming a maximal general position set, if any.
inline std::optional<std::pair<int, int>> adjacent_maximal_pair(const Graph& g, const DistanceMatrix& dm) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            if (is_maximal_gp(dm, VertexSet(g.order(), {u, v}))) return std::make_pair(u, v);
        }
    return std::nullopt;
}

/// Predicts whether G box H has a universal line (some factor has an
/// adjacent maximal general position pair, or both factors have geodetic
/// number two) and compares the prediction with detection on the product.
struct UniversalLineCriterionReport {
    std::optional<std::pair<int, int>> adjacent_pair_left;
    std::optional<std::pair<int, int>> adjacent_pair_right;
    int geodetic_left = 0;
    int geodetic_right = 0;
    bool condition_adjacent_pair = false;
    bool condition_geodetic = false;
    bool predicted = false;
    std::optional<std::pair<int, int>> observed_pair; // product ids
    bool observed = false;
    bool agree = false;
};

inline UniversalLineCriterionReport universal_line_product_criterion(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h))
        throw parameter_error("universal_line_product_criterion: factors must be connected");
    UniversalLineCriterionReport out;
    const auto dm_g = all_pairs_distances(g);
    const auto dm_h = all_pairs_distances(h);
    out.adjacent_pair_left = adjacent_maximal_pair(g, dm_g);
    out.adjacent_pair_right = adjacent_maximal_pair(h, dm_h);
    out.condition_adjacent_pair = out.adjacent_pair_left || out.adjacent_pair_right;
    out.geodetic_left = geodetic_number(g).value;
    out.geodetic_right = geodetic_number(h).value;
    out.condition_geodetic = out.geodetic_left == 2 && out.geodetic_right == 2;
    out.predicted = out.condition_adjacent_pair || out.condition_geodetic;

    auto [p, idx] = cartesian_product(g, h);
    (void)idx;
    out.observed_pair = has_universal_line(p);
    out.observed = out.observed_pair.has_value();
    out.agree = out.predicted == out.observed;
    return out;
}

/// Product of complete graphs: the smallest factor embeds as a full layer
/// that is a maximal general position set, matching the lower general
/// position number min(orders).
struct CliqueProductReport {
    int expected = 0;          // min(orders)
    std::vector<int> orders;
    VertexSet witness;         // product ids, row-major coordinates
    bool witness_maximal = false;
    std::optional<InvariantValue> exact; // two factors, product order <= 40
};

inline CliqueProductReport clique_product_witness(const std::vector<int>& orders) {
    if (orders.empty()) throw parameter_error("clique_product_witness: need at least one order");
    long long total = 1;
    for (int k : orders) {
        if (k < 2) throw parameter_error("clique_product_witness: every order must be >= 2");
        total *= k;
        if (total > 4096) throw capacity_error("clique_product_witness: product order exceeds capacity");
    }
    CliqueProductReport out;
    out.orders = orders;
    out.expected = *std::min_element(orders.begin(), orders.end());

    Graph p = make_family(FamilySpec::complete(orders[0]));
    for (std::size_t i = 1; i < orders.size(); ++i)
        p = cartesian_product(p, make_family(FamilySpec::complete(orders[i]))).first;

    // Row-major vertex ids: coordinate i has stride prod(orders[i+1..]).
    const int t = int(std::min_element(orders.begin(), orders.end()) - orders.begin());
    long long stride = 1;
    for (std::size_t i = t + 1; i < orders.size(); ++i) stride *= orders[i];
    out.witness = VertexSet(p.order());
    for (int j = 0; j < orders[t]; ++j) out.witness.set(int(j * stride));

    const auto dm = all_pairs_distances(p);
    if (auto w = find_collinear_triple(dm, out.witness))
        throw contract_violation("clique_product_witness: layer witness not in general position, witness " + w->to_string());
    out.witness_maximal = is_maximal_gp(dm, out.witness);
    if (!out.witness_maximal)
        throw contract_violation("clique_product_witness: layer witness is not maximal");
    if (orders.size() == 2 && p.order() <= 40) out.exact = lower_gp_number(p);
    return out;
}

/// Bounds and proof sets for products of complete multipartite graphs.
/// Parts are sorted descending; m_r / n_s denote the smallest parts.
struct MultipartiteProductReport {
    std::vector<int> parts_left;   // sorted descending
    std::vector<int> parts_right;
    int smallest_left = 0;         // m_r
    int smallest_right = 0;        // n_s
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;      // when the bounds pin the value
    ProductIndex index;

    VertexSet diagonal_set;        // order max(m_r, n_s)
    bool diagonal_maximal = false;

    std::optional<VertexSet> six_pair_set; // order min(m_r, n_s), needs min >= 8
    bool six_pair_maximal = false;

    bool pair_scan_ran = false;
    std::optional<VertexSet> maximal_pair_found;

    std::optional<InvariantValue> exact_search; // product order <= 40
};

inline MultipartiteProductReport multipartite_product_witness(std::vector<int> parts_left,
                                                              std::vector<int> parts_right,
                                                              int pair_scan_max_order = 100) {
    if (parts_left.size() < 2 || parts_right.size() < 2)
        throw parameter_error("multipartite_product_witness: both factors need at least two parts");
    for (auto* parts : {&parts_left, &parts_right})
        for (int x : *parts)
            if (x < 2) throw parameter_error("multipartite_product_witness: every part must have >= 2 vertices");
    std::sort(parts_left.begin(), parts_left.end(), std::greater<>());
    std::sort(parts_right.begin(), parts_right.end(), std::greater<>());

    MultipartiteProductReport out;
    out.parts_left = parts_left;
    out.parts_right = parts_right;
    const int r = int(parts_left.size()), s = int(parts_right.size());
    out.smallest_left = parts_left.back();
    out.smallest_right = parts_right.back();
    const int mr = out.smallest_left, ns = out.smallest_right;
    out.lower = std::min(std::min(r, s), std::min(mr, ns));
    out.upper = std::min(std::min(r, s), std::max(mr, ns));
    if (out.lower == out.upper || mr == ns || std::min(mr, ns) >= 8) out.exact = out.lower;

    const Graph g = make_family(FamilySpec::multipartite(parts_left));
    const Graph h = make_family(FamilySpec::multipartite(parts_right));
    auto [p, idx] = cartesian_product(g, h);
    out.index = idx;
    const auto dm = all_pairs_distances(p);

    // Blocks are consecutive, so the smallest parts are the index tails.
    const int x0 = g.order() - mr; // first vertex of X_r
    const int y0 = h.order() - ns; // first vertex of Y_s

    // Diagonal plus tail across the two smallest parts, order max(m_r, n_s).
    out.diagonal_set = VertexSet(p.order());
    if (ns >= mr) {
        for (int i = 0; i < mr; ++i) out.diagonal_set.set(idx.encode(x0 + i, y0 + i));
        for (int j = mr; j < ns; ++j) out.diagonal_set.set(idx.encode(x0 + mr - 1, y0 + j));
    } else {
        for (int i = 0; i < ns; ++i) out.diagonal_set.set(idx.encode(x0 + i, y0 + i));
        for (int j = ns; j < mr; ++j) out.diagonal_set.set(idx.encode(x0 + j, y0 + ns - 1));
    }
    if (auto w = find_collinear_triple(dm, out.diagonal_set))
        throw contract_violation("multipartite_product_witness: diagonal set not in general position, witness " + w->to_string());
    out.diagonal_maximal = is_maximal_gp(dm, out.diagonal_set);
    if (!out.diagonal_maximal)
        throw contract_violation("multipartite_product_witness: diagonal set is not maximal");

    // Three disjoint pairs in the smallest part of one factor against two
    // vertices from each of two parts of the other, plus a full column.
    if (std::min(mr, ns) >= 8) {
        VertexSet sp(p.order());
        const bool left_smaller = mr <= ns;
        // a-side: factor holding the min part (6 pairs + column); b-side: other.
        const int a0 = left_smaller ? x0 : y0;
        const int a_count = left_smaller ? mr : ns;
        const auto& b_parts = left_smaller ? parts_right : parts_left;
        const int b1 = 0;          // first vertex of the other factor's part 1
        const int b2 = b_parts[0]; // first vertex of its part 2
        const int bs[4] = {b1, b1 + 1, b2, b2 + 1};
        auto put = [&](int a, int b) {
            sp.set(left_smaller ? idx.encode(a, b) : idx.encode(b, a));
        };
        put(a0 + 0, bs[0]);
        put(a0 + 1, bs[0]);
        put(a0 + 2, bs[1]);
        put(a0 + 3, bs[1]);
        put(a0 + 4, bs[2]);
        put(a0 + 5, bs[2]);
        for (int i = 6; i < a_count; ++i) put(a0 + i, bs[3]);
        if (auto w = find_collinear_triple(dm, sp))
            throw contract_violation("multipartite_product_witness: six-pair set not in general position, witness " + w->to_string());
        out.six_pair_maximal = is_maximal_gp(dm, sp);
        if (!out.six_pair_maximal)
            throw contract_violation("multipartite_product_witness: six-pair set is not maximal");
        out.six_pair_set = sp;
    }

    // Exhaustive scan for a maximal general position pair (singletons are
    // never maximal once the product has a second vertex).
    if (p.order() <= pair_scan_max_order) {
        out.pair_scan_ran = true;
        for (int u = 0; u < p.order() && !out.maximal_pair_found; ++u)
            for (int v = u + 1; v < p.order(); ++v)
                if (is_maximal_gp(dm, VertexSet(p.order(), {u, v}))) {
                    out.maximal_pair_found = VertexSet(p.order(), {u, v});
                    break;
                }
    }

    if (p.order() <= 40) out.exact_search = lower_gp_number(p);
    return out;
}

/// Layer correspondence on G box K_r: the union of the layer images is in
/// general position exactly when the listed sets are general position sets
/// of G that are pairwise orthogonal. Both sides evaluated independently.
struct OrthogonalLayersReport {
    ProductIndex index;
    bool union_gp = false;
    std::optional<CollinearWitness> union_witness; // product ids

    bool sets_orthogonal = false;
    std::optional<int> failing_set;                       // a listed set not in gp
    std::optional<CollinearWitness> failing_set_witness;  // factor ids
    std::optional<std::pair<int, int>> violating_pair;    // indices into sets
    std::optional<OrthogonalityViolation> pair_witness;   // factor ids

    bool agree = false;
};

inline OrthogonalLayersReport orthogonal_layers(const Graph& g, int r, const std::vector<VertexSet>& sets) {
    if (r < 2) throw parameter_error("orthogonal_layers: need r >= 2 layers");
    if (int(sets.size()) != r)
        throw parameter_error("orthogonal_layers: expected exactly r sets, one per layer");
    for (const auto& s : sets)
        if (s.ambient() != g.order()) throw parameter_error("orthogonal_layers: set ambient mismatch");

    OrthogonalLayersReport out;
    auto [p, idx] = cartesian_product(g, make_family(FamilySpec::complete(r)));
    out.index = idx;
    VertexSet u(p.order());
    for (int i = 0; i < r; ++i) u |= layer_image(idx, FactorSide::left, sets[i], i);
    const auto dm_p = all_pairs_distances(p);
    out.union_witness = find_collinear_triple(dm_p, u);
    out.union_gp = !out.union_witness.has_value();

    const auto dm_g = all_pairs_distances(g);
    out.sets_orthogonal = true;
    for (int i = 0; i < r && out.sets_orthogonal; ++i) {
        if (auto w = find_collinear_triple(dm_g, sets[i])) {
            out.failing_set = i;
            out.failing_set_witness = w;
            out.sets_orthogonal = false;
        }
    }
    for (int i = 0; i < r && out.sets_orthogonal; ++i)
        for (int j = i + 1; j < r && out.sets_orthogonal; ++j) {
            if (sets[i].empty() || sets[j].empty()) continue;
            if (auto v = find_orthogonality_violation(dm_g, sets[i], sets[j])) {
                out.violating_pair = {i, j};
                out.pair_witness = v;
                out.sets_orthogonal = false;
            }
        }

    out.agree = out.union_gp == out.sets_orthogonal;
    return out;
}

} // namespace gpos
