#pragma once

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/enumerate.hpp"
#include "gpos/graph.hpp"
#include "gpos/graph6.hpp"
#include "gpos/position.hpp"
#include "gpos/product.hpp"
#include "gpos/search.hpp"
#include "gpos/structure.hpp"
#include "gpos/terminal.hpp"

namespace gpos {

namespace detail {

/// Runs fn(i) for i in [0, count) on `jobs` workers. Results must be written
/// to pre-sized slots indexed by i, so output order never depends on jobs.
template <typename Fn>
void parallel_indexed(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<int>(jobs, int(count));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace detail

struct ScanOptions {
    int jobs = 1;
    SearchLimits limits;
};

/// One ordered factor pair of the product lower-bound scan.
struct PairScanRecord {
    std::string left_id;  // graph6
    std::string right_id;
    InvariantValue left_lower;
    InvariantValue right_lower;
    InvariantValue product_lower;

    bool inconclusive() const {
        return !left_lower.is_finite() || !right_lower.is_finite() || !product_lower.is_finite();
    }
    /// Product lower gp number fell below the smaller factor value.
    bool violation() const {
        return !inconclusive() &&
               product_lower.value < std::min(left_lower.value, right_lower.value);
    }
};

struct PairScanResult {
    std::vector<PairScanRecord> records;
    int violations = 0;
    int inconclusive = 0;
};

/// Checks gp-(G box H) >= min(gp-(G), gp-(H)) over every ordered pair from
/// the source list (connected graphs only).
inline PairScanResult scan_pairs_conjecture_over(const std::vector<Graph>& source,
                                                 const ScanOptions& opts = {}) {
    std::vector<const Graph*> graphs;
    for (const auto& g : source)
        if (g.order() >= 1 && is_connected(g)) graphs.push_back(&g);

    std::vector<InvariantValue> lowers(graphs.size());
    detail::parallel_indexed(graphs.size(), opts.jobs, [&](std::size_t i) {
        lowers[i] = lower_gp_number(*graphs[i], opts.limits);
    });

    PairScanResult out;
    out.records.resize(graphs.size() * graphs.size());
    detail::parallel_indexed(out.records.size(), opts.jobs, [&](std::size_t t) {
        const std::size_t i = t / graphs.size(), j = t % graphs.size();
        PairScanRecord rec;
        rec.left_id = encode_graph6(*graphs[i]);
        rec.right_id = encode_graph6(*graphs[j]);
        rec.left_lower = lowers[i];
        rec.right_lower = lowers[j];
        rec.product_lower = lower_gp_number(cartesian_product(*graphs[i], *graphs[j]).first, opts.limits);
        out.records[t] = rec;
    });
    for (const auto& r : out.records) {
        if (r.violation()) ++out.violations;
        if (r.inconclusive()) ++out.inconclusive;
    }
    return out;
}

/// Enumeration-backed variant over all connected classes of order 1..max_order.
inline PairScanResult scan_pairs_conjecture(int max_order, const ScanOptions& opts = {}) {
    if (max_order < 1) throw parameter_error("scan_pairs_conjecture: max_order must be >= 1");
    if (max_order > 5)
        throw parameter_error("scan_pairs_conjecture: enumeration capped at order 5; ingest a graph6 corpus instead");
    return scan_pairs_conjecture_over(connected_graphs_upto(max_order), opts);
}

/// One graph of the terminal-existence scan. When a counterexample appears,
/// the structural facts a minimal one would have to satisfy are recorded.
struct ExistenceScanRecord {
    std::string graph_id; // graph6
    InvariantValue first_terminal;

    bool counterexample = false; // no terminal set at all
    bool inconclusive = false;

    // filled for counterexamples only
    bool has_simplicial_vertex = false;
    bool has_clique_cutset = false;
    bool has_twins = false;
};

struct ExistenceScanResult {
    std::vector<ExistenceScanRecord> records;
    int counterexamples = 0;
    int inconclusive = 0;
};

inline ExistenceScanResult scan_terminal_existence_over(const std::vector<Graph>& source,
                                                        const ScanOptions& opts = {}) {
    std::vector<const Graph*> graphs;
    for (const auto& g : source)
        if (g.order() >= 1 && is_connected(g)) graphs.push_back(&g);

    ExistenceScanResult out;
    out.records.resize(graphs.size());
    detail::parallel_indexed(graphs.size(), opts.jobs, [&](std::size_t i) {
        const Graph& g = *graphs[i];
        ExistenceScanRecord rec;
        rec.graph_id = encode_graph6(g);
        rec.first_terminal = first_terminal_set(g, opts.limits);
        rec.inconclusive = rec.first_terminal.kind == InvariantValue::Kind::inconclusive;
        rec.counterexample = rec.first_terminal.kind == InvariantValue::Kind::infinite;
        if (rec.counterexample) {
            rec.has_simplicial_vertex = false;
            for (int u = 0; u < g.order(); ++u)
                if (is_simplicial(g, u)) rec.has_simplicial_vertex = true;
            rec.has_clique_cutset = g.order() <= 20 && find_clique_cutset(g).has_value();
            rec.has_twins = find_twin_pair(g).has_value();
        }
        out.records[i] = rec;
    });
    for (const auto& r : out.records) {
        if (r.counterexample) ++out.counterexamples;
        if (r.inconclusive) ++out.inconclusive;
    }
    return out;
}

/// Enumeration-backed variant over all connected classes of order 1..max_order
/// (order 7 comes from the vertex-extension stream).
inline ExistenceScanResult scan_terminal_existence(int max_order, const ScanOptions& opts = {}) {
    if (max_order < 1) throw parameter_error("scan_terminal_existence: max_order must be >= 1");
    if (max_order > 7)
        throw parameter_error("scan_terminal_existence: enumeration capped at order 7; ingest a graph6 corpus instead");
    return scan_terminal_existence_over(connected_graphs_upto(max_order), opts);
}

} // namespace gpos
