#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "gpos/core.hpp"

namespace gpos {

/// Caps for exact searches. Hitting a cap never yields a wrong answer; the
/// result is reported as inconclusive with the cap that was hit.
struct SearchLimits {
    std::optional<int> max_cardinality;
    std::uint64_t node_budget = UINT64_C(200'000'000);
    std::optional<std::chrono::milliseconds> time_budget;

    struct Deadline {
        std::optional<std::chrono::steady_clock::time_point> at;
        bool passed() const {
            return at && std::chrono::steady_clock::now() > *at;
        }
    };

    Deadline start_deadline() const {
        if (!time_budget) return {};
        return {std::chrono::steady_clock::now() + *time_budget};
    }
};

enum class SearchStatus { exact, capped };

/// Value of a counting invariant: a finite count with witness, provably no
/// witness at all (infinite), or an aborted search (inconclusive).
struct InvariantValue {
    enum class Kind { finite, infinite, inconclusive };

    Kind kind = Kind::inconclusive;
    int value = 0;
    VertexSet witness;
    std::string cap; // which cap was hit, when inconclusive

    static InvariantValue finite(int v, VertexSet w) {
        return {Kind::finite, v, std::move(w), {}};
    }
    static InvariantValue infinite() { return {Kind::infinite, 0, {}, {}}; }
    static InvariantValue inconclusive(std::string cap) {
        return {Kind::inconclusive, 0, {}, std::move(cap)};
    }

    bool is_finite() const { return kind == Kind::finite; }

    std::string value_string() const {
        switch (kind) {
        case Kind::finite: return std::to_string(value);
        case Kind::infinite: return "INFINITE";
        case Kind::inconclusive: return "INCONCLUSIVE";
        }
        return "?";
    }
};

/// Ascending colexicographic stream of k-subsets of {0..n-1}.
class Combinations {
public:
    Combinations(int n, int k) : n_(n), k_(k), c_(k), done_(k > n || k < 0) {
        for (int i = 0; i < k; ++i) c_[i] = i;
    }

    bool done() const { return done_; }
    const std::vector<int>& current() const { return c_; }

    void advance() {
        if (done_) return;
        for (int i = 0; i < k_; ++i) {
            const int bound = (i + 1 < k_) ? c_[i + 1] : n_;
            if (c_[i] + 1 < bound) {
                ++c_[i];
                for (int j = 0; j < i; ++j) c_[j] = j;
                return;
            }
        }
        done_ = true;
    }

private:
    int n_, k_;
    std::vector<int> c_;
    bool done_;
};

} // namespace gpos
