#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpos {

// Invalid argument to an operation (bad family parameter, u == v line, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (graph6 line, edge-list file).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a hard size limit of the representation or algorithm.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition or internal invariant was violated.
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// construct_structured was handed a graph outside every supported class.
struct unsupported_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset of vertices 0..n-1 stored as a word array. The ambient size is
/// fixed at construction; all set operations require equal ambient sizes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int ambient)
        : n_(ambient), words_((ambient + 63) / 64, 0) {
        if (ambient < 0) throw parameter_error("VertexSet: negative ambient size");
    }

    VertexSet(int ambient, std::initializer_list<int> vertices) : VertexSet(ambient) {
        for (int v : vertices) set(v);
    }

    int ambient() const { return n_; }

    bool test(int v) const {
        check_range(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_range(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_range(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    /// Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// Lowest set bit strictly greater than v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = std::size_t(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return int(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Removes every element of o from this set.
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Colexicographic order: compare characteristic vectors from the top.
    /// For equal cardinalities this is the standard colex order on subsets.
    bool colex_less(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VertexSet full(int ambient) {
        VertexSet s(ambient);
        for (int i = 0; i < ambient; ++i) s.set(i);
        return s;
    }

    static VertexSet of(int ambient, const std::vector<int>& vertices) {
        VertexSet s(ambient);
        for (int v : vertices) s.set(v);
        return s;
    }

    /// "{0, 1, 3}"
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) out += ", ";
            out += std::to_string(v);
            first = false;
        });
        out += "}";
        return out;
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= n_) throw parameter_error("VertexSet: vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_) throw parameter_error("VertexSet: mismatched ambient sizes");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gpos
