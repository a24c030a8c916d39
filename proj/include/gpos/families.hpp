#pragma once

#include <string>
#include <vector>

#include "gpos/core.hpp"
#include "gpos/graph.hpp"

namespace gpos {

/// Named graph family with parameters.
///
/// Vertex numbering conventions (fixed so witnesses are comparable across
/// runs):
///  - Path(n), Cycle(n): vertices 0..n-1 in path/cycle order.
///  - Wheel(n): rim cycle 0..n-2, hub n-1.
///  - CompleteMultipartite(parts): parts occupy consecutive index blocks in
///    the order given.
///  - Kneser2(n): vertices are the 2-subsets of {0..n-1} in lexicographic
///    order ({0,1},{0,2},...,{0,n-1},{1,2},...); adjacent iff disjoint.
///  - LineOfComplete(n): vertices are the edges of K_n in the same
///    lexicographic order; adjacent iff the edges share an endpoint.
///  - CompleteMinusEdge(n): K_n with the edge (0,1) removed.
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Complete,
        Wheel,
        CompleteMultipartite,
        Kneser2,
        LineOfComplete,
        CompleteMinusEdge,
    };

    Kind kind;
    std::vector<int> params;

    static FamilySpec path(int n) { return {Kind::Path, {n}}; }
    static FamilySpec cycle(int n) { return {Kind::Cycle, {n}}; }
    static FamilySpec complete(int n) { return {Kind::Complete, {n}}; }
    static FamilySpec wheel(int n) { return {Kind::Wheel, {n}}; }
    static FamilySpec multipartite(std::vector<int> parts) { return {Kind::CompleteMultipartite, std::move(parts)}; }
    static FamilySpec kneser2(int n) { return {Kind::Kneser2, {n}}; }
    static FamilySpec line_of_complete(int n) { return {Kind::LineOfComplete, {n}}; }
    static FamilySpec complete_minus_edge(int n) { return {Kind::CompleteMinusEdge, {n}}; }
};

namespace detail {

/// 2-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::pair<int, int>> lex_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ps.emplace_back(a, b);
    return ps;
}

} // namespace detail

inline Graph make_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    const auto& p = spec.params;
    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw parameter_error(msg);
    };
    switch (spec.kind) {
    case Kind::Path: {
        need(p.size() == 1 && p[0] >= 1, "path(n) requires n >= 1");
        Graph g(p[0]);
        for (int i = 0; i + 1 < p[0]; ++i) g.add_edge(i, i + 1);
        return g;
    }
    case Kind::Cycle: {
        need(p.size() == 1 && p[0] >= 3, "cycle(n) requires n >= 3");
        Graph g(p[0]);
        for (int i = 0; i < p[0]; ++i) g.add_edge(i, (i + 1) % p[0]);
        return g;
    }
    case Kind::Complete: {
        need(p.size() == 1 && p[0] >= 1, "complete(n) requires n >= 1");
        Graph g(p[0]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = i + 1; j < p[0]; ++j) g.add_edge(i, j);
        return g;
    }
    case Kind::Wheel: {
        // W_n = C_{n-1} joined with one hub vertex.
        need(p.size() == 1 && p[0] >= 4, "wheel(n) requires n >= 4");
        const int n = p[0];
        Graph g(n);
        for (int i = 0; i < n - 1; ++i) {
            g.add_edge(i, (i + 1) % (n - 1));
            g.add_edge(i, n - 1);
        }
        return g;
    }
    case Kind::CompleteMultipartite: {
        need(!p.empty(), "multipartite(parts) requires at least one part");
        int n = 0;
        for (int s : p) {
            need(s >= 1, "multipartite parts must be >= 1");
            n += s;
        }
        Graph g(n);
        std::vector<int> part_of(n);
        int at = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            for (int i = 0; i < p[k]; ++i) part_of[at++] = int(k);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part_of[u] != part_of[v]) g.add_edge(u, v);
        return g;
    }
    case Kind::Kneser2: {
        need(p.size() == 1 && p[0] >= 5, "kneser2(n) requires n >= 5 (connectivity)");
        const auto pairs = detail::lex_pairs(p[0]);
        Graph g(int(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                const auto [a, b] = pairs[i];
                const auto [c, d] = pairs[j];
                if (a != c && a != d && b != c && b != d) g.add_edge(int(i), int(j));
            }
        return g;
    }
    case Kind::LineOfComplete: {
        need(p.size() == 1 && p[0] >= 2, "linecomplete(n) requires n >= 2");
        const auto pairs = detail::lex_pairs(p[0]);
        Graph g(int(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                const auto [a, b] = pairs[i];
                const auto [c, d] = pairs[j];
                if (a == c || a == d || b == c || b == d) g.add_edge(int(i), int(j));
            }
        return g;
    }
    case Kind::CompleteMinusEdge: {
        need(p.size() == 1 && p[0] >= 2, "completeminus(n) requires n >= 2");
        Graph g(p[0]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = i + 1; j < p[0]; ++j)
                if (!(i == 0 && j == 1)) g.add_edge(i, j);
        return g;
    }
    }
    throw parameter_error("make_family: unknown family kind");
}

/// Parses "name(a,b,...)" or a bare alias. Accepted names: path, cycle,
/// complete, wheel, multipartite, kneser2, linecomplete, completeminus,
/// and the alias "petersen" for kneser2(5).
inline FamilySpec parse_family_spec(const std::string& text) {
    auto fail = [&]() -> FamilySpec {
        throw parse_error("bad family spec: \"" + text + "\"");
    };
    std::string name = text;
    std::vector<int> args;
    const auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')') return fail();
        name = text.substr(0, open);
        std::string body = text.substr(open + 1, text.size() - open - 2);
        std::string cur;
        auto flush = [&]() {
            if (cur.empty()) throw parse_error("bad family spec: \"" + text + "\"");
            args.push_back(std::stoi(cur));
            cur.clear();
        };
        for (char c : body) {
            if (c == ',') flush();
            else if (c >= '0' && c <= '9') cur += c;
            else return fail();
        }
        if (!cur.empty()) flush();
        else if (!body.empty()) return fail();
    }
    auto one = [&](FamilySpec::Kind k) -> FamilySpec {
        if (args.size() != 1) return fail();
        return {k, args};
    };
    if (name == "petersen" && args.empty()) return FamilySpec::kneser2(5);
    if (name == "path") return one(FamilySpec::Kind::Path);
    if (name == "cycle") return one(FamilySpec::Kind::Cycle);
    if (name == "complete") return one(FamilySpec::Kind::Complete);
    if (name == "wheel") return one(FamilySpec::Kind::Wheel);
    if (name == "kneser2") return one(FamilySpec::Kind::Kneser2);
    if (name == "linecomplete") return one(FamilySpec::Kind::LineOfComplete);
    if (name == "completeminus") return one(FamilySpec::Kind::CompleteMinusEdge);
    if (name == "multipartite") {
        if (args.empty()) return fail();
        return FamilySpec::multipartite(args);
    }
    return fail();
}

} // namespace gpos
