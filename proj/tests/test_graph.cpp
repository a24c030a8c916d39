#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gpos/distance.hpp"
#include "gpos/enumerate.hpp"
#include "gpos/families.hpp"
#include "gpos/graph.hpp"
#include "gpos/graph6.hpp"
#include "gpos/product.hpp"
#include "gpos/structure.hpp"

using namespace gpos;

namespace {

// Reference graph6 decoder, written straight off the format description and
// kept independent of the library implementation: returns n plus the upper
// triangle bits in column order.
std::pair<int, std::vector<int>> reference_g6_decode(const std::string& line) {
    REQUIRE(!line.empty());
    const int n = line[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < line.size(); ++i) {
        const int x = line[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
    }
    bits.resize(n * (n - 1) / 2);
    return {n, bits};
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < a.order() && match; ++i)
            for (int j = i + 1; j < a.order() && match; ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

void check_symmetric_irreflexive(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

} // namespace

TEST_CASE("families: constructions and parameter checks") {
    const Graph petersen = make_family(FamilySpec::kneser2(5));
    CHECK(petersen.order() == 10);
    CHECK(petersen.size() == 15);
    for (int u = 0; u < 10; ++u) CHECK(petersen.degree(u) == 3);

    const Graph w6 = make_family(FamilySpec::wheel(6));
    CHECK(w6.order() == 6);
    CHECK(w6.size() == 10);
    CHECK(w6.degree(5) == 5); // hub

    const Graph octa = make_family(FamilySpec::multipartite({2, 2, 2}));
    CHECK(octa.order() == 6);
    CHECK(octa.size() == 12);

    const Graph lk4 = make_family(FamilySpec::line_of_complete(4));
    CHECK(lk4.order() == 6);
    CHECK(lk4.size() == 12); // each edge of K4 meets four others

    const Graph km = make_family(FamilySpec::complete_minus_edge(4));
    CHECK(km.size() == 5);
    CHECK_FALSE(km.adjacent(0, 1));

    CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::wheel(3)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::kneser2(4)), parameter_error);
    CHECK_THROWS_AS(make_family(FamilySpec::path(0)), parameter_error);

    for (const auto& g : {petersen, w6, octa, lk4, km}) check_symmetric_irreflexive(g);
}

TEST_CASE("family spec parsing") {
    CHECK(make_family(parse_family_spec("petersen")) == make_family(FamilySpec::kneser2(5)));
    CHECK(make_family(parse_family_spec("cycle(5)")) == make_family(FamilySpec::cycle(5)));
    CHECK(make_family(parse_family_spec("multipartite(3,2,2)")) ==
          make_family(FamilySpec::multipartite({3, 2, 2})));
    CHECK_THROWS_AS(parse_family_spec("cycle(5"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("frob(3)"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("cycle(a)"), parse_error);
}

TEST_CASE("from_edge_list") {
    const Graph p3 = from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3 == make_family(FamilySpec::path(3)));

    const Graph k2 = from_edge_list(2, {{0, 1}, {1, 0}});
    CHECK(k2.size() == 1);

    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), parse_error);
    CHECK_THROWS_AS(from_edge_list(2, {{1, 1}}), parse_error);
}

TEST_CASE("edge list text format") {
    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    CHECK(read_edge_list(in) == make_family(FamilySpec::path(4)));

    std::istringstream bad("4 3\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), parse_error);
}

TEST_CASE("graph6: frozen values and reference cross-check") {
    CHECK(parse_graph6("A_") == make_family(FamilySpec::complete(2)));
    CHECK(parse_graph6("Bw") == make_family(FamilySpec::complete(3)));
    CHECK(parse_graph6(">>graph6<<A_") == make_family(FamilySpec::complete(2)));

    CHECK_THROWS_AS(parse_graph6("A"), parse_error);    // truncated payload
    CHECK_THROWS_AS(parse_graph6("~??"), parse_error);  // long form
    CHECK_THROWS_AS(parse_graph6("B!"), parse_error);   // bad payload byte
    CHECK_THROWS_AS(parse_graph6(""), parse_error);

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + int(rng() % 62);
        const Graph g = random_graph(n, 0.4, rng);
        const std::string enc = encode_graph6(g);
        // round trip
        CHECK(parse_graph6(enc) == g);
        CHECK(encode_graph6(parse_graph6(enc)) == enc);
        // independent decode agrees bit by bit
        auto [rn, bits] = reference_g6_decode(enc);
        CHECK(rn == n);
        int k = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row) CHECK(bits[k++] == (g.adjacent(row, col) ? 1 : 0));
    }

    // every line of an encoded corpus round-trips bit-exactly
    for (const auto& g : enumerate_connected_graphs(5)) {
        const std::string line = encode_graph6(g);
        CHECK(encode_graph6(parse_graph6(line)) == line);
    }

    Graph big(63);
    CHECK_THROWS_AS(encode_graph6(big), capacity_error);
}

TEST_CASE("graph6 stream reading") {
    std::istringstream in(">>graph6<<A_\n\nBw\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].order() == 2);
    CHECK(graphs[1].order() == 3);
}

TEST_CASE("cartesian product: shape and distance law") {
    const Graph k2 = make_family(FamilySpec::complete(2));
    auto [c4, idx4] = cartesian_product(k2, k2);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (int u = 0; u < 4; ++u) CHECK(c4.degree(u) == 2);

    auto [grid, idxg] = cartesian_product(make_family(FamilySpec::path(2)), make_family(FamilySpec::path(3)));
    CHECK(grid.order() == 6);
    CHECK(grid.size() == 7);

    // d((u,v),(u',v')) = d_G(u,u') + d_H(v,v') checked exhaustively
    const Graph c5 = make_family(FamilySpec::cycle(5));
    auto [p, idx] = cartesian_product(c5, k2);
    const auto dp = all_pairs_distances(p);
    const auto dg = all_pairs_distances(c5);
    const auto dh = all_pairs_distances(k2);
    for (int a = 0; a < p.order(); ++a)
        for (int b = 0; b < p.order(); ++b) {
            const auto [ga, ha] = idx.decode(a);
            const auto [gb, hb] = idx.decode(b);
            CHECK(dp.raw(a, b) == dg.raw(ga, gb) + dh.raw(ha, hb));
        }

    // index bijection
    for (int q = 0; q < idx.nG * idx.nH; ++q) {
        const auto [a, b] = idx.decode(q);
        CHECK(idx.encode(a, b) == q);
    }

    CHECK_THROWS_AS(cartesian_product(Graph(0), k2), parameter_error);
}

TEST_CASE("product distance law across enumerated factor pairs") {
    std::vector<Graph> factors;
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) factors.push_back(g);
    factors.push_back(make_family(FamilySpec::cycle(6)));
    factors.push_back(make_family(FamilySpec::wheel(6)));
    for (const auto& g : factors)
        for (const auto& h : factors) {
            auto [p, idx] = cartesian_product(g, h);
            const auto dp = all_pairs_distances(p);
            const auto dg = all_pairs_distances(g);
            const auto dh = all_pairs_distances(h);
            for (int a = 0; a < p.order(); ++a)
                for (int b = 0; b < p.order(); ++b)
                    CHECK(dp.raw(a, b) == dg.raw(idx.left(a), idx.left(b)) + dh.raw(idx.right(a), idx.right(b)));
        }
}

TEST_CASE("distances: paths, Petersen diameter, unreachable sentinel") {
    const auto dp4 = all_pairs_distances(make_family(FamilySpec::path(4)));
    CHECK(dp4.raw(0, 3) == 3);
    CHECK(dp4.raw(0, 0) == 0);

    const Graph petersen = make_family(FamilySpec::kneser2(5));
    const auto dpet = all_pairs_distances(petersen);
    CHECK(diameter(petersen, dpet) == 2);

    const Graph two_k2 = from_edge_list(4, {{0, 1}, {2, 3}});
    const auto d2 = all_pairs_distances(two_k2);
    CHECK(d2.raw(0, 2) == DistanceMatrix::UNREACHABLE);
    CHECK_FALSE(d2.reachable(0, 2));
    CHECK_THROWS_AS(d2.at(0, 2), contract_violation);

    // symmetry, zero diagonal, adjacency = distance one, triangle inequality
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(8, 0.35, rng);
        const auto dm = all_pairs_distances(g);
        for (int u = 0; u < 8; ++u) {
            CHECK(dm.raw(u, u) == 0);
            for (int v = 0; v < 8; ++v) {
                CHECK(dm.raw(u, v) == dm.raw(v, u));
                CHECK((dm.raw(u, v) == 1) == g.adjacent(u, v));
                for (int w = 0; w < 8; ++w)
                    if (dm.reachable(u, v) && dm.reachable(v, w))
                        CHECK(dm.raw(u, w) <= dm.raw(u, v) + dm.raw(v, w));
            }
        }
    }
}

TEST_CASE("structural report") {
    // paw: triangle 0,1,2 with pendant 3 on vertex 2
    const Graph paw = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const auto rp = structural_report(paw);
    CHECK(rp.connected);
    CHECK(rp.simplicial.test(3));
    CHECK(rp.simplicial.test(0));
    CHECK(rp.chordal);

    const auto rc4 = structural_report(make_family(FamilySpec::cycle(4)));
    CHECK(rc4.open_twin_pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(rc4.closed_twin_pairs.empty());
    CHECK_FALSE(rc4.chordal);
    CHECK(rc4.cograph);
    CHECK(rc4.component_diameters == std::vector<int>{2});

    const auto rp4 = structural_report(make_family(FamilySpec::path(4)));
    CHECK_FALSE(rp4.cograph);
    CHECK(rp4.chordal);

    const auto rk4 = structural_report(make_family(FamilySpec::complete(4)));
    CHECK(rk4.closed_twin_pairs.size() == 6);

    const auto r2 = structural_report(from_edge_list(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(r2.connected);
    CHECK(r2.component_list.size() == 2);
    CHECK(r2.component_diameters == std::vector<int>{1, 1});

    // every reported simplicial vertex really has a clique neighbourhood
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(7, 0.4, rng);
        const auto rep = structural_report(g);
        rep.simplicial.for_each([&](int u) {
            g.neighbours(u).for_each([&](int a) {
                g.neighbours(u).for_each([&](int b) {
                    if (a < b) CHECK(g.adjacent(a, b));
                });
            });
        });
    }
}

TEST_CASE("maximal cliques") {
    const auto k4_cliques = maximal_cliques(make_family(FamilySpec::complete(4)));
    REQUIRE(k4_cliques.size() == 1);
    CHECK(k4_cliques[0].count() == 4);

    const auto c5_cliques = maximal_cliques(make_family(FamilySpec::cycle(5)));
    CHECK(c5_cliques.size() == 5);
    for (const auto& c : c5_cliques) CHECK(c.count() == 2);

    const auto pet_cliques = maximal_cliques(make_family(FamilySpec::kneser2(5)));
    CHECK(pet_cliques.size() == 15);
    for (const auto& c : pet_cliques) CHECK(c.count() == 2);

    // maximality and clique property on random graphs
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(8, 0.5, rng);
        for (const auto& c : maximal_cliques(g)) {
            CHECK(is_clique(g, c));
            for (int u = 0; u < 8; ++u) {
                if (c.test(u)) continue;
                VertexSet bigger = c;
                bigger.set(u);
                CHECK_FALSE(is_clique(g, bigger));
            }
        }
    }
}

TEST_CASE("induced subgraph") {
    const Graph c5 = make_family(FamilySpec::cycle(5));
    const auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
    CHECK(sub.graph == make_family(FamilySpec::path(3)));
    CHECK(sub.old_of_new == std::vector<int>{0, 1, 2});

    const auto k3 = induced_subgraph(make_family(FamilySpec::complete(4)), VertexSet(4, {0, 2, 3}));
    CHECK(k3.graph == make_family(FamilySpec::complete(3)));

    // one 3K2 set of the Petersen graph induces a perfect matching
    const Graph petersen = make_family(FamilySpec::kneser2(5));
    const auto m = induced_subgraph(petersen, VertexSet(10, {0, 1, 2, 4, 5, 7}));
    CHECK(m.graph.order() == 6);
    CHECK(m.graph.size() == 3);
    for (int u = 0; u < 6; ++u) CHECK(m.graph.degree(u) == 1);

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(5)), parameter_error);
}

TEST_CASE("enumerate connected graphs: counts against independent oracle") {
    // oracle: all labelled connected graphs, deduplicated by pairwise
    // isomorphism testing (permutation search), independent of canonical codes
    for (int n = 2; n <= 5; ++n) {
        std::vector<Graph> classes;
        const int m = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            Graph g(n);
            int k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if ((mask >> k) & 1) g.add_edge(i, j);
                    ++k;
                }
            if (!is_connected(g)) continue;
            bool fresh = true;
            for (const auto& rep : classes)
                if (graphs_isomorphic(g, rep)) {
                    fresh = false;
                    break;
                }
            if (fresh) classes.push_back(g);
        }
        const auto enumerated = enumerate_connected_graphs(n);
        CHECK(enumerated.size() == classes.size());
    }

    CHECK(enumerate_connected_graphs(3).size() == 2);
    CHECK(enumerate_connected_graphs(4).size() == 6);
    CHECK(enumerate_connected_graphs(5).size() == 21);
    CHECK_THROWS_AS(enumerate_connected_graphs(7), capacity_error);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), parameter_error);

    // stream representatives are connected, canonical (fixed point), distinct
    const auto sixes = enumerate_connected_graphs(6);
    CHECK(sixes.size() == 112);
    std::vector<std::uint64_t> codes;
    for (const auto& g : sixes) {
        CHECK(is_connected(g));
        codes.push_back(canonical_code(g));
        check_symmetric_irreflexive(g);
    }
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("order-seven stream via vertex extension") {
    const auto sevens = connected_graphs_exactly(7);
    CHECK(sevens.size() == 853);
    for (std::size_t i = 0; i + 1 < sevens.size(); ++i)
        CHECK(canonical_code(sevens[i]) < canonical_code(sevens[i + 1]));
    for (const auto& g : sevens) CHECK(is_connected(g));

    // the extension generator agrees with direct enumeration at heights it shares
    CHECK(connected_graphs_exactly(5).size() == enumerate_connected_graphs(5).size());
    CHECK(connected_graphs_upto(4).size() == 1 + 1 + 2 + 6);
}
