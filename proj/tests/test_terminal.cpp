#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpos/enumerate.hpp"
#include "gpos/families.hpp"
#include "gpos/terminal.hpp"

using namespace gpos;

namespace {

// Enumerates every terminal set of g (maximal gp sets passing the terminal
// filter); fine for the small orders used here.
std::vector<VertexSet> all_terminal_sets(const Graph& g) {
    const auto dm = all_pairs_distances(g);
    std::vector<VertexSet> out;
    for_each_maximal_gp_set(dm, {}, [&](const VertexSet& s) {
        if (is_terminal_set(dm, s)) out.push_back(s);
        return true;
    });
    return out;
}

bool induces_cluster(const Graph& g, const VertexSet& s) {
    // disjoint cliques with no edges between: no induced path on 3 vertices
    const auto m = s.to_vector();
    for (int a : m)
        for (int b : m)
            for (int c : m) {
                if (a >= b || a == c || b == c) continue;
                if (g.adjacent(a, c) && g.adjacent(b, c) && !g.adjacent(a, b)) return false;
            }
    return true;
}

} // namespace

TEST_CASE("terminal vertices and bad paths") {
    const Graph c5 = make_family(FamilySpec::cycle(5));
    const auto dm = all_pairs_distances(c5);
    const auto w = find_bad_path(dm, VertexSet(5, {0, 1}), 2);
    REQUIRE(w.has_value());
    CHECK(w->endpoint == 2);
    CHECK(w->via == 1);
    CHECK(w->target == 0);

    // no vertex of the 2-part of K_{2,3} is terminal for the 3-part
    const Graph k23 = make_family(FamilySpec::multipartite({2, 3}));
    const auto dm23 = all_pairs_distances(k23);
    const VertexSet part3(5, {2, 3, 4});
    CHECK_FALSE(is_terminal_vertex(dm23, part3, 0));
    CHECK_FALSE(is_terminal_vertex(dm23, part3, 1));

    // star centre against two leaves: every path from the centre has length one
    const Graph star = make_family(FamilySpec::multipartite({2, 1}));
    const auto dms = all_pairs_distances(star);
    CHECK_FALSE(is_terminal_vertex(dms, VertexSet(3, {0, 1}), 2));

    CHECK_THROWS_AS(find_bad_path(dm, VertexSet(5, {0, 1}), 1), parameter_error);
}

TEST_CASE("terminal set checks") {
    const Graph c5 = make_family(FamilySpec::cycle(5));
    const auto dm5 = all_pairs_distances(c5);
    CHECK(is_terminal_set(dm5, VertexSet(5, {0, 1, 3})));

    const Graph k5 = make_family(FamilySpec::complete(5));
    CHECK(is_terminal_set(all_pairs_distances(k5), VertexSet::full(5)));

    const Graph k23 = make_family(FamilySpec::multipartite({2, 3}));
    const auto c = check_terminal_set(all_pairs_distances(k23), VertexSet(5, {2, 3, 4}));
    CHECK(c.result == TerminalCheck::Result::vertex_not_terminal);
    CHECK(c.vertex == 0);

    const Graph p4 = make_family(FamilySpec::path(4));
    const auto dm4 = all_pairs_distances(p4);
    const auto bad = check_terminal_set(dm4, VertexSet(4, {0, 1, 2}));
    CHECK(bad.result == TerminalCheck::Result::not_gp);
    const auto open = check_terminal_set(dm4, VertexSet(4, {0}));
    CHECK(open.result == TerminalCheck::Result::not_maximal);
    // {0,3} in P4 is maximal gp, but the middle vertices are not terminal
    const auto mid = check_terminal_set(dm4, VertexSet(4, {0, 3}));
    CHECK(mid.result == TerminalCheck::Result::vertex_not_terminal);
}

TEST_CASE("terminal numbers on families") {
    const auto pet = terminal_numbers(make_family(FamilySpec::kneser2(5)));
    CHECK(pet.tp.value == 6);
    CHECK(pet.tp_minus.value == 6);

    const auto k7 = terminal_numbers(make_family(FamilySpec::kneser2(7)));
    CHECK(k7.tp.value == 3);
    CHECK(k7.tp_minus.value == 3);

    const auto m322 = terminal_numbers(make_family(FamilySpec::multipartite({3, 2, 2})));
    CHECK(m322.tp.value == 3);
    CHECK(m322.tp_minus.value == 3);

    const auto p4 = terminal_numbers(make_family(FamilySpec::path(4)));
    CHECK(p4.tp.value == 2);
    CHECK(p4.tp_minus.value == 2);

    // disconnected: union of component terminal sets
    const auto two_k3 = terminal_numbers(from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
    CHECK(two_k3.tp.value == 6);
    CHECK(two_k3.tp_minus.value == 6);

    // clique minus an edge: terminal sets are the two big cliques, one short
    // of the order, even though the deleted pair is a universal line
    const auto km4 = terminal_numbers(make_family(FamilySpec::complete_minus_edge(4)));
    CHECK(km4.tp.value == 3);
    CHECK(km4.tp_minus.value == 3);
    const auto km5 = terminal_numbers(make_family(FamilySpec::complete_minus_edge(5)));
    CHECK(km5.tp.value == 4);
    CHECK(km5.tp_minus.value == 4);
    CHECK(lower_gp_number(make_family(FamilySpec::complete_minus_edge(4))).value == 2);

    // witnesses really are terminal sets
    const Graph kn6 = make_family(FamilySpec::kneser2(6));
    const auto t6 = terminal_numbers(kn6);
    const auto dm6 = all_pairs_distances(kn6);
    REQUIRE(t6.tp.is_finite());
    CHECK(t6.tp.value == 3);
    CHECK(is_terminal_set(dm6, t6.tp.witness));
    CHECK(is_terminal_set(dm6, t6.tp_minus.witness));

    SearchLimits tiny;
    tiny.node_budget = 5;
    CHECK(terminal_numbers(make_family(FamilySpec::kneser2(6)), tiny).tp.kind ==
          InvariantValue::Kind::inconclusive);
}

TEST_CASE("tp >= tp- >= gp- on connected graphs of order <= 7") {
    int finite = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs_exactly(n)) {
            const auto t = terminal_numbers(g);
            const auto lo = lower_gp_number(g);
            REQUIRE(lo.is_finite());
            if (!t.tp.is_finite()) continue;
            ++finite;
            CHECK(t.tp.value >= t.tp_minus.value);
            CHECK(t.tp_minus.value >= lo.value);
        }
    CHECK(finite > 900); // nearly every small graph has a terminal set
}

TEST_CASE("diameter-two constructions") {
    const auto k4 = construct_diam2(make_family(FamilySpec::complete(4)));
    CHECK(k4.set == VertexSet::full(4));
    CHECK(k4.trace.stages.size() == 1);

    const auto c5 = construct_diam2(make_family(FamilySpec::cycle(5)));
    CHECK(c5.set == VertexSet(5, {0, 1, 3}));
    REQUIRE(c5.trace.stages.size() == 2);
    CHECK(c5.trace.stages[0].clique == VertexSet(5, {0, 1}));
    CHECK(c5.trace.stages[1].clique == VertexSet(5, {3}));
    CHECK(c5.trace.to_string() == "W_1 = {0, 1}\nW_2 = {3}\n");

    const Graph petersen = make_family(FamilySpec::kneser2(5));
    const auto pet = construct_diam2(petersen);
    CHECK(pet.set.count() == 6);
    CHECK(is_terminal_set(all_pairs_distances(petersen), pet.set));
    const auto sub = induced_subgraph(petersen, pet.set);
    CHECK(sub.graph.size() == 3); // a 3K2

    CHECK_THROWS_AS(construct_diam2(make_family(FamilySpec::path(4))), parameter_error);
    CHECK_THROWS_AS(construct_diam2(from_edge_list(4, {{0, 1}, {2, 3}})), parameter_error);
}

TEST_CASE("diameter-three constructions") {
    const Graph c7 = make_family(FamilySpec::cycle(7));
    const auto r = construct_diam3(c7);
    CHECK(r.set == VertexSet(7, {0, 1, 4}));
    REQUIRE(r.trace.stages.size() == 2);
    CHECK(r.trace.stages[0].clique == VertexSet(7, {0, 1}));
    CHECK(*r.trace.stages[1].t_set == VertexSet(7, {4}));
    CHECK(r.trace.stages[1].clique == VertexSet(7, {4}));

    // bipartite hexagon: the construction stops at a universal-line pair
    const Graph c6 = make_family(FamilySpec::cycle(6));
    const auto r6 = construct_diam3(c6);
    CHECK(is_terminal_set(all_pairs_distances(c6), r6.set));

    // diameter-two graphs are valid inputs too
    for (const auto& spec : {FamilySpec::cycle(5), FamilySpec::kneser2(5), FamilySpec::complete(3)}) {
        const Graph g = make_family(spec);
        CHECK(is_terminal_set(all_pairs_distances(g), construct_diam3(g).set));
    }

    CHECK_THROWS_AS(construct_diam3(make_family(FamilySpec::path(5))), parameter_error);
}

TEST_CASE("extending a terminal set past a removed simplicial vertex") {
    // paw: triangle 0,1,2 plus pendant 3 on vertex 2
    const Graph paw = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const VertexSet triangle(4, {0, 1, 2});
    const auto s = extend_terminal(paw, 3, triangle, ExtendKind::simplicial);
    CHECK(s == triangle); // N(3) = {2} is a proper subset of S

    // S = N(u) forces u into the set: path 0-1-2 with vertex 3 glued onto
    // the terminal edge {0,1}
    const Graph glued = from_edge_list(4, {{0, 1}, {1, 2}, {3, 0}, {3, 1}});
    const auto grown = extend_terminal(glued, 3, VertexSet(4, {0, 1}), ExtendKind::simplicial);
    CHECK(grown == VertexSet(4, {0, 1, 3}));

    CHECK_THROWS_AS(extend_terminal(paw, 0, triangle, ExtendKind::simplicial), contract_violation);
}

TEST_CASE("extending a terminal set past a removed twin") {
    // K3 grown from K2: the added vertex is a closed twin, S picks it up
    const Graph k3 = make_family(FamilySpec::complete(3));
    CHECK(extend_terminal(k3, 2, VertexSet(3, {0, 1}), ExtendKind::twin) == VertexSet::full(3));

    // C4 grown from P3 0-1-2 by an open twin of the middle: S survives as-is
    const Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    CHECK(extend_terminal(c4, 3, VertexSet(4, {0, 1}), ExtendKind::twin) == VertexSet(4, {0, 1}));

    // y in S with no S-neighbours: C5 plus an open twin of vertex 3
    const Graph c5t = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {4, 5}});
    const auto ext = extend_terminal(c5t, 5, VertexSet(6, {0, 1, 3}), ExtendKind::twin);
    CHECK(ext == VertexSet(6, {0, 1, 3, 5}));
    CHECK(is_terminal_set(all_pairs_distances(c5t), ext));

    // not a twin
    const Graph p4 = make_family(FamilySpec::path(4));
    CHECK_THROWS_AS(extend_terminal(p4, 0, VertexSet(4, {1, 2}), ExtendKind::twin), contract_violation);
}

TEST_CASE("combining terminal sets across a clique cut-set") {
    // diamond: triangles 0,1,2 and 1,2,3 sharing the edge {1,2}
    const Graph diamond = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto s = combine_clique_cutset(diamond, VertexSet(4, {1, 2}),
                                         {VertexSet(4, {0, 1, 2}), VertexSet(4, {1, 2, 3})});
    CHECK(s == VertexSet(4, {0, 1, 2}));

    // bowtie: triangles sharing vertex 2
    const Graph bowtie = from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    const auto sb = combine_clique_cutset(bowtie, VertexSet(5, {2}),
                                          {VertexSet(5, {0, 1, 2}), VertexSet(5, {2, 3, 4})});
    CHECK(is_terminal_set(all_pairs_distances(bowtie), sb));

    // star with the centre as cut-set
    const Graph star = make_family(FamilySpec::multipartite({3, 1}));
    const auto ss = combine_clique_cutset(star, VertexSet(4, {3}),
                                          {VertexSet(4, {0, 3}), VertexSet(4, {1, 3}), VertexSet(4, {2, 3})});
    CHECK(is_terminal_set(all_pairs_distances(star), ss));

    CHECK_THROWS_AS(combine_clique_cutset(diamond, VertexSet(4, {0, 3}), {}), contract_violation);
    CHECK_THROWS_AS(combine_clique_cutset(diamond, VertexSet(4, {0}), {VertexSet(4), VertexSet(4)}),
                    contract_violation);
}

TEST_CASE("structured constructions") {
    // trees are chordal; every tree on <= 8 vertices gets a verified set
    const Graph star = make_family(FamilySpec::multipartite({7, 1}));
    CHECK(is_terminal_set(all_pairs_distances(star), construct_structured(star)));
    const Graph path8 = make_family(FamilySpec::path(8));
    CHECK(is_terminal_set(all_pairs_distances(path8), construct_structured(path8)));
    const Graph caterpillar = from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {3, 7}});
    CHECK(is_terminal_set(all_pairs_distances(caterpillar), construct_structured(caterpillar)));

    // octahedron: a cograph whose terminal sets are the maximum cliques
    const Graph octa = make_family(FamilySpec::multipartite({2, 2, 2}));
    const auto so = construct_structured(octa);
    CHECK(so.count() == 3);
    CHECK(is_clique(octa, so));

    // disconnected: union across components
    const Graph two_k3 = from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(construct_structured(two_k3) == VertexSet::full(6));

    // neither chordal nor cograph, diameter 2 and 3 fallbacks
    const Graph c5 = make_family(FamilySpec::cycle(5));
    CHECK(construct_structured(c5) == VertexSet(5, {0, 1, 3}));
    const Graph c7 = make_family(FamilySpec::cycle(7));
    CHECK(construct_structured(c7) == VertexSet(7, {0, 1, 4}));

    // C8 has diameter four, no chords, and an induced P4
    CHECK_THROWS_AS(construct_structured(make_family(FamilySpec::cycle(8))), unsupported_class_error);
}

TEST_CASE("general position equals independent-union-of-cliques at diameter two") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            const auto dm = all_pairs_distances(g);
            if (diameter(g, dm) != 2) continue;
            const int total = 1 << n;
            for (int mask = 0; mask < total; ++mask) {
                VertexSet s(n);
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) s.set(v);
                CHECK(in_general_position(dm, s) == induces_cluster(g, s));
            }
        }
}

TEST_CASE("terminal sets in diameter-two graphs contain an edge (orders <= 7)") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : connected_graphs_exactly(n)) {
            const auto dm = all_pairs_distances(g);
            if (diameter(g, dm) != 2) continue;
            for (const auto& s : all_terminal_sets(g)) {
                bool has_edge = false;
                s.for_each([&](int u) {
                    if (g.neighbours(u).intersects(s)) has_edge = true;
                });
                CHECK(has_edge);
            }
        }
}

TEST_CASE("construction trace serialization") {
    const auto r = construct_diam3(make_family(FamilySpec::cycle(7)));
    CHECK(r.trace.to_string() ==
          "W_1 = {0, 1}\n"
          "W_2 = {4} | T = {4} | R_pre = {4} | R_post = {4}\n");
}
