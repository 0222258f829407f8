#include <doctest.h>

#include "ramseylab/constructive.hpp"
#include "ramseylab/density.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/structure.hpp"
#include "testutil.hpp"

using namespace ramseylab;

namespace {

bool classes_are(const Graph& g, const EdgeColouring& col, bool (*pred)(const GraphClass&)) {
    for (int c : col.palette()) {
        Graph sub = spanned_subgraph(g, col.colour_class(c));
        if (!pred(classify(sub))) return false;
    }
    return true;
}

bool star_forest_pred(const GraphClass& k) { return k.is_star_forest; }
bool cstar_pred(const GraphClass& k) { return k.is_cstar_graph; }
bool b_pred(const GraphClass& k) { return k.is_b_graph; }

}  // namespace

TEST_CASE("nonrepetitive colouring") {
    Graph c4 = cycle_graph(4);
    auto res = nonrepetitive_colouring(c4, ListAssignment::identical(c4, {0, 1}));
    REQUIRE(res.colouring.has_value());
    CHECK(classes_are(c4, *res.colouring, star_forest_pred));

    Graph c3 = cycle_graph(3);
    auto tri = nonrepetitive_colouring(c3, ListAssignment::identical(c3, {0, 1}));
    CHECK(tri.nontrivial);

    // Odd cycle with three colours is fine.
    auto tri3 = nonrepetitive_colouring(c3, ListAssignment::identical(c3, {0, 1, 2}));
    CHECK(tri3.colouring.has_value());

    // Trees always work, from leaves inward.
    Graph tree(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
    auto tr = nonrepetitive_colouring(tree, testutil::random_two_lists(tree, 4, 11, 0));
    REQUIRE(tr.colouring.has_value());
    CHECK(classes_are(tree, *tr.colouring, star_forest_pred));

    // A single star comes out monochromatic with identical lists.
    Graph star = star_graph(4);
    auto st = nonrepetitive_colouring(star, ListAssignment::identical(star, {0, 1}));
    REQUIRE(st.colouring.has_value());
    CHECK(st.colouring->colour_class(st.colouring->colour(0)).size() == 4);

    CHECK_THROWS_AS(nonrepetitive_colouring(complete_graph(4),
                                            ListAssignment::identical(complete_graph(4), {0, 1})),
                    DomainError);
    Graph disconnected = disjoint_union(path_graph(2), path_graph(2));
    CHECK_THROWS_AS(nonrepetitive_colouring(disconnected,
                                            ListAssignment::identical(disconnected, {0, 1})),
                    DomainError);
}

TEST_CASE("nonrepetitive colouring on random unicyclic lists") {
    // Random 2-lists on odd and even cycles with pendant trees.
    for (int i = 0; i < 30; ++i) {
        int len = 3 + (i % 4);
        Graph base = cycle_graph(len);
        Graph host = base;
        for (int v = 0; v < len; ++v) {
            std::vector<Edge> es = host.edges();
            es.push_back({v, host.n()});
            host = Graph(host.n() + 1, es);
        }
        auto lists = testutil::random_two_lists(host, 3, 77, static_cast<std::uint64_t>(i));
        auto res = nonrepetitive_colouring(host, lists);
        if (res.colouring) {
            CHECK(classes_are(host, *res.colouring, star_forest_pred));
        } else {
            // Only the odd + identical-cycle-list case may fail.
            CHECK(len % 2 == 1);
        }
    }
}

TEST_CASE("cstar colouring") {
    // Triangle with a pendant tree at each cycle vertex, identical lists.
    Graph g(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}});
    auto col = cstar_colouring(g, ListAssignment::identical(g, {0, 1}));
    CHECK(classes_are(g, col, cstar_pred));

    // Even unicyclic reduces to the nonrepetitive case: star forests.
    Graph even(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
    auto col2 = cstar_colouring(even, ListAssignment::identical(even, {0, 1}));
    CHECK(classes_are(even, col2, star_forest_pred));

    // A single star: one colour class, a star.
    Graph star = star_graph(5);
    auto col3 = cstar_colouring(star, ListAssignment::identical(star, {0, 1}));
    CHECK(classes_are(star, col3, cstar_pred));
    CHECK(col3.colour_class(col3.colour(0)).size() == 5);
}

TEST_CASE("cstar colouring handles non-identical tree lists on odd components") {
    // Odd cycle with identical cycle lists but scrambled tree lists: the
    // mono-cycle scheme still applies.
    for (int i = 0; i < 20; ++i) {
        Graph host(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {1, 5}, {5, 6}, {2, 7}, {7, 8}});
        auto lists = ListAssignment::identical(host, {0, 1});
        auto scramble = testutil::random_two_lists(host, 4, 13, static_cast<std::uint64_t>(i));
        for (int e = 3; e < host.edge_count(); ++e) lists.list_of[static_cast<size_t>(e)] =
            scramble.list_of[static_cast<size_t>(e)];
        auto col = cstar_colouring(host, lists);
        CHECK(classes_are(host, col, cstar_pred));
    }
}

TEST_CASE("broom colouring") {
    // C5 with pendant stars: classes must be B-graphs.
    Graph base = cycle_graph(5);
    std::vector<Edge> es = base.edges();
    int n = 5;
    for (int v = 0; v < 5; ++v)
        for (int j = 0; j < 2; ++j) es.push_back({v, n++});
    Graph host(n, es);
    auto col = broom_colouring(host, ListAssignment::identical(host, {0, 1}));
    CHECK(classes_are(host, col, b_pred));

    // Bare C3: one P3 plus one single edge.
    Graph c3 = cycle_graph(3);
    auto col2 = broom_colouring(c3, ListAssignment::identical(c3, {0, 1}));
    CHECK(classes_are(c3, col2, b_pred));
    std::vector<size_t> sizes;
    for (int c : col2.palette()) sizes.push_back(col2.colour_class(c).size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2});

    // Tree components give star forests.
    Graph tree = broom_graph(3);
    auto col3 = broom_colouring(tree, ListAssignment::identical(tree, {0, 1}));
    CHECK(classes_are(tree, col3, star_forest_pred));
}

TEST_CASE("forest list colouring on the named hosts") {
    Graph k4 = complete_graph(4);
    auto col = forest_list_colouring(k4, ListAssignment::identical(k4, {0, 1}));
    for (int c : col.palette()) CHECK(cycle_rank(spanned_subgraph(k4, col.colour_class(c))) == 0);

    Graph pet = petersen_graph();
    auto col2 = forest_list_colouring(pet, ListAssignment::identical(pet, {0, 1}));
    for (int c : col2.palette()) CHECK(cycle_rank(spanned_subgraph(pet, col2.colour_class(c))) == 0);

    Graph p5 = path_graph(5);
    auto col3 = forest_list_colouring(p5, testutil::random_two_lists(p5, 3, 3, 9));
    for (int c : col3.palette()) CHECK(cycle_rank(spanned_subgraph(p5, col3.colour_class(c))) == 0);

    CHECK_THROWS_AS(forest_list_colouring(complete_graph(5),
                                          ListAssignment::identical(complete_graph(5), {0, 1})),
                    DomainError);
}

TEST_CASE("forest list colouring against random lists") {
    Graph k33 = complete_bipartite(3, 3);
    for (int i = 0; i < 50; ++i) {
        auto lists = testutil::random_two_lists(k33, 3, 21, static_cast<std::uint64_t>(i));
        auto col = forest_list_colouring(k33, lists);
        for (int c : col.palette())
            CHECK(cycle_rank(spanned_subgraph(k33, col.colour_class(c))) == 0);
        for (int e = 0; e < k33.edge_count(); ++e) {
            const auto& l = lists.list(e);
            CHECK(std::find(l.begin(), l.end(), col.colour(e)) != l.end());
        }
    }
}

TEST_CASE("colour_k5_for_k3: identical lists give the two-C5 split") {
    Graph k5 = complete_graph(5);
    auto res = colour_k5_for_k3(ListAssignment::identical(k5, {0, 1}));
    CHECK(res.branch == K5Branch::FiveCycle);
    GraphFamily k3({{"K3", complete_graph(3)}});
    CHECK(colouring_avoids_family(k5, k3, res.colouring));
    for (int c : res.colouring.palette()) {
        Graph cls = spanned_subgraph(k5, res.colouring.colour_class(c));
        CHECK(cls.edge_count() == 5);
        CHECK(classify(cls).components[0].shape == ComponentShape::OddCycle);
    }
}

TEST_CASE("colour_k5_for_k3: an edge with a unique colour rides the edge branch") {
    Graph k5 = complete_graph(5);
    // Colour 2 appears on exactly one edge; every other list is {0,1}.
    auto lists = ListAssignment::identical(k5, {0, 1});
    lists.list_of[3] = {1, 2};
    auto res = colour_k5_for_k3(lists);
    GraphFamily k3({{"K3", complete_graph(3)}});
    CHECK(colouring_avoids_family(k5, k3, res.colouring));
    // Colour 2's class is a single edge: it has no triangle, so the edge
    // branch fires (after the 5-cycle test fails for all colours).
    CHECK(res.branch == K5Branch::EdgeNotInTriangle);
}

TEST_CASE("colour_k5_for_k3: random 2-lists always validate") {
    Graph k5 = complete_graph(5);
    GraphFamily k3({{"K3", complete_graph(3)}});
    for (int i = 0; i < 2000; ++i) {
        auto lists = testutil::random_two_lists(k5, 4, 1234, static_cast<std::uint64_t>(i));
        auto res = colour_k5_for_k3(lists);
        CHECK(colouring_avoids_family(k5, k3, res.colouring));
        for (int e = 0; e < k5.edge_count(); ++e) {
            const auto& l = lists.list(e);
            CHECK(std::find(l.begin(), l.end(), res.colouring.colour(e)) != l.end());
        }
    }
}

TEST_CASE("colour_k6_for_k4") {
    Graph k6 = complete_graph(6);
    GraphFamily k4({{"K4", complete_graph(4)}});
    auto res = colour_k6_for_k4(ListAssignment::identical(k6, {0, 1}), 42);
    CHECK(colouring_avoids_family(k6, k4, res.colouring));
    CHECK(res.tries <= 64);

    // Disjoint palettes on a matching split.
    auto lists = ListAssignment::identical(k6, {0, 1});
    for (int e = 0; e < k6.edge_count(); ++e)
        if (e % 2) lists.list_of[static_cast<size_t>(e)] = {2, 3};
    auto res2 = colour_k6_for_k4(lists, 43);
    CHECK(colouring_avoids_family(k6, k4, res2.colouring));

    for (int i = 0; i < 1000; ++i) {
        auto rl = testutil::random_two_lists(k6, 4, 999, static_cast<std::uint64_t>(i));
        auto r = colour_k6_for_k4(rl, static_cast<std::uint64_t>(i));
        CHECK(colouring_avoids_family(k6, k4, r.colouring));
    }
}

TEST_CASE("sparse triangle-free colouring") {
    GraphFamily k3({{"K3", complete_graph(3)}});
    Graph k4 = complete_graph(4);
    auto res = sparse_triangle_free_colouring(k4, ListAssignment::identical(k4, {0, 1}));
    CHECK(colouring_avoids_family(k4, k3, res.colouring));

    // Wheel W5 minus one spoke: e/v = 9/6 <= 2.
    Graph wheel(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}, {2, 5}, {3, 5}});
    auto res2 = sparse_triangle_free_colouring(wheel, ListAssignment::identical(wheel, {0, 1}));
    CHECK(colouring_avoids_family(wheel, k3, res2.colouring));

    // Triangle-free host: anything goes.
    Graph pet = petersen_graph();
    auto res3 = sparse_triangle_free_colouring(pet, testutil::random_two_lists(pet, 3, 5, 5));
    CHECK(colouring_avoids_family(pet, k3, res3.colouring));

    // K5 is delegated.
    Graph k5 = complete_graph(5);
    auto res4 = sparse_triangle_free_colouring(k5, ListAssignment::identical(k5, {0, 1}));
    CHECK(colouring_avoids_family(k5, k3, res4.colouring));
    CHECK(std::find(res4.branches.begin(), res4.branches.end(), SparseBranch::K5Delegate) !=
          res4.branches.end());

    CHECK_THROWS_AS(sparse_triangle_free_colouring(
                        complete_graph(6), ListAssignment::identical(complete_graph(6), {0, 1})),
                    DomainError);  // e/v = 15/6 > 2

    for (int i = 0; i < 25; ++i) {
        Graph g = sample_gnp(8, 0.4, 321, static_cast<std::uint64_t>(i));
        if (2 * g.n() < g.edge_count()) continue;
        auto lists = testutil::random_two_lists(g, 3, 322, static_cast<std::uint64_t>(i));
        auto r = sparse_triangle_free_colouring(g, lists);
        CHECK(colouring_avoids_family(g, k3, r.colouring));
    }
}

TEST_CASE("gadget builders") {
    Graph f13 = build_broom_cycle_gadget(1, 3);
    CHECK(f13.n() == 6);
    CHECK(f13.edge_count() == 6);
    Graph f23 = build_broom_cycle_gadget(2, 3);
    CHECK(f23.n() == 12);
    CHECK(f23.edge_count() == 12);
    Graph f15 = build_broom_cycle_gadget(1, 5);
    CHECK(f15.n() == 10);
    CHECK(f15.edge_count() == 10);
    CHECK(max_density(f15) == Rational(1));
    CHECK_THROWS_AS(build_broom_cycle_gadget(1, 4), DomainError);

    Graph t12 = build_broom_star_tree(1, 2);
    CHECK(t12.degree(0) == 3);
    CHECK(t12.n() == 10);
    Graph t11 = build_broom_star_tree(1, 1);
    CHECK(t11.degree(0) == 3);
    CHECK(t11.n() == 7);
    Graph t21 = build_broom_star_tree(2, 1);
    CHECK(t21.degree(0) == 5);
    CHECK(t21.n() == 11);
}

TEST_CASE("broom_hairs_for") {
    CHECK(broom_hairs_for(path_graph(4)) == 1);
    CHECK(broom_hairs_for(star_graph(4)) == 3);  // K1,4 needs head degree 5 = b+1
    CHECK(broom_hairs_for(broom_graph(3)) == 3);
    CHECK_THROWS_AS(broom_hairs_for(path_graph(5)), DomainError);
}

TEST_CASE("build_list_ramsey_witness on {P4, C3}") {
    GraphFamily fam({{"P4", path_graph(4)}, {"C3", complete_graph(3)}});
    WitnessPackage pkg = build_list_ramsey_witness(fam);
    CHECK(pkg.log.k == 0);
    CHECK(pkg.log.m == 1);
    CHECK(pkg.log.t == 1);
    CHECK(pkg.log.palette == 2);
    CHECK(pkg.log.gprime_copies == 1);
    CHECK(pkg.host == build_broom_cycle_gadget(1, 3));
    CHECK(is_at_most_unicyclic(pkg.host));
    REQUIRE(pkg.lists.has_value());
    auto res = colouring_from_lists(pkg.host, fam, *pkg.lists);
    CHECK(res.verdict == OracleVerdict::None);
}

TEST_CASE("build_list_ramsey_witness palette arithmetic") {
    GraphFamily fam({{"P4", path_graph(4)},
                     {"C3+S1", disjoint_union(complete_graph(3), star_graph(1))}});
    WitnessPackage pkg = build_list_ramsey_witness(fam);
    CHECK(pkg.log.k == 1);
    CHECK(pkg.log.m == 1);
    CHECK(pkg.log.palette == 3);
    CHECK(pkg.log.gprime_copies == 1);  // t = 1
    CHECK(is_at_most_unicyclic(pkg.host));

    // A two-component B-graph: copy count follows (t-1)(k+m+1)+1.
    GraphFamily fam2({{"2P4", disjoint_union(path_graph(4), path_graph(4))},
                      {"C3", complete_graph(3)}});
    WitnessPackage pkg2 = build_list_ramsey_witness(fam2);
    CHECK(pkg2.log.t == 2);
    CHECK(pkg2.log.gprime_copies == (2 - 1) * pkg2.log.palette + 1);
}

TEST_CASE("build_plain_ramsey_witness") {
    // {P4, C3}: the Aux core is the singleton {C3}; guard keeps one copy.
    GraphFamily fam({{"P4", path_graph(4)}, {"C3", complete_graph(3)}});
    auto pkg = build_plain_ramsey_witness(fam, 7);
    REQUIRE(pkg.has_value());
    CHECK(pkg->log.aux_core_lengths == std::vector<int>{3});
    CHECK(pkg->log.gprime_copies == 1);  // guard: 2(r-1)e + 2x-2 = 0
    CHECK_FALSE(pkg->lists.has_value());
    CHECK(is_at_most_unicyclic(pkg->host));
    auto res = good_colouring(pkg->host, fam, 2);
    CHECK(res.verdict == OracleVerdict::None);

    // F1 = {B2, C3+C5}: Aux is 2-colourable and there is no star forest.
    GraphFamily f1({{"B2", broom_graph(2)},
                    {"C3+C5", disjoint_union(cycle_graph(3), cycle_graph(5))}});
    CHECK_FALSE(build_plain_ramsey_witness(f1, 7).has_value());

    // A star forest member takes the 2m-1 star route.
    GraphFamily sf({{"2S2", disjoint_union(star_graph(2), star_graph(2))},
                    {"C3", complete_graph(3)}});
    auto pkg2 = build_plain_ramsey_witness(sf, 7);
    REQUIRE(pkg2.has_value());
    CHECK(pkg2->log.star_forest_route);
    CHECK(pkg2->log.star_copies == 3);
    CHECK(pkg2->log.star_rays == 3);
    CHECK(connected_components(pkg2->host).size() == 3);
    auto res2 = good_colouring(pkg2->host, sf, 2);
    CHECK(res2.verdict == OracleVerdict::None);
}

TEST_CASE("aux_guided_colouring") {
    GraphFamily f1({{"B2", broom_graph(2)},
                    {"C3+C5", disjoint_union(cycle_graph(3), cycle_graph(5))}});
    Graph host = disjoint_union(build_broom_cycle_gadget(2, 3), build_broom_cycle_gadget(2, 5));
    std::map<int, int> phi = {{3, 0}, {5, 1}};
    auto col = aux_guided_colouring(host, f1, phi);
    CHECK(colouring_avoids_family(host, f1, col));

    // Forest host: vacuously family-free.
    Graph forest = disjoint_union(path_graph(4), star_graph(3));
    auto col2 = aux_guided_colouring(forest, f1, {});
    CHECK(colouring_avoids_family(forest, f1, col2));

    // Even unicyclic component: nonrepetitive classes.
    Graph even(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    auto col3 = aux_guided_colouring(even, f1, {});
    CHECK(colouring_avoids_family(even, f1, col3));

    // Improper phi is rejected.
    std::map<int, int> bad = {{3, 0}, {5, 0}};
    CHECK_THROWS_AS(aux_guided_colouring(host, f1, bad), DomainError);
    // Missing length is rejected.
    std::map<int, int> missing = {{3, 0}};
    CHECK_THROWS_AS(aux_guided_colouring(host, f1, missing), DomainError);
    // Star-forest families are rejected.
    GraphFamily sf({{"S2", star_graph(2)}});
    CHECK_THROWS_AS(aux_guided_colouring(host, sf, phi), DomainError);
}
