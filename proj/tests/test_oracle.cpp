#include <doctest.h>

#include "ramseylab/constructive.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/oracle.hpp"
#include "testutil.hpp"

using namespace ramseylab;

namespace {

GraphFamily k3_fam() { return GraphFamily({{"K3", complete_graph(3)}}); }
GraphFamily k4_fam() { return GraphFamily({{"K4", complete_graph(4)}}); }

}  // namespace

TEST_CASE("good_colouring classics") {
    auto r1 = good_colouring(complete_graph(5), k3_fam(), 2);
    REQUIRE(r1.verdict == OracleVerdict::Found);
    CHECK(colouring_avoids_family(complete_graph(5), k3_fam(), *r1.colouring));

    auto r2 = good_colouring(complete_graph(6), k3_fam(), 2);
    CHECK(r2.verdict == OracleVerdict::None);

    auto r3 = good_colouring(complete_graph(6), k4_fam(), 2);
    REQUIRE(r3.verdict == OracleVerdict::Found);
    CHECK(colouring_avoids_family(complete_graph(6), k4_fam(), *r3.colouring));

    CHECK_THROWS_AS(good_colouring(complete_graph(6), k3_fam(), 1), DomainError);
    SearchLimits tiny;
    tiny.max_edges = 5;
    CHECK_THROWS_AS(good_colouring(complete_graph(6), k3_fam(), 2, tiny), ResourceError);
}

TEST_CASE("good_colouring agrees with brute force on random small hosts") {
    for (int i = 0; i < 15; ++i) {
        Graph g = sample_gnp(6, 0.7, 17, static_cast<std::uint64_t>(i));
        auto fast = good_colouring(g, k3_fam(), 2);
        auto slow = testutil::oracle_good_colouring(g, k3_fam(), 2);
        CHECK((fast.verdict == OracleVerdict::Found) == slow.has_value());
    }
}

TEST_CASE("ramsey monotonicity under edge addition") {
    for (int i = 0; i < 10; ++i) {
        Graph g = sample_gnp(7, 0.6, 29, static_cast<std::uint64_t>(i));
        if (g.edge_count() < 2) continue;
        Graph smaller = with_edge_removed(g, i % g.edge_count());
        auto big = good_colouring(g, k3_fam(), 2);
        auto small = good_colouring(smaller, k3_fam(), 2);
        if (small.verdict == OracleVerdict::None) CHECK(big.verdict == OracleVerdict::None);
    }
}

TEST_CASE("asymmetric verdicts") {
    std::vector<NamedGraph> k33 = {{"K3", complete_graph(3)}, {"K3", complete_graph(3)}};
    CHECK(is_asymmetric_ramsey(complete_graph(6), k33).is_ramsey());
    auto k5 = is_asymmetric_ramsey(complete_graph(5), k33);
    CHECK_FALSE(k5.is_ramsey());
    REQUIRE(k5.witness.has_value());

    std::vector<NamedGraph> k3k2 = {{"K3", complete_graph(3)}, {"K2", Graph(2, {{0, 1}})}};
    CHECK(is_asymmetric_ramsey(complete_graph(3), k3k2).is_ramsey());

    std::vector<NamedGraph> one = {{"K3", complete_graph(3)}};
    CHECK_THROWS_AS(is_asymmetric_ramsey(complete_graph(4), one), DomainError);
}

TEST_CASE("colouring_from_lists: identical lists match good_colouring") {
    Graph k5 = complete_graph(5);
    auto lists = ListAssignment::identical(k5, {0, 1});
    auto res = colouring_from_lists(k5, k3_fam(), lists);
    CHECK(res.verdict == OracleVerdict::Found);

    // The broom-cycle gadget is 2-Ramsey for {P4, C3}: identical lists fail.
    Graph gadget = build_broom_cycle_gadget(1, 3);
    GraphFamily fam({{"P4", path_graph(4)}, {"C3", complete_graph(3)}});
    auto bad = colouring_from_lists(gadget, fam, ListAssignment::identical(gadget, {0, 1}));
    CHECK(bad.verdict == OracleVerdict::None);

    // Forest host: no copies at all, every assignment works.
    Graph forest = disjoint_union(path_graph(4), star_graph(3));
    auto easy = colouring_from_lists(forest, k3_fam(),
                                     testutil::random_two_lists(forest, 5, 3, 3));
    CHECK(easy.verdict == OracleVerdict::Found);

    // Identical-list agreement with good_colouring on random hosts.
    for (int i = 0; i < 10; ++i) {
        Graph g = sample_gnp(6, 0.6, 41, static_cast<std::uint64_t>(i));
        auto a = good_colouring(g, k3_fam(), 2);
        auto b = colouring_from_lists(g, k3_fam(), ListAssignment::identical(g, {0, 1}));
        CHECK(a.verdict == b.verdict);
    }
}

TEST_CASE("find_bad_list_assignment") {
    Graph gadget = build_broom_cycle_gadget(1, 3);
    GraphFamily fam({{"P4", path_graph(4)}, {"C3", complete_graph(3)}});
    auto found = find_bad_list_assignment(gadget, fam, 2, 2, 2'000'000);
    REQUIRE(found.outcome == BadListOutcome::Found);
    // With a 2-colour palette the only canonical assignment is the identical one.
    auto check = colouring_from_lists(gadget, fam, *found.assignment);
    CHECK(check.verdict == OracleVerdict::None);

    // K3 vs {K3}: complete palette bound, provably no bad assignment.
    auto none = find_bad_list_assignment(complete_graph(3), k3_fam(), 2, 6, 4'000'000);
    CHECK(none.outcome == BadListOutcome::NotFoundComplete);

    // K6 vs {K4}: every 2-list assignment is good; a small budget gives the
    // budget-bounded NOT-FOUND, a bigger palette-limited run the bounded one.
    auto budget = find_bad_list_assignment(complete_graph(6), k4_fam(), 2, 4, 20'000);
    CHECK(budget.outcome == BadListOutcome::NotFoundBudget);
}

TEST_CASE("list-Ramsey with r colours implies list-Ramsey with 2") {
    // The gadget has a bad 2-assignment; per the containment it must also be
    // 2-list-Ramsey when a bad 3-assignment exists.  Here we just confirm the
    // gadget keeps its bad assignment when r = 2 after finding any with r = 3
    // (palette restricted: identical {0,1,2} lists are bad too).
    Graph gadget = build_broom_cycle_gadget(1, 3);
    GraphFamily fam({{"P4", path_graph(4)}, {"C3", complete_graph(3)}});
    auto r3 = colouring_from_lists(gadget, fam, ListAssignment::identical(gadget, {0, 1, 2}));
    if (r3.verdict == OracleVerdict::None) {
        auto r2 = find_bad_list_assignment(gadget, fam, 2, 2, 2'000'000);
        CHECK(r2.outcome == BadListOutcome::Found);
    }
}

TEST_CASE("is_minimally_ramsey") {
    auto k6 = is_minimally_ramsey(complete_graph(6), k3_fam(), 2);
    CHECK(k6.ramsey == OracleVerdict::None);
    CHECK(k6.minimal);
    CHECK(k6.decided);
    CHECK(k6.deletion_certificates.size() == 15);
    for (int e = 0; e < 15; ++e) {
        Graph smaller = with_edge_removed(complete_graph(6), e);
        CHECK(colouring_avoids_family(smaller, k3_fam(), k6.deletion_certificates[static_cast<size_t>(e)]));
    }

    Graph k6_iso = disjoint_union(complete_graph(6), empty_graph(1));
    auto iso = is_minimally_ramsey(k6_iso, k3_fam(), 2);
    CHECK(iso.minimal);  // isolated vertices are ignored by edge-minimality

    auto k5 = is_minimally_ramsey(complete_graph(5), k3_fam(), 2);
    CHECK_FALSE(k5.minimal);
    CHECK(k5.ramsey == OracleVerdict::Found);
}

TEST_CASE("verdicts are invariant under relabeling") {
    std::vector<int> perm = {4, 2, 0, 5, 1, 3};
    std::vector<Edge> edges;
    for (const auto& [u, v] : complete_graph(6).edges())
        edges.push_back({perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]});
    Graph relabelled(6, edges);
    CHECK(good_colouring(relabelled, k3_fam(), 2).verdict == OracleVerdict::None);
    CHECK(good_colouring(relabelled, k4_fam(), 2).verdict == OracleVerdict::Found);
}
