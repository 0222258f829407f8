#include <doctest.h>

#include "ramseylab/hypergraph.hpp"
#include "ramseylab/gnp.hpp"
#include "testutil.hpp"

using namespace ramseylab;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

GraphFamily k3_family() { return GraphFamily({{"K3", complete_graph(3)}}); }

}  // namespace

TEST_CASE("f_hypergraph shapes") {
    Hypergraph h1 = f_hypergraph(complete_graph(4), k3_family());
    CHECK(h1.vertex_count() == 6);
    CHECK(h1.edge_count() == 4);
    for (const auto& he : h1.edges) CHECK(he.vertices.size() == 3);

    Hypergraph h2 = f_hypergraph(complete_graph(6), GraphFamily({{"K4", complete_graph(4)}}));
    CHECK(h2.vertex_count() == 15);
    CHECK(h2.edge_count() == 15);
    for (const auto& he : h2.edges) CHECK(he.vertices.size() == 6);

    Hypergraph h3 = f_hypergraph(cycle_graph(5), k3_family());
    CHECK(h3.vertex_count() == 5);
    CHECK(h3.edge_count() == 0);

    for (const auto& he : h1.edges) CHECK_FALSE(he.provenance.empty());
}

TEST_CASE("is_f_cluster") {
    CHECK(is_f_cluster(complete_graph(6), GraphFamily({{"K4", complete_graph(4)}})));
    CHECK_FALSE(is_f_cluster(bowtie(), k3_family()));
    CHECK(is_f_cluster(complete_graph(3), k3_family()));
    CHECK_THROWS_AS(is_f_cluster(empty_graph(3), k3_family()), DomainError);
    // An uncovered edge breaks cluster-ness by convention.
    Graph tri_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_f_cluster(tri_pendant, k3_family()));
}

TEST_CASE("is_core on the named instances") {
    CHECK(is_core(f_hypergraph(complete_graph(5), k3_family())).core);
    auto single = f_hypergraph(complete_graph(3), k3_family());
    auto rep = is_core(single);
    CHECK_FALSE(rep.core);
    REQUIRE(rep.violating.has_value());
    auto disconnected = f_hypergraph(bowtie(), k3_family());
    auto rep2 = is_core(disconnected);
    CHECK_FALSE(rep2.core);
    CHECK(rep2.disconnected);
}

TEST_CASE("peel_to_core: bowtie empties, K5 stays intact") {
    auto bow = peel_to_core(f_hypergraph(bowtie(), k3_family()));
    CHECK(bow.emptied());
    CHECK(bow.removed.size() == 2);

    auto k5 = peel_to_core(f_hypergraph(complete_graph(5), k3_family()));
    CHECK_FALSE(k5.emptied());
    CHECK(k5.removed.empty());
    CHECK(k5.residual.edge_count() == 10);
    CHECK(is_core(k5.residual).core);

    Hypergraph empty;
    CHECK(peel_to_core(empty).emptied());
}

TEST_CASE("peel residual, when connected and non-empty, is a core") {
    GraphFamily fam({{"K3", complete_graph(3)}, {"C4", cycle_graph(4)}});
    for (int i = 0; i < 25; ++i) {
        Graph g = sample_gnp(7, 0.5, 123, static_cast<std::uint64_t>(i));
        auto trace = peel_to_core(f_hypergraph(g, fam));
        if (trace.emptied()) continue;
        auto rep = is_core(trace.residual);
        if (!rep.disconnected) CHECK(rep.core);
        // Every component of the residual satisfies the pair condition, so a
        // disconnected residual only fails on connectivity.
        if (rep.disconnected) CHECK_FALSE(rep.violating.has_value());
    }
}

TEST_CASE("proper_two_colouring matches brute force") {
    // K2-shaped and K3-shaped hypergraphs per the Aux examples.
    Hypergraph k2{{"a", "b"}, {{{0, 1}, "e"}}};
    CHECK(proper_two_colouring(k2).has_value());
    Hypergraph k3{{"a", "b", "c"}, {{{0, 1}, "x"}, {{0, 2}, "y"}, {{1, 2}, "z"}}};
    CHECK_FALSE(proper_two_colouring(k3).has_value());
    Hypergraph singleton{{"a"}, {{{0}, "s"}}};
    CHECK_FALSE(proper_two_colouring(singleton).has_value());

    GraphFamily fam({{"K3", complete_graph(3)}});
    for (int i = 0; i < 30; ++i) {
        Graph g = sample_gnp(6, 0.6, 55, static_cast<std::uint64_t>(i));
        Hypergraph h = f_hypergraph(g, fam);
        auto fast = proper_two_colouring(h);
        auto slow = testutil::oracle_two_colouring(h);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            for (const auto& he : h.edges) {
                bool all_same = true;
                for (int v : he.vertices)
                    if ((*fast)[static_cast<size_t>(v)] != (*fast)[static_cast<size_t>(he.vertices[0])])
                        all_same = false;
                CHECK_FALSE(all_same);
            }
        }
    }
}

TEST_CASE("aux_hypergraph on the worked examples") {
    // F1 = {B2, C3+C5}: a single hyperedge {C3, C5}.
    GraphFamily f1({{"B2", broom_graph(2)},
                    {"C3+C5", disjoint_union(cycle_graph(3), cycle_graph(5))}});
    Hypergraph a1 = aux_hypergraph(f1, 7);
    CHECK(a1.vertex_count() == 3);  // C3, C5, C7
    REQUIRE(a1.edge_count() == 1);
    CHECK(a1.edges[0].vertices == std::vector<int>{0, 1});
    CHECK(proper_two_colouring(a1).has_value());

    // F2 adds the other two pairs: an Aux isomorphic to K3.
    GraphFamily f2({{"B2", broom_graph(2)},
                    {"C3+C5", disjoint_union(cycle_graph(3), cycle_graph(5))},
                    {"C3+C7", disjoint_union(cycle_graph(3), cycle_graph(7))},
                    {"C5+C7", disjoint_union(cycle_graph(5), cycle_graph(7))}});
    Hypergraph a2 = aux_hypergraph(f2, 7);
    REQUIRE(a2.edge_count() == 3);
    CHECK_FALSE(proper_two_colouring(a2).has_value());

    // A bare C3 member contributes the singleton {C3}.
    GraphFamily f3({{"B1", broom_graph(1)}, {"C3", cycle_graph(3)}});
    Hypergraph a3 = aux_hypergraph(f3, 3);
    bool has_singleton = false;
    for (const auto& he : a3.edges)
        if (he.vertices == std::vector<int>{0}) has_singleton = true;
    CHECK(has_singleton);

    CHECK_THROWS_AS(aux_hypergraph(GraphFamily({{"K4", complete_graph(4)}}), 7), DomainError);
    CHECK_THROWS_AS(aux_hypergraph(f1, 6), DomainError);
}

TEST_CASE("aux is monotone in the cap and respects path embedding") {
    // P5 (4 edges) fits only in odd cycles of length >= 5.
    GraphFamily fam({{"P5", path_graph(5)}});
    Hypergraph a5 = aux_hypergraph(fam, 5);
    REQUIRE(a5.edge_count() == 1);
    CHECK(a5.edges[0].vertices == std::vector<int>{1});  // C5 only
    Hypergraph a9 = aux_hypergraph(fam, 9);
    CHECK(a9.edge_count() == 3);  // C5, C7, C9 singletons
    // Monotone: every edge of the small truncation appears in the larger one.
    for (const auto& he : a5.edges) {
        bool found = false;
        for (const auto& he9 : a9.edges)
            if (he9.vertices == he.vertices) found = true;
        CHECK(found);
    }
    // P4 (3 edges) does not fit in C3.
    GraphFamily p4({{"P4", path_graph(4)}});
    Hypergraph ap4 = aux_hypergraph(p4, 5);
    REQUIRE(ap4.edge_count() == 1);
    CHECK(ap4.edges[0].vertices == std::vector<int>{1});
}

TEST_CASE("is_f_core on cores, non-cores and the capped case") {
    GraphFamily k4({{"K4", complete_graph(4)}});
    CHECK(is_f_core(complete_graph(6), k4).status == FCoreStatus::Yes);
    // K6 is a {K4,K5}-core even though its full {K4,K5}-hypergraph is not a
    // core: the K4-subhypergraph witnesses it.
    GraphFamily k45({{"K4", complete_graph(4)}, {"K5", complete_graph(5)}});
    CHECK(is_f_core(complete_graph(6), k45, 21).status == FCoreStatus::Yes);
    GraphFamily k3({{"K3", complete_graph(3)}});
    CHECK(is_f_core(complete_graph(5), k3).status == FCoreStatus::Yes);
    CHECK(is_f_core(complete_graph(4), k3).status == FCoreStatus::Yes);
    CHECK(is_f_core(complete_graph(3), k3).status == FCoreStatus::No);  // single hyperedge
    CHECK(is_f_core(bowtie(), k3).status == FCoreStatus::No);           // disconnected
    // Above the cap: tri-state unknown.
    CHECK(is_f_core(complete_graph(5), k3, 5).status == FCoreStatus::Unknown);
}

TEST_CASE("hypergraph dump format") {
    Hypergraph h = f_hypergraph(complete_graph(3), k3_family());
    std::string text = write_hypergraph_text(h);
    CHECK(text.rfind("3 1\n", 0) == 0);
    CHECK(text.find("3 0 1 2") != std::string::npos);
    CHECK(text.find("# K3#0") != std::string::npos);
}
