#include <doctest.h>

#include <sstream>

#include "ramseylab/graph.hpp"
#include "ramseylab/graph_io.hpp"

using namespace ramseylab;

TEST_CASE("graph construction canonicalises and validates") {
    Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("builders have the right sizes") {
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(star_graph(3).edge_count() == 3);
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(broom_graph(0).edge_count() == 2);   // P3
    CHECK(broom_graph(1).edge_count() == 3);   // P4
    CHECK(broom_graph(2).n() == 5);
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
}

TEST_CASE("components, cycle rank, unicyclic check") {
    Graph two = disjoint_union(cycle_graph(3), path_graph(3));
    CHECK(connected_components(two).size() == 2);
    CHECK(cycle_rank(two) == 1);
    CHECK(is_at_most_unicyclic(two));
    CHECK_FALSE(is_at_most_unicyclic(complete_graph(4)));
    CHECK(is_connected(complete_graph(4)));
    CHECK_FALSE(is_connected(two));
}

TEST_CASE("shortest cycle is chordless and minimal") {
    CHECK(shortest_cycle(path_graph(5)).empty());
    CHECK(shortest_cycle(complete_graph(5)).size() == 3);
    CHECK(shortest_cycle(petersen_graph()).size() == 5);
    CHECK(shortest_cycle(cycle_graph(7)).size() == 7);
    // Triangle hanging off a long cycle: the short one wins.
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {1, 6}});
    auto cyc = shortest_cycle(g);
    CHECK(cyc.size() == 3);
}

TEST_CASE("unique cycle of a unicyclic component") {
    Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {1, 5}});
    auto comps = connected_components(g);
    auto cyc = unique_cycle_in_component(g, comps[0]);
    REQUIRE(cyc.size() == 3);
    CHECK(cyc[0] == 0);  // starts at the least vertex
    auto none = unique_cycle_in_component(path_graph(4), connected_components(path_graph(4))[0]);
    CHECK(none.empty());
}

TEST_CASE("embeds_into") {
    CHECK(embeds_into(path_graph(4), broom_graph(3)));
    CHECK_FALSE(embeds_into(path_graph(5), broom_graph(5)));
    CHECK(embeds_into(star_graph(3), broom_graph(3)));
    CHECK(embeds_into(cycle_graph(3), complete_graph(4)));
    CHECK_FALSE(embeds_into(cycle_graph(4), cycle_graph(5)));
    CHECK(embeds_into(disjoint_union(cycle_graph(3), cycle_graph(3)), complete_graph(6)));
    CHECK_FALSE(embeds_into(disjoint_union(cycle_graph(3), cycle_graph(3)), complete_graph(5)));
}

TEST_CASE("graph text format round-trips and validates") {
    Graph g = petersen_graph();
    std::string text = write_graph_text(g);
    Graph back = read_graph_text(text);
    CHECK(back == g);
    CHECK(write_graph_text(back) == text);
    CHECK_THROWS_AS(read_graph_text("2 1\n1 0\n"), DomainError);   // not u < v
    CHECK_THROWS_AS(read_graph_text("3 2\n0 2\n0 1\n"), DomainError);  // order
    CHECK_THROWS_AS(read_graph_text("3 2\n0 1\n"), DomainError);       // truncated
}

TEST_CASE("family json round-trips") {
    GraphFamily fam({{"K3", complete_graph(3)}, {"C5", cycle_graph(5)}});
    auto text = write_family_json(fam);
    GraphFamily back = read_family_json(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].name == "K3");
    CHECK(back[1].graph == cycle_graph(5));
    CHECK(back.label() == "K3;C5");
    CHECK_THROWS_AS(GraphFamily({}), DomainError);
    CHECK_THROWS_AS(GraphFamily({{"empty", empty_graph(2)}}), DomainError);
}

TEST_CASE("list assignment json round-trips") {
    Graph g = complete_graph(3);
    ListAssignment la = ListAssignment::identical(g, {0, 2});
    auto text = write_lists_json(la);
    ListAssignment back = read_lists_json(text, g);
    CHECK(back.r == 2);
    CHECK(back.list_of == la.list_of);
    CHECK(la.palette() == std::vector<int>{0, 2});
}

TEST_CASE("named graphs") {
    CHECK(named_graph("K5") == complete_graph(5));
    CHECK(named_graph("C7") == cycle_graph(7));
    CHECK(named_graph("P4") == path_graph(4));
    CHECK(named_graph("S3") == star_graph(3));
    CHECK(named_graph("B2") == broom_graph(2));
    CHECK(named_graph("petersen") == petersen_graph());
    CHECK_THROWS_AS(named_graph("Q3"), DomainError);
}
