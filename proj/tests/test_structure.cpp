#include <doctest.h>

#include "ramseylab/structure.hpp"
#include "ramseylab/density.hpp"

using namespace ramseylab;

TEST_CASE("edge_boundary") {
    Graph k4 = complete_graph(4);
    CHECK(edge_boundary(k4, {0}) == 3);
    CHECK(edge_boundary(k4, {0, 1}) == 5);
    CHECK(edge_boundary(k4, {0, 1, 2, 3}) == 6);
    CHECK(edge_boundary(k4, {}) == 0);
    CHECK_THROWS_AS(edge_boundary(k4, {7}), DomainError);
}

TEST_CASE("helpful lemma on the named instances") {
    CHECK(helpful_lemma_check(complete_graph(5)).holds);
    CHECK(helpful_lemma_check(cycle_graph(4)).holds);
    CHECK(helpful_lemma_check(cycle_graph(5)).holds);
    CHECK(helpful_lemma_check(complete_graph(4)).holds);
    // v = 3: the range of W is empty, vacuously true.
    CHECK(helpful_lemma_check(complete_graph(3)).holds);
    Graph tri_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(helpful_lemma_check(tri_pendant), DomainError);
}

TEST_CASE("discharging cases on the spec instances") {
    auto da = discharging_case(path_graph(4), 1, Rational(0));
    CHECK(da.kind == DischargeCase::Da);
    CHECK(da.degrees[0] <= 2);

    auto db = discharging_case(petersen_graph(), 1, Rational::of(1, 2));
    CHECK(db.kind == DischargeCase::Db);
    CHECK(db.degrees == std::vector<int>{3, 3});

    auto k6 = discharging_case(complete_graph(6), 2, Rational::of(1, 2));
    CHECK(k6.kind == DischargeCase::Db);
    CHECK(k6.degrees == std::vector<int>{5, 5});

    CHECK_THROWS_AS(discharging_case(complete_graph(6), 1, Rational(0)), DomainError);
    CHECK_THROWS_AS(discharging_case(path_graph(3), 0, Rational(0)), DomainError);
    CHECK_THROWS_AS(discharging_case(path_graph(3), 1, Rational(1)), DomainError);
}

TEST_CASE("classify: the dual-class graphs and the flags") {
    GraphClass p4 = classify(path_graph(4));
    CHECK(p4.is_b_graph);
    CHECK(p4.is_cstar_graph);
    CHECK(p4.is_forest);
    CHECK_FALSE(p4.is_star_forest);
    CHECK(p4.is_broom);  // P4 = broom(1)

    GraphClass star3 = classify(star_graph(3));
    CHECK(star3.is_star_forest);
    CHECK(star3.is_b_graph);
    CHECK(star3.is_cstar_graph);

    GraphClass c5 = classify(cycle_graph(5));
    CHECK(c5.is_cstar_graph);
    CHECK_FALSE(c5.is_b_graph);
    CHECK_FALSE(c5.is_forest);
    CHECK(c5.is_unicyclic_per_component);
    CHECK(c5.components[0].shape == ComponentShape::OddCycle);

    GraphClass c4 = classify(cycle_graph(4));
    CHECK_FALSE(c4.is_cstar_graph);
    CHECK_FALSE(c4.is_b_graph);

    GraphClass broom = classify(broom_graph(4));
    CHECK(broom.is_broom);
    CHECK(broom.is_b_graph);
    CHECK_FALSE(broom.is_cstar_graph);  // not a path, star, or odd-cycle part

    // P5 is too long for any broom.
    CHECK_FALSE(classify(path_graph(5)).is_b_graph);
    CHECK(classify(path_graph(5)).is_cstar_graph);

    // Double star embeds in no broom.
    Graph double_star(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    CHECK_FALSE(classify(double_star).is_b_graph);

    // Star forest implies both classes.
    Graph sf = disjoint_union(star_graph(2), star_graph(5));
    GraphClass sfc = classify(sf);
    CHECK(sfc.is_star_forest);
    CHECK(sfc.is_b_graph);
    CHECK(sfc.is_cstar_graph);

    GraphClass k4 = classify(complete_graph(4));
    CHECK_FALSE(k4.is_unicyclic_per_component);
    CHECK(k4.components[0].shape == ComponentShape::Dense);
}
