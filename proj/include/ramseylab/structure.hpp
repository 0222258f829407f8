#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

// Number of edges incident with at least one vertex of W.
int edge_boundary(const Graph& f, const std::vector<int>& w);

struct HelpfulLemmaReport {
    bool holds = false;
    std::vector<int> violating_set;  // first violating W when holds == false
};

// Checks e_bar(W) > m2(F) * |W| for all 1 <= |W| <= v_F - 3.  Requires a
// strictly 2-balanced input.
HelpfulLemmaReport helpful_lemma_check(const Graph& f);

enum class DischargeCase { Da, Db, Dc };

struct DischargeWitness {
    DischargeCase kind;
    // Da: {v}; Db: {u, neighbour}; Dc: {v, nbr1, nbr2}.
    std::vector<int> vertices;
    std::vector<int> degrees;
};

// For e/v <= k + eps finds a vertex of degree <= 2k (Da), else a vertex of
// degree 2k+1 with a neighbour of degree <= 2k+2 (Db, needs eps >= 1/2), else
// a vertex of degree 2k+3 with two neighbours of degree 2k+1 (Dc, needs
// eps >= 7/8).  One of these must exist; not finding any is a falsification.
DischargeWitness discharging_case(const Graph& g, int k, const Rational& eps);

enum class ComponentShape { SingleVertex, Star, Path, OddCycle, EvenCycle, Tree, Unicyclic, Dense };

struct ComponentSummary {
    std::vector<int> vertices;
    int edge_count = 0;
    int cycle_count = 0;  // e - v + 1
    ComponentShape shape = ComponentShape::SingleVertex;
};

struct GraphClass {
    bool is_forest = false;
    bool is_star_forest = false;
    bool is_broom = false;  // the whole graph is a single broom
    bool is_b_graph = false;
    bool is_cstar_graph = false;
    bool is_unicyclic_per_component = false;
    std::vector<ComponentSummary> components;
};

// Per the definitions: a B-graph has every component inside a broom (checked
// by explicit embedding into a large enough broom); a C*-graph has every
// component inside an odd cycle or a star.
GraphClass classify(const Graph& g);

std::string shape_name(ComponentShape s);

}  // namespace ramseylab
