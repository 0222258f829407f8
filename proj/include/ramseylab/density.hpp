#pragma once

#include <optional>

#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

// Density operations enumerate vertex subsets exhaustively and are capped at
// this many vertices; family members are small by assumption.
inline constexpr int kDensityVertexCap = 20;

// m(G) = max over non-empty S of e(G[S]) / |S|; 0 for edgeless graphs.
Rational max_density(const Graph& g);

// m2(F) = max over S with |S| >= 3 of (e(F[S]) - 1) / (|S| - 2), joined with
// the floor value 1/2.
Rational max_two_density(const Graph& f);

// m2 of a family: the minimum over members.
Rational family_two_density(const GraphFamily& fam);

// Mixed 2-density m2(H, L); requires m2(H) >= m2(L), else throws a DomainError
// telling the caller to swap the arguments.
Rational mixed_two_density(const Graph& h, const Graph& l);

struct BalancednessReport {
    bool strictly_balanced = false;
    // When not strictly balanced: a proper induced subgraph with m2 at least
    // as large (relabelled), plus its vertex set in the original labels.
    std::optional<Graph> violating_subgraph;
    std::vector<int> violating_vertices;
};

// m2(F) > m2(F') for every non-empty proper subgraph F'.  Requires >= 3
// vertices.
BalancednessReport is_strictly_two_balanced(const Graph& f);

// Replaces each member by a strictly 2-balanced subgraph with the same m2
// (minimum vertex count, then lexicographically least canonical edge list).
// Every member must have m2 > 1.
GraphFamily strictly_balanced_reduction(const GraphFamily& fam);

}  // namespace ramseylab
