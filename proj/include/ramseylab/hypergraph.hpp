#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

struct HyperEdge {
    std::vector<int> vertices;  // ascending
    std::string provenance;     // which family member / which copy produced it
};

// Hypergraph whose vertices are host-graph edges (or odd-cycle identifiers
// for Aux).  Hyperedges are deduplicated as vertex sets.
struct Hypergraph {
    std::vector<std::string> vertex_labels;
    std::vector<HyperEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Hypergraph on E(G): one hyperedge per copy of each family member.
Hypergraph f_hypergraph(const Graph& g, const GraphFamily& fam);

// Every edge of G lies in a copy and the bipartite incidence structure is
// connected.  An isolated hypergraph vertex (covered by no copy) makes the
// structure disconnected by convention; see module docs.
bool is_f_cluster(const Graph& g, const GraphFamily& fam);

struct CoreReport {
    bool core = false;
    // When false: either a disconnection witness (two vertices in different
    // incidence components) or the first (edge, vertex) pair with no second
    // edge meeting it exactly in that vertex.
    std::optional<std::pair<int, int>> violating;  // (hyperedge index, vertex)
    bool disconnected = false;
};

CoreReport is_core(const Hypergraph& h);

struct PeelTrace {
    // (hyperedge, violating vertex) in removal order; hyperedges are given by
    // their vertex sets since indices shift during peeling.
    std::vector<std::pair<HyperEdge, int>> removed;
    Hypergraph residual;
    bool emptied() const { return residual.edges.empty(); }
};

// Repeatedly removes the lowest-indexed hyperedge having a vertex that no
// other hyperedge meets exactly in that vertex.  An empty residual certifies
// 2-list-colourability of the hypergraph.
PeelTrace peel_to_core(const Hypergraph& h);

// Proper 2-colouring with no monochromatic hyperedge, or nullopt.  Exhaustive
// backtracking with unit propagation; a singleton hyperedge forces nullopt.
std::optional<std::vector<int>> proper_two_colouring(const Hypergraph& h);

enum class FCoreStatus { Yes, No, Unknown };

struct FCoreReport {
    FCoreStatus status = FCoreStatus::Unknown;
    // Necessary condition (every host edge is the sole intersection of two
    // copies); reported alongside Unknown verdicts.
    bool weak_condition = false;
};

// Does the F-hypergraph of G contain a spanning, connected core
// subhypergraph?  Exhaustive over hyperedge subsets, capped.
FCoreReport is_f_core(const Graph& g, const GraphFamily& fam, int max_hyperedges = 20);

// Aux hypergraph on odd cycles C3, C5, ..., C_max: for every C*-graph member
// with non-star components F^1..F^m, one hyperedge per choice of odd cycles
// C^i containing F^i (multiset choices collapse to sets).  Vertex label "C5"
// corresponds to index (5-3)/2 = 1.
Hypergraph aux_hypergraph(const GraphFamily& fam, int max_cycle_len);

// Line "V E", then per hyperedge "k v1 ... vk" followed by a '#' provenance
// comment line.
std::string write_hypergraph_text(const Hypergraph& h);

}  // namespace ramseylab
