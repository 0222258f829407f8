#pragma once

#include <vector>

#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

// Edge sets (canonical G-edge indices, ascending) of all subgraphs of G
// isomorphic to F, not necessarily induced.  Copies are identified by edge
// set, so automorphic vertex maps collapse; output is sorted.
std::vector<std::vector<int>> enumerate_copies(const Graph& f, const Graph& g);

// All vertex maps phi : V(F) -> V(G) whose image edge set is exactly `edges`
// (given as ascending G-edge indices).  Used by trace encoding to pick the
// lexicographically least representative of a copy.
std::vector<std::vector<int>> copy_isomorphisms(const Graph& f, const Graph& g,
                                                const std::vector<int>& edges);

}  // namespace ramseylab
