#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

// Canonical form of a graph on at most 11 vertices: the maximum, over all
// vertex orderings, of the lower-triangle adjacency bitstring.  Equal codes
// iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on exactly n vertices, built by
// vertex extension with canonical-code deduplication.  Practical for n <= 8.
std::vector<Graph> all_graphs_up_to_iso(int n);

// Every graph obtained from `parent` by adding one vertex with an arbitrary
// neighbourhood.  Iterating this over all (n-1)-vertex representatives visits
// every n-vertex isomorphism class at least once, so per-graph checks can
// skip deduplication.
void for_each_extension(const Graph& parent, const std::function<void(const Graph&)>& fn);

}  // namespace ramseylab
