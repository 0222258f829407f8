#pragma once

#include <cstdint>

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

// Counter-based generator: a fixed 64-bit mix of (seed, stream, counter).
// Identical inputs give identical outputs on every platform, independent of
// call order, so parallel trials reproduce exactly.
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Uniform in [0, 1) with 53 random bits.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Binomial random graph: pair {u,v} is included iff its uniform draw is below
// the threshold.  p enters as a 53-bit dyadic threshold (the nearest double);
// grid values are parsed exactly and rounded once, documented behaviour.
Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t stream = 0);

// Canonical index of the pair {u,v} (u < v) among the C(n,2) pairs.
std::uint64_t pair_index(int n, int u, int v);

}  // namespace ramseylab
