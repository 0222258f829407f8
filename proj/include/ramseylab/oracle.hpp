#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramseylab/colouring.hpp"
#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

struct SearchLimits {
    int max_edges = 30;                    // exhaustive-mode edge cap
    std::uint64_t max_nodes = 200'000'000;  // search-tree node budget
};

enum class OracleVerdict {
    Found,      // a good colouring exists (returned)
    None,       // proved that no good colouring exists
    Undecided,  // node budget exhausted
};

struct ColouringResult {
    OracleVerdict verdict = OracleVerdict::Undecided;
    std::optional<EdgeColouring> colouring;
    std::uint64_t nodes = 0;
};

// r-colouring of E(G) with no monochromatic copy of any member, or None iff
// G is Ramsey for (fam, r).  Backtracking over edges in degeneracy order,
// pruning the moment a monochromatic copy completes, first edge's colour
// fixed to break palette symmetry.  Decomposes into clusters first.
ColouringResult good_colouring(const Graph& g, const GraphFamily& fam, int r,
                               const SearchLimits& limits = {});

struct RamseyVerdict {
    OracleVerdict verdict = OracleVerdict::Undecided;
    bool is_ramsey() const { return verdict == OracleVerdict::None; }
    std::optional<EdgeColouring> witness;  // good colouring when not Ramsey
    std::uint64_t nodes = 0;
};

// Does every |seq|-colouring contain, for some i, a copy of seq[i] in colour
// i?  2 <= |seq| <= 4.
RamseyVerdict is_asymmetric_ramsey(const Graph& g, const std::vector<NamedGraph>& seq,
                                   const SearchLimits& limits = {});

// Colouring choosing each edge's colour from its list, avoiding monochromatic
// member copies; None iff the assignment is bad (a list-Ramsey witness).
ColouringResult colouring_from_lists(const Graph& g, const GraphFamily& fam,
                                     const ListAssignment& lists,
                                     const SearchLimits& limits = {});

enum class BadListOutcome {
    Found,
    NotFoundComplete,   // palette_cap >= r * e_G exhausted: no bad assignment exists
    NotFoundBounded,    // palette exhausted below the completeness bound
    NotFoundBudget,     // node budget ran out
};

struct BadListResult {
    BadListOutcome outcome = BadListOutcome::NotFoundBudget;
    std::optional<ListAssignment> assignment;
    std::uint64_t nodes = 0;
};

// Searches canonical list assignments (colours in first-use order, pruned by
// host automorphisms) over palettes of at most palette_cap colours.  The
// search is complete once palette_cap >= r * e_G.
BadListResult find_bad_list_assignment(const Graph& g, const GraphFamily& fam, int r,
                                       int palette_cap, std::uint64_t budget);

struct MinimalityReport {
    OracleVerdict ramsey = OracleVerdict::Undecided;
    bool minimal = false;
    bool decided = false;  // false when some search hit the node budget
    // Good colouring of G minus edge i, for each i (present when minimal).
    std::vector<EdgeColouring> deletion_certificates;
    std::uint64_t nodes = 0;
};

// Edge-minimality: G is Ramsey and every single-edge-deleted subgraph is not.
// Isolated vertices are ignored.
MinimalityReport is_minimally_ramsey(const Graph& g, const GraphFamily& fam, int r,
                                     const SearchLimits& limits = {});

// Zero monochromatic member copies per colour class; used to revalidate every
// witness this module hands out.
bool colouring_avoids_family(const Graph& g, const GraphFamily& fam, const EdgeColouring& col);

}  // namespace ramseylab
