#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ramseylab/colouring.hpp"
#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

struct NonrepetitiveResult {
    // Set when the component has an odd cycle, r = 2 and the cycle's lists are
    // identical; no nonrepetitive colouring exists then.  (With identical
    // lists everywhere this is exactly the nontrivial case.)
    bool nontrivial = false;
    std::optional<EdgeColouring> colouring;
};

// Orients G with out-degree <= 1 and colours every edge differently from the
// out-edge of its head; colour classes are star forests.  Requires m(G) <= 1
// and G connected.
NonrepetitiveResult nonrepetitive_colouring(const Graph& g, const ListAssignment& lists);

// Every monochromatic component is a star or an odd cycle (so every
// monochromatic subgraph is a C*-graph).  Requires m(G) <= 1.
EdgeColouring cstar_colouring(const Graph& g, const ListAssignment& lists);

// Every monochromatic component is a star or a single broom per nontrivial
// component (so every monochromatic subgraph is a B-graph).
EdgeColouring broom_colouring(const Graph& g, const ListAssignment& lists);

// 2-list-colouring with acyclic colour classes for hosts of max degree <= 3.
EdgeColouring forest_list_colouring(const Graph& g, const ListAssignment& lists);

enum class K5Branch { FiveCycle, EdgeNotInTriangle, K5MinusK3Class, K4Class, K4MinusClass };

struct K5Result {
    EdgeColouring colouring;
    K5Branch branch;
};

// Triangle-free-per-class colouring of K5 from arbitrary 2-lists, following
// the published case analysis; the branch taken is logged.  Unreachable cases
// raise FalsificationError.
K5Result colour_k5_for_k3(const ListAssignment& lists);

struct K6Result {
    EdgeColouring colouring;
    int tries = 0;
    bool used_fallback = false;
};

// K4-free-per-class colouring of K6 from arbitrary 2-lists: seeded uniform
// sampling (expected < 2 tries), exhaustive fallback after 64 tries.
K6Result colour_k6_for_k4(const ListAssignment& lists, std::uint64_t seed);

enum class SparseBranch { Orientation, K5Delegate, ExhaustiveFallback };

struct SparseResult {
    EdgeColouring colouring;
    std::vector<SparseBranch> branches;  // in the order taken
};

// Triangle-free-per-class 2-list colouring for hosts with e/v <= 2, by the
// recursive neighbourhood-orientation extension; K5 components are delegated.
SparseResult sparse_triangle_free_colouring(const Graph& g, const ListAssignment& lists);

// F(B,C): cycle of length ell with a (2b-1)-ray star at each cycle vertex.
Graph build_broom_cycle_gadget(int hairs, int cycle_len);

// T(B,S): two-layer rooted tree, root degree 2*max(b+1, s) - 1, each child
// has s children.
Graph build_broom_star_tree(int hairs, int rays);

struct WitnessLog {
    int k = 0;      // star components of Y
    int m = 0;      // non-star components of Y
    int t = 0;      // components of X (list witness)
    int x = 0;      // components of X (plain witness)
    int r = 0;      // max member components inside one aux cycle
    int rS = 0;     // max star components of a contributing member
    int hairs = 0;  // b, hairs of the covering broom B
    int palette = 0;
    int gprime_copies = 0;
    int tbs_copies = 0;
    int aux_edge_count = 0;
    std::vector<int> aux_core_lengths;  // V(A') as cycle lengths
    bool star_forest_route = false;
    int star_copies = 0;
    int star_rays = 0;
    std::string chosen_b_member;
    std::string chosen_cstar_member;
};

struct WitnessPackage {
    Graph host;
    std::optional<ListAssignment> lists;  // absent for plain-Ramsey witnesses
    GraphFamily target;
    WitnessLog log;
};

// List-Ramsey witness with m(host) <= 1 for a family containing a B-graph and
// a C*-graph: pair-list copies of the T(B,S)/F(B,C) gadget union.
WitnessPackage build_list_ramsey_witness(const GraphFamily& fam);

// Plain (identical-colouring) Ramsey witness, or nullopt when the truncated
// Aux is 2-colourable and the family has no star forest (a bounded verdict:
// truncation colourability does not decide the full Aux).
std::optional<WitnessPackage> build_plain_ramsey_witness(const GraphFamily& fam, int aux_cap);

// Red/blue colouring of an m <= 1 host guided by a proper 2-colouring phi of
// the truncated Aux (keyed by odd cycle length); no member of fam becomes
// monochromatic.  fam must contain no star forest.
EdgeColouring aux_guided_colouring(const Graph& g, const GraphFamily& fam,
                                   const std::map<int, int>& phi);

// Smallest b such that every component of the B-graph x embeds into broom(b).
int broom_hairs_for(const Graph& x);

}  // namespace ramseylab
