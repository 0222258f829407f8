#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

struct EtaConstants {
    Rational t;
    std::optional<Rational> eta1;  // nullopt = +infinity (no member denser than t)
    std::optional<Rational> eta2;  // nullopt = +infinity (no proper subgraph with 2+ edges)
    Rational eta;                  // min of the finite ones; all strictly positive
};

// eta1 = min over members with m2 > t of (e_F - 1) - t (v_F - 2);
// eta2 = min over members and proper subgraphs F' with e_{F'} >= 2 of
// (e_F - e_{F'}) - t (v_F - v_{F'}).  Members must be strictly 2-balanced.
EtaConstants eta_constant(const GraphFamily& fam);

// Gamma = ceil(2 t / eta), exact rational ceiling.
long long gamma_constant(const GraphFamily& fam);

enum class StepKind { Regular, Degenerate };

struct StepRecord {
    StepKind kind = StepKind::Regular;
    int member = -1;
    // Lex-least vertex map of the member onto the added copy (pattern vertex
    // order); this is what encoding emits.
    std::vector<int> vertex_images;
    // Regular steps:
    Edge root{-1, -1};
    int root_birth = -1;  // arrival index of the root edge
    // Degenerate steps:
    std::vector<Edge> overlap_edges;  // copy edges already present
    // Both:
    std::vector<int> new_vertices;  // in pattern-vertex order
    int e_after = 0;
    int v_after = 0;
};

enum class StopReason { GammaDegenerate, LogSize, Complete };

struct ExplorationTrace {
    int n = 0;  // label space of the explored cluster
    Edge seed{-1, -1};
    std::vector<StepRecord> steps;
    std::vector<std::pair<int, int>> snapshots;  // (e, v) for C_0 .. C_tau
    int tau = 0;
    int degenerate_count = 0;
    StopReason stop_reason = StopReason::Complete;
};

// The exploration process: start from the smallest edge; while possible,
// prefer the smallest regular copy rooted at the earliest-arrived edge, else
// the smallest degenerate copy; stop at the Gamma-th degenerate step, at
// v >= log_bound, or on completion.  C must be an F-cluster.
ExplorationTrace explore_cluster(const Graph& c, const GraphFamily& fam, long long gamma,
                                 int log_bound);

// Checks (e_{C_i} - 1) - t (v_{C_i} - 2) >= eta * d_i stepwise: regular steps
// leave the left side unchanged, degenerate steps raise it by at least eta.
bool verify_balance(const ExplorationTrace& trace, const Rational& t, const Rational& eta);

// Line-oriented encoding; decoding replays the construction and returns
// C_tau.  Root birth times must be non-decreasing across regular steps, else
// encoding raises FalsificationError.
std::vector<std::string> encode_trace(const ExplorationTrace& trace);
Graph decode_trace(const std::vector<std::string>& tokens, const GraphFamily& fam, int n);

// Connected components of the F-hypergraph of G, each as the spanned host
// subgraph (order-preservingly relabelled); edges in no copy excluded.
std::vector<Graph> find_clusters(const Graph& g, const GraphFamily& fam);

struct BadCluster {
    Graph cluster;
    Rational density;  // e/v, exceeding t
};

std::vector<BadCluster> scan_bad_clusters(const Graph& g, const GraphFamily& fam,
                                          const Rational& t);

}  // namespace ramseylab
