#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramseylab/family.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

struct PValue {
    std::string token;  // echoed verbatim into the CSV
    Rational exact;
    double threshold;  // 53-bit dyadic value used for sampling

    static PValue parse(const std::string& text);
    static PValue from_double(double p);
};

enum class SweepMode { Ramsey, ClusterScan, Unicyclic };

struct SweepConfig {
    int n = 0;
    std::vector<PValue> p_grid;
    int trials = 1;
    int r = 2;
    GraphFamily family;
    std::uint64_t seed = 0;
    SweepMode mode = SweepMode::Ramsey;
    SearchLimits limits{400, 2'000'000};
    int jobs = 1;
    // Abort when more than this fraction of a grid point's trials exceed the
    // oracle caps.
    double max_undecided_fraction = 0.2;
};

struct SweepRow {
    int n = 0;
    std::string p;
    int trials = 0;
    int successes = 0;
    int undecided = 0;
    double phat = 0.0;
    double stderr_ = 0.0;  // Wilson-interval half-width over decided trials
    std::string mode;
    std::string family;
    std::uint64_t seed = 0;
};

// Success = the sample is Ramsey for (family, r).  Cap-exceeding samples are
// counted as undecided and excluded from phat.
std::vector<SweepRow> ramsey_sweep(const SweepConfig& cfg);

// Success = the sample has no F-cluster with e/v > m2(family).
std::vector<SweepRow> cluster_experiment(const SweepConfig& cfg);

// Success = every component of the sample has at most one cycle.
std::vector<SweepRow> unicyclic_experiment(const SweepConfig& cfg);

// -1 / m2(family); requires m2 > 1.
Rational threshold_exponent(const GraphFamily& fam);

// -(1 + 1/s) with s = (r-1)(Delta-1) + 1, Delta the smallest maximum degree
// over star-forest members.
Rational star_forest_exponent(const GraphFamily& fam, int r);

// Header: n,p,trials,successes,undecided,phat,stderr,mode,family,seed
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace ramseylab
