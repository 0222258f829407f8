#include "ramseylab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "ramseylab/density.hpp"
#include "ramseylab/errors.hpp"
#include "ramseylab/explore.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/structure.hpp"

namespace ramseylab {

PValue PValue::parse(const std::string& text) {
    PValue p;
    p.token = text;
    p.exact = Rational::parse(text);
    if (p.exact < Rational(0) || p.exact > Rational(1))
        throw DomainError("p value out of [0,1]: " + text);
    p.threshold = p.exact.to_double();
    return p;
}

PValue PValue::from_double(double value) {
    PValue p;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    p.token = buf;
    p.exact = Rational(0);  // not used for sampling
    p.threshold = value;
    if (!(value >= 0.0 && value <= 1.0)) throw DomainError("p value out of [0,1]");
    return p;
}

namespace {

// Wilson half-width at z = 1.96 over the decided trials.
double wilson_half_width(int successes, int decided) {
    if (decided == 0) return 1.0;
    double z = 1.96, nd = decided, ph = static_cast<double>(successes) / nd;
    double denom = 1.0 + z * z / nd;
    return z / denom * std::sqrt(ph * (1.0 - ph) / nd + z * z / (4.0 * nd * nd));
}

enum class TrialOutcome { Success, Failure, Undecided };

template <typename TrialFn>
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::string& mode_name,
                                TrialFn trial) {
    if (cfg.trials < 1) throw DomainError("sweep: trials must be >= 1");
    std::vector<SweepRow> rows;
    for (size_t gi = 0; gi < cfg.p_grid.size(); ++gi) {
        const PValue& p = cfg.p_grid[gi];
        std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
        // Trials are independent; the per-trial stream key makes results
        // identical for any job count.
        auto worker = [&](int lo, int hi) {
            for (int ti = lo; ti < hi; ++ti) {
                std::uint64_t stream =
                    counter_rng(cfg.seed, static_cast<std::uint64_t>(gi) + 1, static_cast<std::uint64_t>(ti));
                Graph sample = sample_gnp(cfg.n, p.threshold, cfg.seed, stream);
                outcomes[static_cast<size_t>(ti)] = trial(sample);
            }
        };
        int jobs = std::max(1, cfg.jobs);
        if (jobs == 1) {
            worker(0, cfg.trials);
        } else {
            std::vector<std::thread> pool;
            int chunk = (cfg.trials + jobs - 1) / jobs;
            for (int j = 0; j < jobs; ++j) {
                int lo = j * chunk, hi = std::min(cfg.trials, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(worker, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        SweepRow row;
        row.n = cfg.n;
        row.p = p.token;
        row.trials = cfg.trials;
        for (auto o : outcomes) {
            if (o == TrialOutcome::Success) ++row.successes;
            if (o == TrialOutcome::Undecided) ++row.undecided;
        }
        int decided = row.trials - row.undecided;
        if (static_cast<double>(row.undecided) >
            cfg.max_undecided_fraction * static_cast<double>(row.trials))
            throw ResourceError("sweep aborted: " + std::to_string(row.undecided) + "/" +
                                std::to_string(row.trials) + " trials at p=" + p.token +
                                " exceeded the oracle caps (limit " +
                                std::to_string(cfg.max_undecided_fraction) + ")");
        row.phat = decided ? static_cast<double>(row.successes) / decided : 0.0;
        row.stderr_ = wilson_half_width(row.successes, decided);
        row.mode = mode_name;
        row.family = cfg.family.label();
        row.seed = cfg.seed;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> ramsey_sweep(const SweepConfig& cfg) {
    if (cfg.mode != SweepMode::Ramsey) throw DomainError("ramsey_sweep: wrong mode");
    return run_sweep(cfg, "ramsey", [&](const Graph& sample) {
        try {
            auto res = good_colouring(sample, cfg.family, cfg.r, cfg.limits);
            if (res.verdict == OracleVerdict::None) return TrialOutcome::Success;
            if (res.verdict == OracleVerdict::Found) return TrialOutcome::Failure;
            return TrialOutcome::Undecided;
        } catch (const ResourceError&) {
            return TrialOutcome::Undecided;
        }
    });
}

std::vector<SweepRow> cluster_experiment(const SweepConfig& cfg) {
    if (cfg.mode != SweepMode::ClusterScan) throw DomainError("cluster_experiment: wrong mode");
    for (const auto& member : cfg.family.members()) {
        auto rep = is_strictly_two_balanced(member.graph);
        if (!rep.strictly_balanced)
            throw DomainError("cluster_experiment: family must be strictly 2-balanced");
    }
    Rational t = family_two_density(cfg.family);
    return run_sweep(cfg, "cluster_scan", [&, t](const Graph& sample) {
        return scan_bad_clusters(sample, cfg.family, t).empty() ? TrialOutcome::Success
                                                                : TrialOutcome::Failure;
    });
}

std::vector<SweepRow> unicyclic_experiment(const SweepConfig& cfg) {
    if (cfg.mode != SweepMode::Unicyclic) throw DomainError("unicyclic_experiment: wrong mode");
    return run_sweep(cfg, "unicyclic", [](const Graph& sample) {
        return is_at_most_unicyclic(sample) ? TrialOutcome::Success : TrialOutcome::Failure;
    });
}

Rational threshold_exponent(const GraphFamily& fam) {
    Rational m2 = family_two_density(fam);
    if (!(m2 > Rational(1)))
        throw DomainError("threshold_exponent: m2(family) <= 1; use star_forest_exponent or "
                          "the n^-1 regime");
    return Rational(-1) / m2;
}

Rational star_forest_exponent(const GraphFamily& fam, int r) {
    if (r < 2) throw DomainError("star_forest_exponent: r >= 2 required");
    int delta = -1;
    for (const auto& member : fam.members()) {
        if (!classify(member.graph).is_star_forest) continue;
        int maxdeg = 0;
        for (int v = 0; v < member.graph.n(); ++v) maxdeg = std::max(maxdeg, member.graph.degree(v));
        if (delta < 0 || maxdeg < delta) delta = maxdeg;
    }
    if (delta < 0) throw DomainError("star_forest_exponent: family has no star forest");
    long long s = static_cast<long long>(r - 1) * (delta - 1) + 1;
    return -(Rational(1) + Rational(1) / Rational(s));
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,p,trials,successes,undecided,phat,stderr,mode,family,seed\n";
    char buf[64];
    for (const auto& row : rows) {
        os << row.n << "," << row.p << "," << row.trials << "," << row.successes << ","
           << row.undecided << ",";
        std::snprintf(buf, sizeof buf, "%.6f", row.phat);
        os << buf << ",";
        std::snprintf(buf, sizeof buf, "%.6f", row.stderr_);
        os << buf << "," << row.mode << "," << row.family << "," << row.seed << "\n";
    }
    return os.str();
}

}  // namespace ramseylab
