#include "ramseylab/density.hpp"

#include <algorithm>
#include <cstdint>

#include "ramseylab/errors.hpp"

namespace ramseylab {

namespace {

void check_cap(const Graph& g, const char* op) {
    if (g.n() > kDensityVertexCap)
        throw ResourceError(std::string(op) + ": graph has " + std::to_string(g.n()) +
                            " vertices, exhaustive density search is capped at " +
                            std::to_string(kDensityVertexCap));
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.n()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    return adj;
}

int induced_edges(const std::vector<uint32_t>& adj, uint32_t mask) {
    int e = 0;
    uint32_t rest = mask;
    while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        e += __builtin_popcount(adj[static_cast<size_t>(v)] & rest);
    }
    return e;
}

}  // namespace

Rational max_density(const Graph& g) {
    check_cap(g, "max_density");
    if (g.edge_count() == 0) return Rational(0);
    auto adj = adjacency_masks(g);
    // Maximise e/v by cross-multiplication on machine ints; exact since
    // e <= 190 and v <= 20.
    long long best_e = 0, best_v = 1;
    for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        long long e = induced_edges(adj, mask);
        long long v = __builtin_popcount(mask);
        if (e * best_v > best_e * v) {
            best_e = e;
            best_v = v;
        }
    }
    return Rational::of(best_e, best_v);
}

Rational max_two_density(const Graph& f) {
    check_cap(f, "max_two_density");
    auto adj = adjacency_masks(f);
    long long best_num = 1, best_den = 2;  // the 1/2 floor
    for (uint32_t mask = 1; mask < (1u << f.n()); ++mask) {
        long long v = __builtin_popcount(mask);
        if (v < 3) continue;
        long long e = induced_edges(adj, mask);
        if ((e - 1) * best_den > best_num * (v - 2)) {
            best_num = e - 1;
            best_den = v - 2;
        }
    }
    return Rational::of(best_num, best_den);
}

Rational family_two_density(const GraphFamily& fam) {
    Rational best = max_two_density(fam[0].graph);
    for (size_t i = 1; i < fam.size(); ++i) best = std::min(best, max_two_density(fam[i].graph));
    return best;
}

Rational mixed_two_density(const Graph& h, const Graph& l) {
    Rational m2h = max_two_density(h);
    Rational m2l = max_two_density(l);
    if (m2h < m2l)
        throw DomainError("mixed_two_density: requires m2(H) >= m2(L); swap the arguments");
    check_cap(h, "mixed_two_density");
    auto adj = adjacency_masks(h);
    // Value of a subset S is e(H[S]) / (|S| - 2 + 1/m2(L)).  Subsets with one
    // vertex have e = 0 and non-positive denominator; skipped.  Every |S| >= 2
    // has positive denominator since 1/m2(L) > 0.
    Rational inv = Rational(1) / m2l;
    Rational best(0);
    bool have = false;
    for (uint32_t mask = 1; mask < (1u << h.n()); ++mask) {
        long long v = __builtin_popcount(mask);
        if (v < 2) continue;
        long long e = induced_edges(adj, mask);
        Rational value = Rational(e) / (Rational(v - 2) + inv);
        if (!have || value > best) {
            best = value;
            have = true;
        }
    }
    if (!have) throw DomainError("mixed_two_density: H has no two vertices");
    return best;
}

BalancednessReport is_strictly_two_balanced(const Graph& f) {
    if (f.n() < 3) throw DomainError("is_strictly_two_balanced: need at least 3 vertices");
    check_cap(f, "is_strictly_two_balanced");
    auto adj = adjacency_masks(f);
    // F is strictly 2-balanced iff its own ratio d = (e-1)/(v-2) beats the
    // 1/2 floor and every proper induced subgraph on >= 3 vertices.  Proper
    // subgraphs on fewer vertices have m2 = 1/2 and spanning proper subgraphs
    // lose at least one edge, so induced subsets suffice.
    long long dn = f.edge_count() - 1, dd = f.n() - 2;
    BalancednessReport rep;
    if (2 * dn <= dd) {  // d <= 1/2
        rep.strictly_balanced = false;
        // Witness: a single edge if any (m2 = 1/2 not strictly below d).
        if (f.edge_count() > 0) {
            auto [u, v] = f.edge(0);
            rep.violating_vertices = {u, v};
            rep.violating_subgraph = induced_subgraph(f, rep.violating_vertices);
        }
        return rep;
    }
    uint32_t full = (f.n() == 32) ? ~0u : ((1u << f.n()) - 1);
    uint32_t worst_mask = 0;
    long long wn = 0, wd = 1;
    for (uint32_t mask = 1; mask < full; ++mask) {
        long long v = __builtin_popcount(mask);
        if (v < 3) continue;
        long long e = induced_edges(adj, mask);
        if ((e - 1) * dd >= dn * (v - 2)) {
            if (worst_mask == 0 || (e - 1) * wd > wn * (v - 2) ||
                ((e - 1) * wd == wn * (v - 2) && v < __builtin_popcount(worst_mask))) {
                worst_mask = mask;
                wn = e - 1;
                wd = v - 2;
            }
        }
    }
    if (worst_mask == 0) {
        rep.strictly_balanced = true;
        return rep;
    }
    rep.strictly_balanced = false;
    for (int v = 0; v < f.n(); ++v)
        if (worst_mask & (1u << v)) rep.violating_vertices.push_back(v);
    rep.violating_subgraph = induced_subgraph(f, rep.violating_vertices);
    return rep;
}

GraphFamily strictly_balanced_reduction(const GraphFamily& fam) {
    std::vector<NamedGraph> reduced;
    for (const auto& member : fam.members()) {
        const Graph& f = member.graph;
        check_cap(f, "strictly_balanced_reduction");
        Rational m2 = max_two_density(f);
        if (m2 <= Rational(1))
            throw DomainError("strictly_balanced_reduction: member '" + member.name +
                              "' has m2 <= 1 (forests are handled by the constructive colourings)");
        auto adj = adjacency_masks(f);
        // The maximiser of (e-1)/(v-2) of minimum size is strictly 2-balanced
        // and has the same m2.  Scan subsets grouped by size, smallest first.
        long long num = 0, den = 1;
        {
            // m2 > 1 means the max is attained by a subset (not the floor).
            num = static_cast<long long>(m2.num().convert_to<long long>());
            den = static_cast<long long>(m2.den().convert_to<long long>());
        }
        std::vector<uint32_t> winners;
        int best_size = f.n() + 1;
        for (uint32_t mask = 1; mask < (1u << f.n()); ++mask) {
            int v = __builtin_popcount(mask);
            if (v < 3 || v > best_size) continue;
            long long e = induced_edges(adj, mask);
            if ((e - 1) * den == num * (v - 2)) {
                if (v < best_size) {
                    best_size = v;
                    winners.clear();
                }
                winners.push_back(mask);
            }
        }
        if (winners.empty())
            throw FalsificationError("strictly_balanced_reduction: no maximiser found");
        // Tie-break among minimum-size maximisers: lexicographically least
        // canonical edge list of the relabelled induced subgraph.
        Graph best_graph;
        bool have = false;
        for (uint32_t mask : winners) {
            std::vector<int> vs;
            for (int v = 0; v < f.n(); ++v)
                if (mask & (1u << v)) vs.push_back(v);
            Graph cand = induced_subgraph(f, vs);
            if (!have || cand.edges() < best_graph.edges()) {
                best_graph = cand;
                have = true;
            }
        }
        reduced.push_back({member.name, best_graph});
    }
    return GraphFamily(std::move(reduced));
}

}  // namespace ramseylab
