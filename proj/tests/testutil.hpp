#pragma once

// Test-only helpers: independent brute-force oracles (kept deliberately
// separate from the library's implementations) and seeded fixture builders.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ramseylab/colouring.hpp"
#include "ramseylab/family.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/hypergraph.hpp"
#include "ramseylab/rational.hpp"

namespace testutil {

using namespace ramseylab;

// ---- independent density oracles (plain subset scans, int64 fractions) ----

inline std::pair<long long, long long> oracle_max_density(const Graph& g) {
    long long bn = 0, bd = 1;
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        long long v = __builtin_popcount(mask);
        long long e = 0;
        for (const auto& [a, b] : g.edges())
            if ((mask >> a & 1) && (mask >> b & 1)) ++e;
        if (e * bd > bn * v) {
            bn = e;
            bd = v;
        }
    }
    return {bn, bd};
}

inline std::pair<long long, long long> oracle_max_two_density(const Graph& g) {
    long long bn = 1, bd = 2;
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        long long v = __builtin_popcount(mask);
        if (v < 3) continue;
        long long e = 0;
        for (const auto& [a, b] : g.edges())
            if ((mask >> a & 1) && (mask >> b & 1)) ++e;
        if ((e - 1) * bd > bn * (v - 2)) {
            bn = e - 1;
            bd = v - 2;
        }
    }
    return {bn, bd};
}

// ---- independent copy enumeration: all vertex injections, no pruning ----

inline std::vector<std::vector<int>> oracle_copies(const Graph& f, const Graph& g) {
    std::set<std::vector<int>> found;
    std::vector<int> map(static_cast<size_t>(f.n()), -1);
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    std::function<void(int)> rec = [&](int pv) {
        if (pv == f.n()) {
            std::vector<int> es;
            for (const auto& [a, b] : f.edges())
                es.push_back(g.edge_index(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]));
            std::sort(es.begin(), es.end());
            found.insert(es);
            return;
        }
        for (int hv = 0; hv < g.n(); ++hv) {
            if (used[static_cast<size_t>(hv)]) continue;
            bool ok = true;
            for (int pw = 0; pw < pv && ok; ++pw)
                if (f.has_edge(pv, pw) && !g.has_edge(hv, map[static_cast<size_t>(pw)])) ok = false;
            if (!ok) continue;
            used[static_cast<size_t>(hv)] = 1;
            map[static_cast<size_t>(pv)] = hv;
            rec(pv + 1);
            used[static_cast<size_t>(hv)] = 0;
            map[static_cast<size_t>(pv)] = -1;
        }
    };
    rec(0);
    return {found.begin(), found.end()};
}

// Monochromatic copy of any member inside the colouring?
inline bool oracle_has_mono_copy(const Graph& g, const GraphFamily& fam,
                                 const EdgeColouring& col) {
    for (const auto& member : fam.members())
        for (const auto& copy : oracle_copies(member.graph, g)) {
            int c = col.colour(copy[0]);
            bool mono = true;
            for (int e : copy)
                if (col.colour(e) != c) mono = false;
            if (mono) return true;
        }
    return false;
}

// Complete enumeration of r-colourings; returns one good colouring or
// nullopt.  Usable up to ~2^20 total colourings.
inline std::optional<EdgeColouring> oracle_good_colouring(const Graph& g, const GraphFamily& fam,
                                                          int r) {
    int m = g.edge_count();
    std::vector<int> col(static_cast<size_t>(m), 0);
    auto copies = std::vector<std::vector<int>>();
    for (const auto& member : fam.members())
        for (const auto& c : oracle_copies(member.graph, g)) copies.push_back(c);
    while (true) {
        bool mono = false;
        for (const auto& copy : copies) {
            int c0 = col[static_cast<size_t>(copy[0])];
            bool all = true;
            for (int e : copy)
                if (col[static_cast<size_t>(e)] != c0) all = false;
            if (all) {
                mono = true;
                break;
            }
        }
        if (!mono) return EdgeColouring{col};
        int pos = 0;
        while (pos < m && col[static_cast<size_t>(pos)] == r - 1) col[static_cast<size_t>(pos++)] = 0;
        if (pos == m) return std::nullopt;
        ++col[static_cast<size_t>(pos)];
    }
}

// Complete enumeration of 2-colourings of a hypergraph's vertices.
inline std::optional<std::vector<int>> oracle_two_colouring(const Hypergraph& h) {
    int n = h.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& he : h.edges) {
            bool all0 = true, all1 = true;
            for (int v : he.vertices) {
                if (mask >> v & 1) all0 = false;
                else all1 = false;
            }
            if (all0 || all1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> col;
            for (int v = 0; v < n; ++v) col.push_back(mask >> v & 1);
            return col;
        }
    }
    return std::nullopt;
}

// ---- seeded fixtures ----

inline ListAssignment random_two_lists(const Graph& g, int palette, std::uint64_t seed,
                                       std::uint64_t stream) {
    ListAssignment la;
    la.r = 2;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::uint64_t h = counter_rng(seed, stream, static_cast<std::uint64_t>(e));
        int a = static_cast<int>(h % static_cast<std::uint64_t>(palette));
        int b = static_cast<int>((h >> 20) % static_cast<std::uint64_t>(palette - 1));
        if (b >= a) ++b;
        la.list_of.push_back({std::min(a, b), std::max(a, b)});
    }
    return la;
}

// Random F-cluster: glue `steps` member copies onto a growing graph, each
// sharing at least one edge with what is already there.
inline Graph grow_random_cluster(const GraphFamily& fam, int steps, std::uint64_t seed,
                                 std::uint64_t stream, int vertex_cap = 14) {
    std::uint64_t ctr = 0;
    auto rnd = [&](std::uint64_t mod) { return counter_rng(seed, stream, ctr++) % mod; };
    const Graph& first = fam[rnd(fam.size())].graph;
    std::vector<Edge> edges = first.edges();
    int n = first.n();
    for (int s = 0; s < steps; ++s) {
        if (n >= vertex_cap) break;
        const Graph& f = fam[rnd(fam.size())].graph;
        Graph current(n, edges);
        // Map one pattern edge onto one existing edge, the rest of the
        // pattern onto a mix of old and new vertices.
        const Edge& host_e = current.edge(static_cast<int>(rnd(static_cast<std::uint64_t>(current.edge_count()))));
        const Edge& pat_e = f.edge(static_cast<int>(rnd(static_cast<std::uint64_t>(f.edge_count()))));
        std::vector<int> map(static_cast<size_t>(f.n()), -1);
        bool flip = rnd(2) == 1;
        map[static_cast<size_t>(pat_e.first)] = flip ? host_e.second : host_e.first;
        map[static_cast<size_t>(pat_e.second)] = flip ? host_e.first : host_e.second;
        std::vector<char> used(static_cast<size_t>(n + f.n()), 0);
        used[static_cast<size_t>(map[static_cast<size_t>(pat_e.first)])] = 1;
        used[static_cast<size_t>(map[static_cast<size_t>(pat_e.second)])] = 1;
        for (int pv = 0; pv < f.n(); ++pv) {
            if (map[static_cast<size_t>(pv)] != -1) continue;
            if (rnd(3) == 0) {  // try an existing vertex
                int cand = static_cast<int>(rnd(static_cast<std::uint64_t>(n)));
                if (!used[static_cast<size_t>(cand)]) {
                    map[static_cast<size_t>(pv)] = cand;
                    used[static_cast<size_t>(cand)] = 1;
                    continue;
                }
            }
            map[static_cast<size_t>(pv)] = n++;
            used[static_cast<size_t>(map[static_cast<size_t>(pv)])] = 1;
        }
        for (const auto& [a, b] : f.edges()) {
            int u = map[static_cast<size_t>(a)], v = map[static_cast<size_t>(b)];
            Edge e{std::min(u, v), std::max(u, v)};
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace testutil
