#include "ramseylab/smallgraphs.hpp"

#include <algorithm>
#include <unordered_set>

#include "ramseylab/errors.hpp"

namespace ramseylab {

namespace {

struct CanonSearch {
    int n;
    const std::vector<std::uint16_t>& adj;
    std::vector<int> perm;       // position -> vertex
    std::vector<char> used;
    std::vector<std::uint64_t> prefix_bits;  // bits accumulated per depth
    std::uint64_t best = 0;
    bool have_best = false;

    // Bits contributed by placing vertex v at position `depth`: adjacency to
    // the already placed vertices, most recent position = least significant.
    std::uint64_t contribution(int v, int depth) const {
        std::uint64_t bits = 0;
        for (int i = 0; i < depth; ++i)
            bits = (bits << 1) | ((adj[static_cast<size_t>(v)] >> perm[static_cast<size_t>(i)]) & 1u);
        return bits;
    }

    void rec(int depth, std::uint64_t acc) {
        if (depth == n) {
            if (!have_best || acc > best) {
                best = acc;
                have_best = true;
            }
            return;
        }
        // True twins are interchangeable; trying one of each class suffices.
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            bool twin_seen = false;
            for (int w : tried) {
                std::uint16_t a = adj[static_cast<size_t>(v)] & static_cast<std::uint16_t>(~(1u << w));
                std::uint16_t b = adj[static_cast<size_t>(w)] & static_cast<std::uint16_t>(~(1u << v));
                if (a == b) {
                    twin_seen = true;
                    break;
                }
            }
            if (twin_seen) continue;
            tried.push_back(v);
            std::uint64_t bits = contribution(v, depth);
            std::uint64_t next = (acc << depth) | bits;
            // Compare against the best's prefix at this depth.
            if (have_best) {
                int total_bits = depth * (depth + 1) / 2;
                std::uint64_t best_prefix = best >> (n * (n - 1) / 2 - total_bits);
                if (next < best_prefix) continue;  // cannot recover under max-lex
            }
            used[static_cast<size_t>(v)] = 1;
            perm[static_cast<size_t>(depth)] = v;
            rec(depth + 1, next);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    int n = g.n();
    if (n > 11) throw DomainError("canonical_code: supports at most 11 vertices");
    if (n <= 1) return 0;
    std::vector<std::uint16_t> adj(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        adj[static_cast<size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    CanonSearch search{n, adj, std::vector<int>(static_cast<size_t>(n)),
                       std::vector<char>(static_cast<size_t>(n), 0), {}, 0, false};
    search.rec(0, 0);
    return search.best;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1) throw DomainError("all_graphs_up_to_iso: n >= 1 required");
    std::vector<Graph> current = {empty_graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& parent : current) {
            for_each_extension(parent, [&](const Graph& child) {
                std::uint64_t code = canonical_code(child);
                if (seen.insert(code).second) next.push_back(child);
            });
        }
        current = std::move(next);
    }
    return current;
}

void for_each_extension(const Graph& parent, const std::function<void(const Graph&)>& fn) {
    int n = parent.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Edge> edges = parent.edges();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) edges.push_back({v, n});
        fn(Graph(n + 1, std::move(edges)));
    }
}

}  // namespace ramseylab
