#include "ramseylab/copies.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ramseylab/errors.hpp"

namespace ramseylab {

namespace {

// Pattern vertices ordered component by component, BFS from the highest
// degree vertex, so each non-root vertex has a previously mapped neighbour.
std::vector<int> matching_order(const Graph& f) {
    std::vector<int> order;
    std::vector<char> seen(static_cast<size_t>(f.n()), 0);
    for (const auto& comp : connected_components(f)) {
        int root = comp[0];
        for (int v : comp)
            if (f.degree(v) > f.degree(root)) root = v;
        std::queue<int> q;
        q.push(root);
        seen[static_cast<size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : f.neighbours(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    return order;
}

struct CopySearch {
    const Graph& f;
    const Graph& g;
    std::vector<int> order;
    std::vector<int> map;    // pattern vertex -> host vertex
    std::vector<char> used;  // host vertex used
    std::set<std::vector<int>>* found = nullptr;

    void run(size_t pos) {
        if (pos == order.size()) {
            std::vector<int> edge_set;
            for (const auto& [a, b] : f.edges())
                edge_set.push_back(g.edge_index(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]));
            std::sort(edge_set.begin(), edge_set.end());
            found->insert(std::move(edge_set));
            return;
        }
        int pv = order[pos];
        // Candidates: neighbours of an already-mapped pattern-neighbour when
        // one exists, else every unused host vertex.
        int anchor = -1;
        for (int pw : f.neighbours(pv))
            if (map[static_cast<size_t>(pw)] >= 0) {
                anchor = map[static_cast<size_t>(pw)];
                break;
            }
        auto try_host = [&](int hv) {
            if (used[static_cast<size_t>(hv)]) return;
            if (g.degree(hv) < f.degree(pv)) return;
            for (int pw : f.neighbours(pv)) {
                int img = map[static_cast<size_t>(pw)];
                if (img >= 0 && !g.has_edge(hv, img)) return;
            }
            map[static_cast<size_t>(pv)] = hv;
            used[static_cast<size_t>(hv)] = 1;
            run(pos + 1);
            map[static_cast<size_t>(pv)] = -1;
            used[static_cast<size_t>(hv)] = 0;
        };
        if (anchor >= 0) {
            for (int hv : g.neighbours(anchor)) try_host(hv);
        } else {
            for (int hv = 0; hv < g.n(); ++hv) try_host(hv);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_copies(const Graph& f, const Graph& g) {
    if (f.n() == 0 || f.edge_count() == 0)
        throw DomainError("enumerate_copies: pattern must have at least one edge");
    for (int v = 0; v < f.n(); ++v)
        if (f.degree(v) == 0)
            throw DomainError("enumerate_copies: pattern has an isolated vertex; "
                              "copies are identified by edge set");
    std::set<std::vector<int>> found;
    if (f.n() > g.n() || f.edge_count() > g.edge_count())
        return {};
    CopySearch search{f, g, matching_order(f),
                      std::vector<int>(static_cast<size_t>(f.n()), -1),
                      std::vector<char>(static_cast<size_t>(g.n()), 0), &found};
    search.run(0);
    return {found.begin(), found.end()};
}

std::vector<std::vector<int>> copy_isomorphisms(const Graph& f, const Graph& g,
                                                const std::vector<int>& edges) {
    // Restrict the host to exactly the copy's edges; with |E(F)| = |edges|
    // any embedding into that subgraph hits every edge.
    if (static_cast<int>(edges.size()) != f.edge_count())
        throw DomainError("copy_isomorphisms: edge count mismatch");
    Graph restricted = subgraph_of_edges(g, edges);
    std::set<std::vector<int>> found;
    struct Rec {
        const Graph& f;
        const Graph& host;
        std::vector<int> order;
        std::vector<int> map;
        std::vector<char> used;
        std::set<std::vector<int>>* out;
        void run(size_t pos) {
            if (pos == order.size()) {
                out->insert(map);
                return;
            }
            int pv = order[pos];
            for (int hv = 0; hv < host.n(); ++hv) {
                if (used[static_cast<size_t>(hv)] || host.degree(hv) != f.degree(pv)) continue;
                bool ok = true;
                for (int pw : f.neighbours(pv)) {
                    int img = map[static_cast<size_t>(pw)];
                    if (img >= 0 && !host.has_edge(hv, img)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                map[static_cast<size_t>(pv)] = hv;
                used[static_cast<size_t>(hv)] = 1;
                run(pos + 1);
                map[static_cast<size_t>(pv)] = -1;
                used[static_cast<size_t>(hv)] = 0;
            }
        }
    };
    Rec rec{f, restricted, matching_order(f),
            std::vector<int>(static_cast<size_t>(f.n()), -1),
            std::vector<char>(static_cast<size_t>(restricted.n()), 0), &found};
    rec.run(0);
    return {found.begin(), found.end()};
}

}  // namespace ramseylab
