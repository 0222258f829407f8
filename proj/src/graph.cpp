#include "ramseylab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "ramseylab/errors.hpp"

namespace ramseylab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw DomainError("Graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n_) throw DomainError("Graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("Graph: duplicate edge");
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int k) {
    std::vector<Edge> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.push_back({u, v});
    return Graph(k, std::move(es));
}

Graph cycle_graph(int len) {
    if (len < 3) throw DomainError("cycle_graph: need length >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < len; ++i) es.push_back({i, (i + 1) % len});
    return Graph(len, std::move(es));
}

Graph path_graph(int vertices) {
    if (vertices < 1) throw DomainError("path_graph: need >= 1 vertex");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < vertices; ++i) es.push_back({i, i + 1});
    return Graph(vertices, std::move(es));
}

Graph star_graph(int rays) {
    if (rays < 0) throw DomainError("star_graph: negative ray count");
    std::vector<Edge> es;
    for (int i = 1; i <= rays; ++i) es.push_back({0, i});
    return Graph(rays + 1, std::move(es));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph(a + b, std::move(es));
}

Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});          // outer cycle
        es.push_back({i, i + 5});                // spokes
        es.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph(10, std::move(es));
}

Graph broom_graph(int hairs) {
    if (hairs < 0) throw DomainError("broom_graph: negative hair count");
    std::vector<Edge> es = {{0, 1}, {1, 2}};
    for (int i = 0; i < hairs; ++i) es.push_back({2, 3 + i});
    return Graph(3 + hairs, std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const auto& [u, v] : b.edges()) es.push_back({u + a.n(), v + a.n()});
    return Graph(a.n() + b.n(), std::move(es));
}

Graph with_edge_removed(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw DomainError("with_edge_removed: bad edge index");
    std::vector<Edge> es = g.edges();
    es.erase(es.begin() + edge_index);
    return Graph(g.n(), std::move(es));
}

Graph with_vertex_removed(const Graph& g, int v) {
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.n() || pos[static_cast<size_t>(v)] != -1)
            throw DomainError("induced_subgraph: bad vertex set");
        pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges())
        if (pos[static_cast<size_t>(u)] >= 0 && pos[static_cast<size_t>(v)] >= 0)
            es.push_back({pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]});
    return Graph(static_cast<int>(keep.size()), std::move(es));
}

Graph subgraph_of_edges(const Graph& g, const std::vector<int>& edge_indices) {
    std::vector<Edge> es;
    for (int ei : edge_indices) {
        if (ei < 0 || ei >= g.edge_count()) throw DomainError("subgraph_of_edges: bad edge index");
        es.push_back(g.edge(ei));
    }
    return Graph(g.n(), std::move(es));
}

Graph spanned_subgraph(const Graph& g, const std::vector<int>& edge_indices,
                       std::vector<int>* out_vertex_map) {
    std::vector<int> touched;
    for (int ei : edge_indices) {
        if (ei < 0 || ei >= g.edge_count()) throw DomainError("spanned_subgraph: bad edge index");
        touched.push_back(g.edge(ei).first);
        touched.push_back(g.edge(ei).second);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < touched.size(); ++i) pos[static_cast<size_t>(touched[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int ei : edge_indices)
        es.push_back({pos[static_cast<size_t>(g.edge(ei).first)], pos[static_cast<size_t>(g.edge(ei).second)]});
    if (out_vertex_map) *out_vertex_map = touched;
    return Graph(static_cast<int>(touched.size()), std::move(es));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            members.push_back(v);
            for (int w : g.neighbours(v))
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
                    q.push(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

int cycle_rank(const Graph& g) {
    int c = static_cast<int>(connected_components(g).size());
    return g.edge_count() - g.n() + c;
}

bool is_at_most_unicyclic(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        int e = 0;
        for (int v : comp) e += g.degree(v);
        e /= 2;
        if (e > static_cast<int>(comp.size())) return false;
    }
    return true;
}

namespace {

// BFS girth cycle through each start vertex; keeps the best.
std::vector<int> shortest_cycle_impl(const Graph& g) {
    std::vector<int> best;
    std::vector<int> dist(static_cast<size_t>(g.n()));
    std::vector<int> parent(static_cast<size_t>(g.n()));
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (w == parent[static_cast<size_t>(v)]) continue;
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    q.push(w);
                } else {
                    // Cycle through s only counts if both walk ends trace back to s.
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[static_cast<size_t>(x)]) pw.push_back(x);
                    if (pv.back() != s || pw.back() != s) continue;
                    // Drop the common tail to get a simple cycle.
                    while (pv.size() >= 2 && pw.size() >= 2 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    if (pv.back() != pw.back()) continue;
                    // cyc = v .. LCA .. w; the edge vw closes it.
                    std::vector<int> cyc(pv.begin(), pv.end());
                    for (size_t i = pw.size() - 1; i-- > 0;) cyc.push_back(pw[i]);
                    if (best.empty() || cyc.size() < best.size()) best = cyc;
                }
            }
        }
    }
    return best;
}

}  // namespace

std::vector<int> shortest_cycle(const Graph& g) {
    if (cycle_rank(g) == 0) return {};
    std::vector<int> cyc = shortest_cycle_impl(g);
    // Canonical rotation: start at the least vertex, go toward its smaller neighbour.
    if (cyc.empty()) return cyc;
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() >= 3 && cyc[1] > cyc.back()) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

std::vector<int> unique_cycle_in_component(const Graph& g, const std::vector<int>& component) {
    // Peel leaves until only the cycle remains.
    std::vector<int> deg(static_cast<size_t>(g.n()), 0);
    std::vector<char> alive(static_cast<size_t>(g.n()), 0);
    for (int v : component) {
        alive[static_cast<size_t>(v)] = 1;
        deg[static_cast<size_t>(v)] = g.degree(v);
    }
    std::queue<int> q;
    for (int v : component)
        if (deg[static_cast<size_t>(v)] <= 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!alive[static_cast<size_t>(v)]) continue;
        alive[static_cast<size_t>(v)] = 0;
        for (int w : g.neighbours(v))
            if (alive[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] <= 1) q.push(w);
    }
    std::vector<int> on_cycle;
    for (int v : component)
        if (alive[static_cast<size_t>(v)]) on_cycle.push_back(v);
    if (on_cycle.empty()) return {};
    // Walk the cycle in order, starting at the least vertex.
    int start = *std::min_element(on_cycle.begin(), on_cycle.end());
    std::vector<int> order = {start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbours(cur)) {
            if (!alive[static_cast<size_t>(w)] || w == prev) continue;
            if (next == -1 || w < next) next = w;
        }
        if (next == -1) break;  // 2-cycle impossible in simple graphs; defensive
        prev = cur;
        cur = next;
        if (cur != start) order.push_back(cur);
    } while (cur != start);
    return order;
}

namespace {

bool embed_rec(const Graph& pattern, const Graph& host, std::vector<int>& map,
               std::vector<char>& used, const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) return true;
    int pv = order[pos];
    for (int hv = 0; hv < host.n(); ++hv) {
        if (used[static_cast<size_t>(hv)]) continue;
        if (host.degree(hv) < pattern.degree(pv)) continue;
        bool ok = true;
        for (int pw : pattern.neighbours(pv)) {
            int img = map[static_cast<size_t>(pw)];
            if (img >= 0 && !host.has_edge(hv, img)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<size_t>(pv)] = hv;
        used[static_cast<size_t>(hv)] = 1;
        if (embed_rec(pattern, host, map, used, order, pos + 1)) return true;
        map[static_cast<size_t>(pv)] = -1;
        used[static_cast<size_t>(hv)] = 0;
    }
    return false;
}

}  // namespace

bool embeds_into(const Graph& pattern, const Graph& host) {
    if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count()) return false;
    // Order: per component, BFS from the highest-degree vertex.
    std::vector<int> order;
    for (const auto& comp : connected_components(pattern)) {
        int root = comp[0];
        for (int v : comp)
            if (pattern.degree(v) > pattern.degree(root)) root = v;
        std::vector<char> seen(static_cast<size_t>(pattern.n()), 0);
        std::queue<int> q;
        q.push(root);
        seen[static_cast<size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : pattern.neighbours(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    std::vector<int> map(static_cast<size_t>(pattern.n()), -1);
    std::vector<char> used(static_cast<size_t>(host.n()), 0);
    return embed_rec(pattern, host, map, used, order, 0);
}

std::string degree_sequence_string(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

}  // namespace ramseylab
