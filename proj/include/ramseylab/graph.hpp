#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ramseylab {

// Unordered edge, stored with u < v.
using Edge = std::pair<int, int>;

// Finite simple undirected graph with a fixed 0-indexed labeling.  The edge
// list is kept sorted lexicographically; an edge's position in that list is
// its canonical index, used by list assignments, hypergraphs and traces.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    // Canonical index of {u,v}, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- builders ---------------------------------------------------------

Graph empty_graph(int n);
Graph complete_graph(int k);
Graph cycle_graph(int len);
Graph path_graph(int vertices);
Graph star_graph(int rays);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
// Path of length two plus `hairs` extra leaves on one endpoint.  Vertex 0 is
// the far path end, vertex 2 carries the hairs.  broom(0) = P3, broom(1) = P4.
Graph broom_graph(int hairs);
Graph disjoint_union(const Graph& a, const Graph& b);

// --- surgery ----------------------------------------------------------

Graph with_edge_removed(const Graph& g, int edge_index);
Graph with_vertex_removed(const Graph& g, int v);
// Induced subgraph on `keep`, relabelled order-preservingly to 0..k-1.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
// Subgraph made of exactly the given edges (by canonical index), on the full
// vertex set of g.
Graph subgraph_of_edges(const Graph& g, const std::vector<int>& edge_indices);
// Same but restricted to the touched vertices, relabelled order-preservingly.
// When out_vertex_map is non-null it receives new-label -> old-label.
Graph spanned_subgraph(const Graph& g, const std::vector<int>& edge_indices,
                       std::vector<int>* out_vertex_map = nullptr);

// --- queries ----------------------------------------------------------

bool is_connected(const Graph& g);
// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
// e - v + c summed over components; 0 iff forest.
int cycle_rank(const Graph& g);
// Every component has at most one cycle, i.e. m(G) <= 1.
bool is_at_most_unicyclic(const Graph& g);
// Vertices of one shortest cycle in order (empty if forest).  A shortest
// cycle is chordless, which several colouring routines rely on.
std::vector<int> shortest_cycle(const Graph& g);
// The unique cycle of a component of an at-most-unicyclic graph, in cycle
// order; empty when the component is a tree.  `component` is a vertex set.
std::vector<int> unique_cycle_in_component(const Graph& g, const std::vector<int>& component);

// True if there is a (not necessarily induced) embedding of `pattern` into
// `host`; used for broom/star/path containment checks.
bool embeds_into(const Graph& pattern, const Graph& host);

std::string degree_sequence_string(const Graph& g);

}  // namespace ramseylab
