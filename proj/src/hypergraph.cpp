#include "ramseylab/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ramseylab/copies.hpp"
#include "ramseylab/errors.hpp"
#include "ramseylab/structure.hpp"

namespace ramseylab {

namespace {

std::string edge_label(const Graph& g, int ei) {
    auto [u, v] = g.edge(ei);
    return std::to_string(u) + "-" + std::to_string(v);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

Hypergraph f_hypergraph(const Graph& g, const GraphFamily& fam) {
    Hypergraph h;
    for (int ei = 0; ei < g.edge_count(); ++ei) h.vertex_labels.push_back(edge_label(g, ei));
    std::set<std::vector<int>> seen;
    for (size_t mi = 0; mi < fam.size(); ++mi) {
        auto copies = enumerate_copies(fam[mi].graph, g);
        for (size_t ci = 0; ci < copies.size(); ++ci) {
            if (!seen.insert(copies[ci]).second) continue;
            h.edges.push_back({copies[ci], fam[mi].name + "#" + std::to_string(ci)});
        }
    }
    return h;
}

bool is_f_cluster(const Graph& g, const GraphFamily& fam) {
    if (g.edge_count() == 0) throw DomainError("is_f_cluster: host graph has no edges");
    Hypergraph h = f_hypergraph(g, fam);
    std::vector<char> covered(static_cast<size_t>(h.vertex_count()), 0);
    UnionFind uf(h.vertex_count());
    for (const auto& he : h.edges) {
        for (int v : he.vertices) {
            covered[static_cast<size_t>(v)] = 1;
            uf.unite(he.vertices[0], v);
        }
    }
    for (char c : covered)
        if (!c) return false;
    int root = uf.find(0);
    for (int v = 1; v < h.vertex_count(); ++v)
        if (uf.find(v) != root) return false;
    return true;
}

CoreReport is_core(const Hypergraph& h) {
    CoreReport rep;
    if (h.edge_count() == 0) {
        rep.core = false;
        rep.disconnected = h.vertex_count() > 0;
        return rep;
    }
    // Connectivity of the incidence structure, counting uncovered vertices as
    // separate components.
    UnionFind uf(h.vertex_count());
    std::vector<char> covered(static_cast<size_t>(h.vertex_count()), 0);
    for (const auto& he : h.edges)
        for (int v : he.vertices) {
            covered[static_cast<size_t>(v)] = 1;
            uf.unite(he.vertices[0], v);
        }
    int root = -1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (!covered[static_cast<size_t>(v)]) {
            rep.disconnected = true;
            rep.core = false;
            return rep;
        }
        if (root == -1) root = uf.find(v);
        else if (uf.find(v) != root) {
            rep.disconnected = true;
            rep.core = false;
            return rep;
        }
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int v : h.edges[static_cast<size_t>(i)].vertices) {
            bool found = false;
            for (int j = 0; j < h.edge_count() && !found; ++j) {
                if (j == i) continue;
                const auto& other = h.edges[static_cast<size_t>(j)].vertices;
                if (!std::binary_search(other.begin(), other.end(), v)) continue;
                // Intersection must be exactly {v}.
                bool sole = true;
                for (int w : h.edges[static_cast<size_t>(i)].vertices) {
                    if (w == v) continue;
                    if (std::binary_search(other.begin(), other.end(), w)) {
                        sole = false;
                        break;
                    }
                }
                found = sole;
            }
            if (!found) {
                rep.core = false;
                rep.violating = {i, v};
                return rep;
            }
        }
    }
    rep.core = true;
    return rep;
}

PeelTrace peel_to_core(const Hypergraph& h) {
    PeelTrace trace;
    std::vector<HyperEdge> live = h.edges;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < live.size(); ++i) {
            int bad_vertex = -1;
            for (int v : live[i].vertices) {
                bool met_solely = false;
                for (size_t j = 0; j < live.size() && !met_solely; ++j) {
                    if (j == i) continue;
                    const auto& other = live[j].vertices;
                    if (!std::binary_search(other.begin(), other.end(), v)) continue;
                    bool sole = true;
                    for (int w : live[i].vertices) {
                        if (w == v) continue;
                        if (std::binary_search(other.begin(), other.end(), w)) {
                            sole = false;
                            break;
                        }
                    }
                    met_solely = sole;
                }
                if (!met_solely) {
                    bad_vertex = v;
                    break;
                }
            }
            if (bad_vertex >= 0) {
                trace.removed.push_back({live[i], bad_vertex});
                live.erase(live.begin() + static_cast<long>(i));
                changed = true;
                break;  // restart at the lowest index
            }
        }
    }
    trace.residual.vertex_labels = h.vertex_labels;
    trace.residual.edges = std::move(live);
    return trace;
}

namespace {

struct TwoColourSearch {
    const Hypergraph& h;
    std::vector<int> colour;  // -1 unassigned

    // Returns false on conflict.  Assignments made by propagation are pushed
    // onto the trail for undo.
    bool propagate(std::vector<int>& trail) {
        bool again = true;
        while (again) {
            again = false;
            for (const auto& he : h.edges) {
                int unassigned = -1, common = -1;
                bool mixed = false;
                int left = 0;
                for (int w : he.vertices) {
                    int cw = colour[static_cast<size_t>(w)];
                    if (cw == -1) {
                        unassigned = w;
                        ++left;
                        if (left > 1) break;
                    } else if (common == -1) {
                        common = cw;
                    } else if (cw != common) {
                        mixed = true;
                        break;
                    }
                }
                if (mixed || left > 1) continue;
                if (left == 0) return false;  // fully assigned, monochromatic
                // One vertex left: force the opposite colour.
                colour[static_cast<size_t>(unassigned)] = 1 - common;
                trail.push_back(unassigned);
                again = true;
            }
        }
        return true;
    }

    bool run(int next) {
        int n = h.vertex_count();
        while (next < n && colour[static_cast<size_t>(next)] != -1) ++next;
        if (next == n) return true;
        for (int c = 0; c < 2; ++c) {
            std::vector<int> trail;
            colour[static_cast<size_t>(next)] = c;
            trail.push_back(next);
            if (propagate(trail) && run(next + 1)) return true;
            for (int v : trail) colour[static_cast<size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> proper_two_colouring(const Hypergraph& h) {
    for (const auto& he : h.edges)
        if (he.vertices.size() <= 1) return std::nullopt;  // singleton is always monochromatic
    TwoColourSearch search{h, std::vector<int>(static_cast<size_t>(h.vertex_count()), -1)};
    std::vector<int> trail;
    if (!search.propagate(trail)) return std::nullopt;
    if (search.run(0)) return search.colour;
    return std::nullopt;
}

namespace {

bool subhypergraph_is_spanning_connected_core(const Hypergraph& h, const std::vector<int>& pick) {
    Hypergraph sub;
    sub.vertex_labels = h.vertex_labels;
    for (int i : pick) sub.edges.push_back(h.edges[static_cast<size_t>(i)]);
    auto rep = is_core(sub);
    return rep.core;
}

}  // namespace

FCoreReport is_f_core(const Graph& g, const GraphFamily& fam, int max_hyperedges) {
    Hypergraph h = f_hypergraph(g, fam);
    FCoreReport rep;
    // Weak necessary condition: every host edge is the sole intersection of
    // two copies.
    rep.weak_condition = true;
    for (int v = 0; v < h.vertex_count() && rep.weak_condition; ++v) {
        bool ok = false;
        for (size_t i = 0; i < h.edges.size() && !ok; ++i) {
            const auto& a = h.edges[i].vertices;
            if (!std::binary_search(a.begin(), a.end(), v)) continue;
            for (size_t j = i + 1; j < h.edges.size() && !ok; ++j) {
                const auto& b = h.edges[j].vertices;
                if (!std::binary_search(b.begin(), b.end(), v)) continue;
                std::vector<int> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                ok = inter.size() == 1;
            }
        }
        if (!ok) rep.weak_condition = false;
    }
    if (h.edge_count() > max_hyperedges) {
        rep.status = FCoreStatus::Unknown;
        return rep;
    }
    if (!rep.weak_condition) {
        rep.status = FCoreStatus::No;
        return rep;
    }
    // is_core is monotone in neither direction, so enumerate all subsets.
    int m = h.edge_count();
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> pick;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) pick.push_back(i);
        if (subhypergraph_is_spanning_connected_core(h, pick)) {
            rep.status = FCoreStatus::Yes;
            return rep;
        }
    }
    rep.status = FCoreStatus::No;
    return rep;
}

Hypergraph aux_hypergraph(const GraphFamily& fam, int max_cycle_len) {
    if (max_cycle_len < 3 || max_cycle_len % 2 == 0)
        throw DomainError("aux_hypergraph: max_cycle_len must be odd and >= 3");
    Hypergraph aux;
    for (int len = 3; len <= max_cycle_len; len += 2)
        aux.vertex_labels.push_back("C" + std::to_string(len));
    auto cycle_index = [](int len) { return (len - 3) / 2; };

    bool any_cstar = false;
    std::set<std::vector<int>> seen;
    for (const auto& member : fam.members()) {
        GraphClass cls = classify(member.graph);
        if (!cls.is_cstar_graph) continue;
        any_cstar = true;
        // Non-star components are paths with >= 3 edges or odd cycles; a path
        // with k edges fits in C_m iff m >= k+1, a cycle only in itself.
        std::vector<std::vector<int>> options;  // per component, candidate cycle lengths
        bool feasible = true;
        for (const auto& cs : cls.components) {
            if (cs.shape == ComponentShape::SingleVertex || cs.shape == ComponentShape::Star)
                continue;
            std::vector<int> lens;
            if (cs.shape == ComponentShape::Path) {
                int k = cs.edge_count;
                for (int len = 3; len <= max_cycle_len; len += 2)
                    if (len >= k + 1) lens.push_back(len);
            } else if (cs.shape == ComponentShape::OddCycle) {
                int len = static_cast<int>(cs.vertices.size());
                if (len <= max_cycle_len) lens.push_back(len);
            } else {
                throw FalsificationError("aux_hypergraph: C*-graph with a non-path non-odd-cycle "
                                         "non-star component");
            }
            if (lens.empty()) feasible = false;
            options.push_back(std::move(lens));
        }
        if (!feasible) continue;
        if (options.empty()) continue;  // star forest member: contributes no Aux edge
        // Cartesian product of the options; multiset choices collapse to sets.
        std::vector<size_t> idx(options.size(), 0);
        while (true) {
            std::vector<int> verts;
            for (size_t i = 0; i < options.size(); ++i)
                verts.push_back(cycle_index(options[i][idx[i]]));
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            if (seen.insert(verts).second)
                aux.edges.push_back({verts, member.name});
            size_t pos = 0;
            while (pos < options.size() && ++idx[pos] == options[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == options.size()) break;
        }
    }
    if (!any_cstar) throw DomainError("aux_hypergraph: family contains no C*-graph");
    std::sort(aux.edges.begin(), aux.edges.end(), [](const HyperEdge& a, const HyperEdge& b) {
        return a.vertices != b.vertices ? a.vertices < b.vertices : a.provenance < b.provenance;
    });
    return aux;
}

std::string write_hypergraph_text(const Hypergraph& h) {
    std::ostringstream os;
    os << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const auto& he : h.edges) {
        os << he.vertices.size();
        for (int v : he.vertices) os << " " << v;
        os << "\n# " << he.provenance;
        if (!he.vertices.empty()) {
            os << " {";
            for (size_t i = 0; i < he.vertices.size(); ++i)
                os << (i ? "," : "") << h.vertex_labels[static_cast<size_t>(he.vertices[i])];
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ramseylab
