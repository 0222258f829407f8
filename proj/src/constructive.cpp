#include "ramseylab/constructive.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ramseylab/copies.hpp"
#include "ramseylab/density.hpp"
#include "ramseylab/errors.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/hypergraph.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/structure.hpp"

namespace ramseylab {

namespace {

int first_colour_avoiding(const std::vector<int>& list, int forbidden) {
    for (int c : list)
        if (c != forbidden) return c;
    throw FalsificationError("no colour available outside the forbidden one");
}

int first_colour_avoiding2(const std::vector<int>& list, int f1, int f2) {
    for (int c : list)
        if (c != f1 && c != f2) return c;
    throw FalsificationError("no colour available outside two forbidden ones");
}

enum class CycleScheme { Nonrepetitive, MonoCycle, SeamAlternating };

// Colours one connected component of an m <= 1 graph.  Tree edges always
// follow the nonrepetitive rule outward (each edge differs from the colour of
// its anchor's own out-edge); the scheme decides the cycle treatment.
// Returns false iff scheme == Nonrepetitive and the component has an odd
// cycle, r = 2 and identical cycle lists.
bool colour_component(const Graph& g, const ListAssignment& lists,
                      const std::vector<int>& component, CycleScheme scheme, int mono_colour,
                      std::vector<int>& colour_of) {
    std::vector<int> cycle = unique_cycle_in_component(g, component);
    size_t ell = cycle.size();
    // head_edge[v]: the edge whose colour edges hanging at v must avoid.
    std::vector<int> head_edge(static_cast<size_t>(g.n()), -1);

    if (!cycle.empty()) {
        std::vector<int> cycle_edges(ell);
        for (size_t j = 0; j < ell; ++j)
            cycle_edges[j] = g.edge_index(cycle[j], cycle[(j + 1) % ell]);
        auto elist = [&](size_t j) -> const std::vector<int>& {
            return lists.list(cycle_edges[j]);
        };
        if (scheme == CycleScheme::MonoCycle) {
            for (size_t j = 0; j < ell; ++j) {
                const auto& l = elist(j);
                if (std::find(l.begin(), l.end(), mono_colour) == l.end())
                    throw DomainError("mono-cycle scheme: cycle list misses the cycle colour");
                colour_of[static_cast<size_t>(cycle_edges[j])] = mono_colour;
            }
        } else if (scheme == CycleScheme::SeamAlternating) {
            // Alternating with one double-run so the only monochromatic P3 sits
            // at the seam; needs identical 2-lists on the cycle.
            if (ell % 2 == 0)
                throw DomainError("seam scheme: cycle must be odd");
            const auto& base = elist(0);
            if (base.size() != 2)
                throw DomainError("seam scheme: needs 2-lists");
            for (size_t j = 1; j < ell; ++j)
                if (elist(j) != base)
                    throw DomainError("seam scheme: cycle lists must be identical");
            int red = base[0], blue = base[1];
            for (size_t j = 0; j + 1 < ell; ++j)
                colour_of[static_cast<size_t>(cycle_edges[j])] = (j % 2 == 0) ? red : blue;
            colour_of[static_cast<size_t>(cycle_edges[ell - 1])] = blue;
        } else {
            // Nonrepetitive around the directed cycle: adjacent edges differ.
            int pivot = -1, pivot_colour = -1;
            for (size_t j = 0; j < ell && pivot < 0; ++j)
                for (int c : elist(j)) {
                    int spare = 0;
                    for (int d : elist((j + 1) % ell))
                        if (d != c) ++spare;
                    if (spare >= 2) {
                        pivot = static_cast<int>(j);
                        pivot_colour = c;
                        break;
                    }
                }
            if (pivot < 0) {
                // All cycle lists identical with r = 2.
                if (ell % 2 == 1) return false;
                int red = elist(0)[0], blue = elist(0)[1];
                for (size_t j = 0; j < ell; ++j)
                    colour_of[static_cast<size_t>(cycle_edges[j])] = (j % 2 == 0) ? red : blue;
            } else {
                // Rotate so the pivot edge is position 0, then colour position
                // 0, then ell-1 down to 2, and finally position 1 avoiding both
                // neighbours.
                auto at = [&](size_t j) { return cycle_edges[(static_cast<size_t>(pivot) + j) % ell]; };
                colour_of[static_cast<size_t>(at(0))] = pivot_colour;
                for (size_t j = ell - 1; j >= 2; --j) {
                    int succ = colour_of[static_cast<size_t>(at((j + 1) % ell))];
                    colour_of[static_cast<size_t>(at(j))] =
                        first_colour_avoiding(lists.list(at(j)), succ);
                }
                colour_of[static_cast<size_t>(at(1))] = first_colour_avoiding2(
                    lists.list(at(1)), pivot_colour, colour_of[static_cast<size_t>(at(2))]);
            }
        }
        for (size_t j = 0; j < ell; ++j) head_edge[static_cast<size_t>(cycle[j])] = cycle_edges[j];
    }

    // Trees: BFS outward from the cycle (or from the least vertex of a tree
    // component); each edge avoids the colour of its anchor's head edge.
    std::vector<char> visited(static_cast<size_t>(g.n()), 0);
    std::queue<int> q;
    if (!cycle.empty()) {
        for (int v : cycle) {
            visited[static_cast<size_t>(v)] = 1;
            q.push(v);
        }
    } else {
        int root = component[0];
        visited[static_cast<size_t>(root)] = 1;
        q.push(root);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbours(v)) {
            if (visited[static_cast<size_t>(u)]) continue;
            visited[static_cast<size_t>(u)] = 1;
            int ei = g.edge_index(u, v);
            int forbidden = head_edge[static_cast<size_t>(v)] >= 0
                                ? colour_of[static_cast<size_t>(head_edge[static_cast<size_t>(v)])]
                                : -1;
            colour_of[static_cast<size_t>(ei)] = first_colour_avoiding(lists.list(ei), forbidden);
            head_edge[static_cast<size_t>(u)] = ei;
            q.push(u);
        }
    }
    return true;
}

void require_sparse_host(const Graph& g, const ListAssignment& lists, const char* op) {
    lists.validate(g);
    if (lists.r < 2) throw DomainError(std::string(op) + ": need lists of size >= 2");
    if (!is_at_most_unicyclic(g)) throw DomainError(std::string(op) + ": requires m(G) <= 1");
}

bool subgraph_class_is(const Graph& g, const std::vector<int>& class_edges,
                       bool (*pred)(const GraphClass&)) {
    Graph sub = spanned_subgraph(g, class_edges);
    GraphClass cls = classify(sub);
    return pred(cls);
}

}  // namespace

NonrepetitiveResult nonrepetitive_colouring(const Graph& g, const ListAssignment& lists) {
    require_sparse_host(g, lists, "nonrepetitive_colouring");
    if (!is_connected(g)) throw DomainError("nonrepetitive_colouring: host must be connected");
    NonrepetitiveResult out;
    std::vector<int> colour_of(static_cast<size_t>(g.edge_count()), -1);
    auto comps = connected_components(g);
    if (!colour_component(g, lists, comps[0], CycleScheme::Nonrepetitive, -1, colour_of)) {
        out.nontrivial = true;
        return out;
    }
    EdgeColouring col{std::move(colour_of)};
    for (int c : col.palette())
        if (!subgraph_class_is(g, col.colour_class(c),
                               [](const GraphClass& k) { return k.is_star_forest; }))
            throw FalsificationError("nonrepetitive_colouring: a colour class is not a star forest");
    out.colouring = std::move(col);
    return out;
}

EdgeColouring cstar_colouring(const Graph& g, const ListAssignment& lists) {
    require_sparse_host(g, lists, "cstar_colouring");
    std::vector<int> colour_of(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& comp : connected_components(g)) {
        if (colour_component(g, lists, comp, CycleScheme::Nonrepetitive, -1, colour_of)) continue;
        // Odd cycle, r = 2, identical cycle lists: monochromatic cycle plus
        // parity colouring outward keeps classes equal to stars and the cycle.
        std::vector<int> cycle = unique_cycle_in_component(g, comp);
        int cycle_colour = lists.list(g.edge_index(cycle[0], cycle[1]))[0];
        colour_component(g, lists, comp, CycleScheme::MonoCycle, cycle_colour, colour_of);
    }
    EdgeColouring col{std::move(colour_of)};
    for (int c : col.palette())
        if (!subgraph_class_is(g, col.colour_class(c),
                               [](const GraphClass& k) { return k.is_cstar_graph; }))
            throw FalsificationError("cstar_colouring: a colour class is not a C*-graph");
    return col;
}

EdgeColouring broom_colouring(const Graph& g, const ListAssignment& lists) {
    require_sparse_host(g, lists, "broom_colouring");
    std::vector<int> colour_of(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& comp : connected_components(g)) {
        if (colour_component(g, lists, comp, CycleScheme::Nonrepetitive, -1, colour_of)) continue;
        colour_component(g, lists, comp, CycleScheme::SeamAlternating, -1, colour_of);
    }
    EdgeColouring col{std::move(colour_of)};
    for (int c : col.palette())
        if (!subgraph_class_is(g, col.colour_class(c),
                               [](const GraphClass& k) { return k.is_b_graph; }))
            throw FalsificationError("broom_colouring: a colour class is not a B-graph");
    return col;
}

EdgeColouring forest_list_colouring(const Graph& g, const ListAssignment& lists) {
    lists.validate(g);
    if (lists.r != 2) throw DomainError("forest_list_colouring: needs 2-lists");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 4) throw DomainError("forest_list_colouring: max degree must be <= 3");

    struct VertexRecord {
        int v;
        std::vector<int> edges;  // incident alive edges at removal time
    };
    struct CycleRecord {
        std::vector<int> path_edges;  // c0c1, ..., c_{k-2}c_{k-1}
        int closing_edge;             // c_{k-1}c0
        std::vector<int> pendant_edges;  // e_i aligned with cycle order
    };
    struct Record {
        bool is_cycle;
        VertexRecord vertex;
        CycleRecord cycle;
    };

    std::vector<char> alive(static_cast<size_t>(g.n()), 1);
    std::vector<int> deg(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    auto alive_edges_at = [&](int v) {
        std::vector<int> out;
        for (int u : g.neighbours(v))
            if (alive[static_cast<size_t>(u)]) out.push_back(g.edge_index(u, v));
        return out;
    };
    auto remove_vertex = [&](int v) {
        alive[static_cast<size_t>(v)] = 0;
        for (int u : g.neighbours(v))
            if (alive[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
    };

    std::vector<Record> stack;
    int alive_edge_total = g.edge_count();
    while (alive_edge_total > 0) {
        int strip = -1;
        for (int v = 0; v < g.n() && strip < 0; ++v) {
            if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] == 0) continue;
            if (deg[static_cast<size_t>(v)] <= 2) {
                strip = v;
                break;
            }
            auto edges = alive_edges_at(v);
            for (size_t i = 1; i < edges.size(); ++i)
                if (lists.list(edges[i]) != lists.list(edges[0])) {
                    strip = v;
                    break;
                }
        }
        if (strip >= 0) {
            Record rec;
            rec.is_cycle = false;
            rec.vertex = {strip, alive_edges_at(strip)};
            alive_edge_total -= static_cast<int>(rec.vertex.edges.size());
            remove_vertex(strip);
            stack.push_back(std::move(rec));
            continue;
        }
        // Every alive vertex with an edge is 3-regular with identical incident
        // lists; remove a shortest (hence chordless) cycle.
        std::vector<int> alive_vs;
        for (int v = 0; v < g.n(); ++v)
            if (alive[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] > 0) alive_vs.push_back(v);
        Graph sub = induced_subgraph(g, alive_vs);
        std::vector<int> cyc_local = shortest_cycle(sub);
        if (cyc_local.empty())
            throw FalsificationError("forest_list_colouring: 3-regular subgraph without a cycle");
        std::vector<int> cyc;
        for (int lw : cyc_local) cyc.push_back(alive_vs[static_cast<size_t>(lw)]);

        Record rec;
        rec.is_cycle = true;
        size_t k = cyc.size();
        for (size_t j = 0; j + 1 < k; ++j)
            rec.cycle.path_edges.push_back(g.edge_index(cyc[j], cyc[j + 1]));
        rec.cycle.closing_edge = g.edge_index(cyc[k - 1], cyc[0]);
        std::vector<char> on_cycle(static_cast<size_t>(g.n()), 0);
        for (int v : cyc) on_cycle[static_cast<size_t>(v)] = 1;
        for (int v : cyc) {
            int pendant = -1;
            for (int u : g.neighbours(v)) {
                if (!alive[static_cast<size_t>(u)] || on_cycle[static_cast<size_t>(u)]) continue;
                pendant = g.edge_index(u, v);
            }
            if (pendant < 0)
                throw FalsificationError("forest_list_colouring: cycle vertex without a pendant "
                                         "edge in a 3-regular graph");
            rec.cycle.pendant_edges.push_back(pendant);
        }
        alive_edge_total -= static_cast<int>(k + rec.cycle.pendant_edges.size());
        for (int v : cyc) remove_vertex(v);
        stack.push_back(std::move(rec));
    }

    std::vector<int> colour_of(static_cast<size_t>(g.edge_count()), -1);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (it->is_cycle) {
            const auto& cr = it->cycle;
            const auto& base = lists.list(cr.path_edges.empty() ? cr.closing_edge : cr.path_edges[0]);
            int red = base[0], blue = base[1];
            for (int e : cr.path_edges) colour_of[static_cast<size_t>(e)] = red;
            colour_of[static_cast<size_t>(cr.pendant_edges[0])] = red;
            colour_of[static_cast<size_t>(cr.closing_edge)] = blue;
            for (size_t i = 1; i < cr.pendant_edges.size(); ++i)
                colour_of[static_cast<size_t>(cr.pendant_edges[i])] = blue;
        } else {
            // All-distinct colours on the stripped vertex's edges: brute force
            // over the (at most 2^3) combinations, lexicographically least.
            const auto& edges = it->vertex.edges;
            size_t k = edges.size();
            if (k == 0) continue;
            bool done = false;
            std::vector<int> pick(k, 0);
            while (!done) {
                bool distinct = true;
                for (size_t i = 0; i < k && distinct; ++i)
                    for (size_t j = i + 1; j < k; ++j)
                        if (lists.list(edges[i])[static_cast<size_t>(pick[i])] ==
                            lists.list(edges[j])[static_cast<size_t>(pick[j])]) {
                            distinct = false;
                            break;
                        }
                if (distinct) {
                    for (size_t i = 0; i < k; ++i)
                        colour_of[static_cast<size_t>(edges[i])] =
                            lists.list(edges[i])[static_cast<size_t>(pick[i])];
                    done = true;
                    break;
                }
                size_t pos = k;
                while (pos-- > 0) {
                    if (pick[pos] + 1 < lists.r) {
                        ++pick[pos];
                        std::fill(pick.begin() + static_cast<long>(pos) + 1, pick.end(), 0);
                        break;
                    }
                    if (pos == 0) {
                        pos = static_cast<size_t>(-1);
                        break;
                    }
                }
                if (pos == static_cast<size_t>(-1))
                    throw FalsificationError(
                        "forest_list_colouring: no all-distinct extension exists");
            }
        }
    }

    EdgeColouring col{std::move(colour_of)};
    for (int c : col.palette()) {
        Graph sub = spanned_subgraph(g, col.colour_class(c));
        if (cycle_rank(sub) != 0)
            throw FalsificationError("forest_list_colouring: a colour class contains a cycle");
    }
    return col;
}

// --- K5 / K3 ------------------------------------------------------------

namespace {

std::vector<int> class_edges_of_colour(const Graph& k5, const ListAssignment& lists, int c) {
    std::vector<int> out;
    for (int e = 0; e < k5.edge_count(); ++e) {
        const auto& l = lists.list(e);
        if (std::find(l.begin(), l.end(), c) != l.end()) out.push_back(e);
    }
    return out;
}

void colour_remaining_one_by_one(const Graph& k5, const ListAssignment& lists,
                                 const std::vector<std::vector<int>>& triangles,
                                 std::vector<int>& colour_of) {
    for (int e = 0; e < k5.edge_count(); ++e) {
        if (colour_of[static_cast<size_t>(e)] != -1) continue;
        std::set<int> forbidden;
        for (const auto& tri : triangles) {
            if (std::find(tri.begin(), tri.end(), e) == tri.end()) continue;
            int other[2], oi = 0;
            for (int f : tri)
                if (f != e) other[oi++] = colour_of[static_cast<size_t>(f)];
            if (other[0] != -1 && other[0] == other[1]) forbidden.insert(other[0]);
        }
        int chosen = -1;
        for (int c : lists.list(e))
            if (!forbidden.count(c)) {
                chosen = c;
                break;
            }
        if (chosen == -1)
            throw FalsificationError("colour_k5_for_k3: an uncoloured edge closes two "
                                     "monochromatic triangles; the case analysis is violated");
        colour_of[static_cast<size_t>(e)] = chosen;
    }
}

void validate_triangle_free(const Graph& host, const std::vector<std::vector<int>>& triangles,
                            const std::vector<int>& colour_of, const char* op) {
    (void)host;
    for (const auto& tri : triangles) {
        int c = colour_of[static_cast<size_t>(tri[0])];
        if (c != -1 && colour_of[static_cast<size_t>(tri[1])] == c &&
            colour_of[static_cast<size_t>(tri[2])] == c)
            throw FalsificationError(std::string(op) + ": monochromatic triangle survived");
    }
}

}  // namespace

K5Result colour_k5_for_k3(const ListAssignment& lists) {
    Graph k5 = complete_graph(5);
    lists.validate(k5);
    if (lists.r != 2) throw DomainError("colour_k5_for_k3: needs 2-lists");
    auto triangles = enumerate_copies(complete_graph(3), k5);
    auto five_cycles = enumerate_copies(cycle_graph(5), k5);
    std::vector<int> palette = lists.palette();
    std::vector<int> colour_of(static_cast<size_t>(k5.edge_count()), -1);

    // Case 1: some colour's list-subgraph contains a 5-cycle.  Colour it that
    // colour; the complement is the other 5-cycle, every triangle crosses.
    for (int c : palette) {
        auto cls = class_edges_of_colour(k5, lists, c);
        for (const auto& cyc : five_cycles) {
            bool inside = std::all_of(cyc.begin(), cyc.end(), [&](int e) {
                return std::binary_search(cls.begin(), cls.end(), e);
            });
            if (!inside) continue;
            for (int e : cyc) colour_of[static_cast<size_t>(e)] = c;
            for (int e = 0; e < k5.edge_count(); ++e)
                if (colour_of[static_cast<size_t>(e)] == -1)
                    colour_of[static_cast<size_t>(e)] = first_colour_avoiding(lists.list(e), c);
            validate_triangle_free(k5, triangles, colour_of, "colour_k5_for_k3");
            return {EdgeColouring{std::move(colour_of)}, K5Branch::FiveCycle};
        }
    }

    // Case 2: some colour's subgraph has an edge in none of its triangles.
    // Colour the rest of K5 exhaustively (a proper subgraph of K5 is never
    // list-Ramsey for the triangle), then give that edge the colour.
    for (int c : palette) {
        auto cls = class_edges_of_colour(k5, lists, c);
        for (int e : cls) {
            auto [u, v] = k5.edge(e);
            bool in_triangle = false;
            for (int w = 0; w < 5 && !in_triangle; ++w) {
                if (w == u || w == v) continue;
                int a = k5.edge_index(u, w), b = k5.edge_index(v, w);
                in_triangle = std::binary_search(cls.begin(), cls.end(), a) &&
                              std::binary_search(cls.begin(), cls.end(), b);
            }
            if (in_triangle) continue;
            Graph smaller = with_edge_removed(k5, e);
            ListAssignment sub;
            sub.r = 2;
            for (int f = 0; f < k5.edge_count(); ++f)
                if (f != e) sub.list_of.push_back(lists.list(f));
            SearchLimits lim;
            lim.max_edges = 16;
            auto res = colouring_from_lists(smaller, singleton_family("K3", complete_graph(3)),
                                            sub, lim);
            if (res.verdict != OracleVerdict::Found)
                throw FalsificationError("colour_k5_for_k3: K5 minus an edge refused a "
                                         "triangle-free list colouring");
            for (int f = 0, pos = 0; f < k5.edge_count(); ++f) {
                if (f == e) continue;
                colour_of[static_cast<size_t>(f)] = res.colouring->colour(pos++);
            }
            colour_of[static_cast<size_t>(e)] = c;
            validate_triangle_free(k5, triangles, colour_of, "colour_k5_for_k3");
            return {EdgeColouring{std::move(colour_of)}, K5Branch::EdgeNotInTriangle};
        }
    }

    // Past this point every colour class has all edges in triangles and no
    // 5-cycle; the classes can only be K3, K4, K4-, K5 minus a triangle, or a
    // bowtie.  Handle K5\K3 first, then K4 / K4-.
    for (int c : palette) {
        auto cls = class_edges_of_colour(k5, lists, c);
        if (cls.size() != 7) continue;
        std::vector<int> cdeg(5, 0);
        for (int e : cls) {
            cdeg[static_cast<size_t>(k5.edge(e).first)]++;
            cdeg[static_cast<size_t>(k5.edge(e).second)]++;
        }
        std::vector<int> big, small;
        for (int v = 0; v < 5; ++v) (cdeg[static_cast<size_t>(v)] == 4 ? big : small).push_back(v);
        if (big.size() != 2 || small.size() != 3) continue;
        bool shape_ok = std::binary_search(cls.begin(), cls.end(), k5.edge_index(big[0], big[1]));
        for (size_t i = 0; i < small.size() && shape_ok; ++i)
            for (size_t j = i + 1; j < small.size(); ++j)
                if (std::binary_search(cls.begin(), cls.end(),
                                       k5.edge_index(small[i], small[j])))
                    shape_ok = false;
        if (!shape_ok) continue;
        // Red K_{2,3}, the joining edge not red, the opposite triangle with
        // two different (necessarily non-red) colours.
        for (int a : big)
            for (int s : small) colour_of[static_cast<size_t>(k5.edge_index(a, s))] = c;
        int ab = k5.edge_index(big[0], big[1]);
        colour_of[static_cast<size_t>(ab)] = first_colour_avoiding(lists.list(ab), c);
        int cd = k5.edge_index(small[0], small[1]);
        int ce = k5.edge_index(small[0], small[2]);
        int de = k5.edge_index(small[1], small[2]);
        colour_of[static_cast<size_t>(cd)] = lists.list(cd)[0];
        colour_of[static_cast<size_t>(ce)] =
            first_colour_avoiding(lists.list(ce), colour_of[static_cast<size_t>(cd)]);
        colour_of[static_cast<size_t>(de)] = lists.list(de)[0];
        validate_triangle_free(k5, triangles, colour_of, "colour_k5_for_k3");
        return {EdgeColouring{std::move(colour_of)}, K5Branch::K5MinusK3Class};
    }

    for (int c : palette) {
        auto cls = class_edges_of_colour(k5, lists, c);
        if (cls.size() != 6 && cls.size() != 5) continue;
        std::set<int> touched;
        std::vector<int> cdeg(5, 0);
        for (int e : cls) {
            touched.insert(k5.edge(e).first);
            touched.insert(k5.edge(e).second);
            cdeg[static_cast<size_t>(k5.edge(e).first)]++;
            cdeg[static_cast<size_t>(k5.edge(e).second)]++;
        }
        if (touched.size() != 4) continue;
        std::vector<int> vs(touched.begin(), touched.end());
        std::vector<int> cycle4, diagonals;
        bool is_k4 = cls.size() == 6;
        if (is_k4) {
            cycle4 = {k5.edge_index(vs[0], vs[1]), k5.edge_index(vs[1], vs[2]),
                      k5.edge_index(vs[2], vs[3]), k5.edge_index(vs[3], vs[0])};
            diagonals = {k5.edge_index(vs[0], vs[2]), k5.edge_index(vs[1], vs[3])};
        } else {
            // K4 minus an edge: the two degree-2 vertices are the missing pair.
            std::vector<int> low, high;
            for (int v : vs) (cdeg[static_cast<size_t>(v)] == 2 ? low : high).push_back(v);
            if (low.size() != 2 || high.size() != 2) continue;
            if (std::binary_search(cls.begin(), cls.end(), k5.edge_index(low[0], low[1])))
                continue;
            cycle4 = {k5.edge_index(low[0], high[0]), k5.edge_index(high[0], low[1]),
                      k5.edge_index(low[1], high[1]), k5.edge_index(high[1], low[0])};
            diagonals = {k5.edge_index(high[0], high[1])};
        }
        bool shape_ok = true;
        for (int e : cycle4)
            if (!std::binary_search(cls.begin(), cls.end(), e)) shape_ok = false;
        for (int e : diagonals)
            if (!std::binary_search(cls.begin(), cls.end(), e)) shape_ok = false;
        if (!shape_ok) continue;
        for (int e : cycle4) colour_of[static_cast<size_t>(e)] = c;
        for (int e : diagonals)
            colour_of[static_cast<size_t>(e)] = first_colour_avoiding(lists.list(e), c);
        // Each remaining edge closes at most one monochromatic triangle.
        colour_remaining_one_by_one(k5, lists, triangles, colour_of);
        validate_triangle_free(k5, triangles, colour_of, "colour_k5_for_k3");
        return {EdgeColouring{std::move(colour_of)},
                is_k4 ? K5Branch::K4Class : K5Branch::K4MinusClass};
    }

    throw FalsificationError("colour_k5_for_k3: every colour class is a K3 or a bowtie, "
                             "contradicting 3 | 20");
}

K6Result colour_k6_for_k4(const ListAssignment& lists, std::uint64_t seed) {
    Graph k6 = complete_graph(6);
    lists.validate(k6);
    if (lists.r != 2) throw DomainError("colour_k6_for_k4: needs 2-lists");
    auto k4s = enumerate_copies(complete_graph(4), k6);
    auto mono_free = [&](const std::vector<int>& colour_of) {
        for (const auto& copy : k4s) {
            int c = colour_of[static_cast<size_t>(copy[0])];
            bool mono = true;
            for (int e : copy)
                if (colour_of[static_cast<size_t>(e)] != c) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
        return true;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> colour_of(static_cast<size_t>(k6.edge_count()));
        for (int e = 0; e < k6.edge_count(); ++e) {
            std::uint64_t bit = counter_rng(seed, static_cast<std::uint64_t>(attempt),
                                            static_cast<std::uint64_t>(e)) & 1u;
            colour_of[static_cast<size_t>(e)] = lists.list(e)[bit];
        }
        if (mono_free(colour_of))
            return {EdgeColouring{std::move(colour_of)}, attempt + 1, false};
    }
    SearchLimits lim;
    lim.max_edges = 15;
    auto res = colouring_from_lists(k6, singleton_family("K4", complete_graph(4)), lists, lim);
    if (res.verdict != OracleVerdict::Found)
        throw FalsificationError("colour_k6_for_k4: exhaustive fallback found no colouring; "
                                 "the expectation bound is violated");
    return {*res.colouring, 64, true};
}

// --- sparse triangle-free ------------------------------------------------

namespace {

// Orientation with out-degree <= 1 of the subgraph induced by `vertices`
// (which must satisfy m <= 1): out_edge[v] = the G-edge oriented away from v.
bool orient_out_degree_one(const Graph& g, const std::vector<int>& vertices,
                           std::vector<int>& out_edge) {
    Graph sub = induced_subgraph(g, vertices);
    if (!is_at_most_unicyclic(sub)) return false;
    for (const auto& comp_local : connected_components(sub)) {
        std::vector<int> comp;
        for (int lv : comp_local) comp.push_back(vertices[static_cast<size_t>(lv)]);
        std::vector<int> cyc_local = unique_cycle_in_component(sub, comp_local);
        std::vector<char> on_cycle(static_cast<size_t>(g.n()), 0);
        std::queue<int> q;
        if (!cyc_local.empty()) {
            for (size_t j = 0; j < cyc_local.size(); ++j) {
                int v = vertices[static_cast<size_t>(cyc_local[j])];
                int w = vertices[static_cast<size_t>(cyc_local[(j + 1) % cyc_local.size()])];
                out_edge[static_cast<size_t>(v)] = g.edge_index(v, w);
                on_cycle[static_cast<size_t>(v)] = 1;
            }
            for (size_t j = 0; j < cyc_local.size(); ++j)
                q.push(vertices[static_cast<size_t>(cyc_local[j])]);
        } else {
            int root = comp[0];
            out_edge[static_cast<size_t>(root)] = -1;
            on_cycle[static_cast<size_t>(root)] = 1;
            q.push(root);
        }
        std::vector<char> seen = on_cycle;
        std::vector<char> in_comp(static_cast<size_t>(g.n()), 0);
        for (int v : comp) in_comp[static_cast<size_t>(v)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbours(v)) {
                if (!in_comp[static_cast<size_t>(u)] || seen[static_cast<size_t>(u)]) continue;
                seen[static_cast<size_t>(u)] = 1;
                out_edge[static_cast<size_t>(u)] = g.edge_index(u, v);
                q.push(u);
            }
        }
    }
    return true;
}

struct SparseCtx {
    const Graph& g;
    const ListAssignment& lists;
    std::vector<int> colour_of;
    std::vector<SparseBranch> branches;
};

void sparse_colour_component(SparseCtx& ctx, std::vector<int> comp);

void sparse_colour_all(SparseCtx& ctx, const std::vector<char>& alive) {
    std::vector<int> keep;
    for (int v = 0; v < ctx.g.n(); ++v)
        if (alive[static_cast<size_t>(v)]) keep.push_back(v);
    if (keep.empty()) return;
    Graph sub = induced_subgraph(ctx.g, keep);
    for (const auto& comp_local : connected_components(sub)) {
        std::vector<int> comp;
        for (int lv : comp_local) comp.push_back(keep[static_cast<size_t>(lv)]);
        sparse_colour_component(ctx, std::move(comp));
    }
}

void sparse_colour_component(SparseCtx& ctx, std::vector<int> comp) {
    const Graph& g = ctx.g;
    int comp_edges = 0;
    for (int v : comp)
        for (int u : g.neighbours(v))
            if (u > v && std::binary_search(comp.begin(), comp.end(), u)) ++comp_edges;
    if (comp_edges == 0) return;

    // K5 components go to the dedicated colouring.
    if (comp.size() == 5 && comp_edges == 10) {
        Graph k5 = complete_graph(5);
        ListAssignment sub;
        sub.r = 2;
        for (int e = 0; e < k5.edge_count(); ++e) {
            auto [lu, lv] = k5.edge(e);
            sub.list_of.push_back(ctx.lists.list(
                g.edge_index(comp[static_cast<size_t>(lu)], comp[static_cast<size_t>(lv)])));
        }
        auto res = colour_k5_for_k3(sub);
        for (int e = 0; e < k5.edge_count(); ++e) {
            auto [lu, lv] = k5.edge(e);
            ctx.colour_of[static_cast<size_t>(
                g.edge_index(comp[static_cast<size_t>(lu)], comp[static_cast<size_t>(lv)]))] =
                res.colouring.colour(e);
        }
        ctx.branches.push_back(SparseBranch::K5Delegate);
        return;
    }

    // Look for a vertex whose neighbourhood (within the component) admits an
    // out-degree <= 1 orientation, i.e. has m <= 1.
    for (int v : comp) {
        std::vector<int> nbrs;
        for (int u : g.neighbours(v))
            if (std::binary_search(comp.begin(), comp.end(), u)) nbrs.push_back(u);
        std::vector<int> out_edge(static_cast<size_t>(g.n()), -1);
        if (!orient_out_degree_one(g, nbrs, out_edge)) continue;
        // Colour the component minus v, then extend across v's edges.
        std::vector<char> alive(static_cast<size_t>(g.n()), 0);
        for (int u : comp) alive[static_cast<size_t>(u)] = 1;
        alive[static_cast<size_t>(v)] = 0;
        sparse_colour_all(ctx, alive);
        for (int u : nbrs) {
            int uv = g.edge_index(u, v);
            int forbidden = -1;
            if (out_edge[static_cast<size_t>(u)] >= 0)
                forbidden = ctx.colour_of[static_cast<size_t>(out_edge[static_cast<size_t>(u)])];
            ctx.colour_of[static_cast<size_t>(uv)] =
                first_colour_avoiding(ctx.lists.list(uv), forbidden);
        }
        ctx.branches.push_back(SparseBranch::Orientation);
        return;
    }

    // No orientable vertex and not K5: exhaust.  A failure here with
    // m(component) <= 2 would contradict the published claim chain.
    Graph sub = induced_subgraph(g, comp);
    ListAssignment sub_lists;
    sub_lists.r = 2;
    for (int e = 0; e < sub.edge_count(); ++e) {
        auto [lu, lv] = sub.edge(e);
        sub_lists.list_of.push_back(ctx.lists.list(
            g.edge_index(comp[static_cast<size_t>(lu)], comp[static_cast<size_t>(lv)])));
    }
    SearchLimits lim;
    lim.max_edges = std::max(sub.edge_count(), 30);
    auto res = colouring_from_lists(sub, singleton_family("K3", complete_graph(3)), sub_lists, lim);
    if (res.verdict != OracleVerdict::Found) {
        if (max_density(sub) <= Rational(2))
            throw FalsificationError("sparse_triangle_free_colouring: component with m <= 2 "
                                     "admits no triangle-free list colouring");
        throw DomainError("sparse_triangle_free_colouring: component has max subgraph density "
                          "> 2; no colouring exists for these lists");
    }
    for (int e = 0; e < sub.edge_count(); ++e) {
        auto [lu, lv] = sub.edge(e);
        ctx.colour_of[static_cast<size_t>(
            g.edge_index(comp[static_cast<size_t>(lu)], comp[static_cast<size_t>(lv)]))] =
            res.colouring->colour(e);
    }
    ctx.branches.push_back(SparseBranch::ExhaustiveFallback);
}

}  // namespace

SparseResult sparse_triangle_free_colouring(const Graph& g, const ListAssignment& lists) {
    lists.validate(g);
    if (lists.r != 2) throw DomainError("sparse_triangle_free_colouring: needs 2-lists");
    if (g.n() == 0) throw DomainError("sparse_triangle_free_colouring: empty graph");
    if (Rational(g.edge_count()) > Rational(2) * Rational(g.n()))
        throw DomainError("sparse_triangle_free_colouring: requires e/v <= 2");
    SparseCtx ctx{g, lists, std::vector<int>(static_cast<size_t>(g.edge_count()), -1), {}};
    std::vector<char> alive(static_cast<size_t>(g.n()), 1);
    sparse_colour_all(ctx, alive);
    auto triangles = enumerate_copies(complete_graph(3), g);
    validate_triangle_free(g, triangles, ctx.colour_of, "sparse_triangle_free_colouring");
    return {EdgeColouring{std::move(ctx.colour_of)}, std::move(ctx.branches)};
}

// --- gadgets and witnesses ------------------------------------------------

Graph build_broom_cycle_gadget(int hairs, int cycle_len) {
    if (hairs < 1) throw DomainError("build_broom_cycle_gadget: need b >= 1");
    if (cycle_len < 3 || cycle_len % 2 == 0)
        throw DomainError("build_broom_cycle_gadget: cycle length must be odd and >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < cycle_len; ++i) es.push_back({i, (i + 1) % cycle_len});
    int rays = 2 * hairs - 1;
    int next = cycle_len;
    for (int i = 0; i < cycle_len; ++i)
        for (int j = 0; j < rays; ++j) es.push_back({i, next++});
    return Graph(next, std::move(es));
}

Graph build_broom_star_tree(int hairs, int rays) {
    if (hairs < 1 || rays < 1) throw DomainError("build_broom_star_tree: need b >= 1 and s >= 1");
    int d = 2 * std::max(hairs + 1, rays) - 1;
    std::vector<Edge> es;
    for (int i = 1; i <= d; ++i) es.push_back({0, i});
    int next = d + 1;
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < rays; ++j) es.push_back({i, next++});
    return Graph(next, std::move(es));
}

int broom_hairs_for(const Graph& x) {
    int cap = std::max(1, x.edge_count());
    auto comps = connected_components(x);
    for (int b = 1; b <= cap; ++b) {
        Graph broom = broom_graph(b);
        bool all = true;
        for (const auto& comp : comps) {
            if (comp.size() <= 1) continue;
            if (!embeds_into(induced_subgraph(x, comp), broom)) {
                all = false;
                break;
            }
        }
        if (all) return b;
    }
    throw DomainError("broom_hairs_for: graph is not a B-graph");
}

namespace {

struct YDecomposition {
    std::vector<int> star_rays;      // one entry per star component (>= 1 ray)
    std::vector<int> cycle_lengths;  // covering odd cycle per non-star component
};

YDecomposition decompose_cstar(const Graph& y) {
    YDecomposition out;
    GraphClass cls = classify(y);
    if (!cls.is_cstar_graph) throw DomainError("decompose_cstar: not a C*-graph");
    for (const auto& cs : cls.components) {
        switch (cs.shape) {
            case ComponentShape::SingleVertex:
                break;  // embeds anywhere; contributes nothing
            case ComponentShape::Star:
                out.star_rays.push_back(cs.edge_count);
                break;
            case ComponentShape::Path: {
                int k = cs.edge_count;
                if (k <= 2) {
                    out.star_rays.push_back(k);  // P3 and shorter are stars
                } else {
                    out.cycle_lengths.push_back(k % 2 == 0 ? k + 1 : k + 2);
                }
                break;
            }
            case ComponentShape::OddCycle:
                out.cycle_lengths.push_back(static_cast<int>(cs.vertices.size()));
                break;
            default:
                throw FalsificationError("decompose_cstar: impossible C*-component shape");
        }
    }
    return out;
}

int edge_component_count(const Graph& g) {
    int t = 0;
    for (const auto& comp : connected_components(g))
        if (comp.size() >= 2) ++t;
    return t;
}

}  // namespace

WitnessPackage build_list_ramsey_witness(const GraphFamily& fam) {
    int xi = -1, yi = -1;
    for (size_t i = 0; i < fam.size(); ++i) {
        GraphClass cls = classify(fam[i].graph);
        if (xi < 0 && cls.is_b_graph) xi = static_cast<int>(i);
    }
    if (xi < 0) throw DomainError("build_list_ramsey_witness: family has no B-graph");
    for (size_t i = 0; i < fam.size(); ++i) {
        if (static_cast<int>(i) == xi) continue;
        if (classify(fam[i].graph).is_cstar_graph) {
            yi = static_cast<int>(i);
            break;
        }
    }
    if (yi < 0 && classify(fam[static_cast<size_t>(xi)].graph).is_cstar_graph) yi = xi;
    if (yi < 0) throw DomainError("build_list_ramsey_witness: family has no C*-graph");

    const Graph& x = fam[static_cast<size_t>(xi)].graph;
    const Graph& y = fam[static_cast<size_t>(yi)].graph;
    WitnessLog log;
    log.chosen_b_member = fam[static_cast<size_t>(xi)].name;
    log.chosen_cstar_member = fam[static_cast<size_t>(yi)].name;
    log.hairs = broom_hairs_for(x);
    log.t = edge_component_count(x);
    YDecomposition dec = decompose_cstar(y);
    log.k = static_cast<int>(dec.star_rays.size());
    log.m = static_cast<int>(dec.cycle_lengths.size());
    log.palette = log.k + log.m + 1;

    Graph a = empty_graph(0);
    for (int s : dec.star_rays) a = disjoint_union(a, build_broom_star_tree(log.hairs, s));
    for (int len : dec.cycle_lengths) a = disjoint_union(a, build_broom_cycle_gadget(log.hairs, len));
    if (a.n() == 0)
        throw DomainError("build_list_ramsey_witness: chosen C*-graph has no edge components");

    // G': one copy of A per colour pair; G: (t-1)(k+m+1)+1 copies of G'.
    log.gprime_copies = (log.t - 1) * log.palette + 1;
    Graph host = empty_graph(0);
    std::vector<std::vector<int>> edge_lists;
    for (int copy = 0; copy < log.gprime_copies; ++copy) {
        for (int ca = 0; ca < log.palette; ++ca)
            for (int cb = ca + 1; cb < log.palette; ++cb) {
                host = disjoint_union(host, a);
                for (int e = 0; e < a.edge_count(); ++e) edge_lists.push_back({ca, cb});
            }
    }
    // disjoint_union keeps earlier blocks' edges first, so the flat list above
    // matches the canonical edge order blockwise.
    ListAssignment lists;
    lists.r = 2;
    lists.list_of = std::move(edge_lists);
    lists.validate(host);
    if (!is_at_most_unicyclic(host))
        throw FalsificationError("build_list_ramsey_witness: host has m > 1");
    return {std::move(host), std::move(lists), fam, std::move(log)};
}

namespace {

// Hyperedges of the truncated Aux contributed by one C*-member, as sorted
// cycle-length sets.
std::vector<std::vector<int>> member_aux_edges(const Graph& y, int cap) {
    std::vector<std::vector<int>> out;
    GraphClass cls = classify(y);
    if (!cls.is_cstar_graph) return out;
    std::vector<std::vector<int>> options;
    for (const auto& cs : cls.components) {
        std::vector<int> lens;
        if (cs.shape == ComponentShape::Path && cs.edge_count > 2) {
            for (int len = 3; len <= cap; len += 2)
                if (len >= cs.edge_count + 1) lens.push_back(len);
        } else if (cs.shape == ComponentShape::OddCycle) {
            int len = static_cast<int>(cs.vertices.size());
            if (len <= cap) lens.push_back(len);
        } else {
            continue;  // stars contribute no constraint
        }
        if (lens.empty()) return {};  // member cannot appear within the cap
        options.push_back(std::move(lens));
    }
    if (options.empty()) return out;  // star forest: no Aux edge
    std::vector<size_t> idx(options.size(), 0);
    std::set<std::vector<int>> seen;
    while (true) {
        std::vector<int> verts;
        for (size_t i = 0; i < options.size(); ++i) verts.push_back(options[i][idx[i]]);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (seen.insert(verts).second) out.push_back(verts);
        size_t pos = 0;
        while (pos < options.size() && ++idx[pos] == options[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == options.size()) break;
    }
    return out;
}

bool hypergraph_2colourable(const std::vector<std::vector<int>>& edges) {
    Hypergraph h;
    std::set<int> verts;
    for (const auto& e : edges) verts.insert(e.begin(), e.end());
    std::vector<int> vlist(verts.begin(), verts.end());
    for (int v : vlist) h.vertex_labels.push_back("C" + std::to_string(v));
    for (const auto& e : edges) {
        std::vector<int> idx;
        for (int v : e)
            idx.push_back(static_cast<int>(std::lower_bound(vlist.begin(), vlist.end(), v) -
                                           vlist.begin()));
        h.edges.push_back({idx, ""});
    }
    return proper_two_colouring(h).has_value();
}

}  // namespace

std::optional<WitnessPackage> build_plain_ramsey_witness(const GraphFamily& fam, int aux_cap) {
    int xi = -1;
    bool has_cstar = false;
    for (size_t i = 0; i < fam.size(); ++i) {
        GraphClass cls = classify(fam[i].graph);
        if (xi < 0 && cls.is_b_graph) xi = static_cast<int>(i);
        if (cls.is_cstar_graph) has_cstar = true;
    }
    if (xi < 0 || !has_cstar)
        throw DomainError("build_plain_ramsey_witness: family needs a B-graph and a C*-graph");

    // Star-forest route: 2m-1 copies of a star with 2s-1 rays.
    for (size_t i = 0; i < fam.size(); ++i) {
        GraphClass cls = classify(fam[i].graph);
        if (!cls.is_star_forest) continue;
        int stars = 0, max_rays = 0;
        for (const auto& cs : cls.components)
            if (cs.edge_count > 0) {
                ++stars;
                max_rays = std::max(max_rays, cs.edge_count);
            }
        WitnessLog log;
        log.star_forest_route = true;
        log.star_copies = 2 * stars - 1;
        log.star_rays = 2 * max_rays - 1;
        log.chosen_cstar_member = fam[i].name;
        Graph host = empty_graph(0);
        for (int cpy = 0; cpy < log.star_copies; ++cpy)
            host = disjoint_union(host, star_graph(log.star_rays));
        return WitnessPackage{std::move(host), std::nullopt, fam, std::move(log)};
    }

    // Aux route: find a non-2-colourable finite subhypergraph of the truncated
    // Aux, minimised by greedy removal in reverse canonical order.
    Hypergraph aux = aux_hypergraph(fam, aux_cap);
    std::vector<std::vector<int>> edges;  // as cycle-length sets
    for (const auto& he : aux.edges) {
        std::vector<int> lens;
        for (int v : he.vertices) lens.push_back(3 + 2 * v);
        edges.push_back(std::move(lens));
    }
    if (hypergraph_2colourable(edges)) return std::nullopt;  // bounded verdict
    for (size_t i = edges.size(); i-- > 0;) {
        auto trial = edges;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (!hypergraph_2colourable(trial)) edges = std::move(trial);
    }

    WitnessLog log;
    const Graph& x = fam[static_cast<size_t>(xi)].graph;
    log.chosen_b_member = fam[static_cast<size_t>(xi)].name;
    log.hairs = broom_hairs_for(x);
    log.x = edge_component_count(x);
    log.aux_edge_count = static_cast<int>(edges.size());
    std::set<int> core_lengths;
    for (const auto& e : edges) core_lengths.insert(e.begin(), e.end());
    log.aux_core_lengths.assign(core_lengths.begin(), core_lengths.end());

    // F' = C*-members contributing an edge of the minimised subhypergraph.
    std::set<std::vector<int>> kept(edges.begin(), edges.end());
    std::vector<size_t> contributing;
    for (size_t i = 0; i < fam.size(); ++i)
        for (const auto& e : member_aux_edges(fam[i].graph, aux_cap))
            if (kept.count(e)) {
                contributing.push_back(i);
                break;
            }
    int max_star_rays = 0, r_repeat = 0, r_of_star = 0;
    for (size_t i : contributing) {
        YDecomposition dec = decompose_cstar(fam[i].graph);
        int rays = 0;
        for (int s : dec.star_rays) rays = std::max(rays, s);
        max_star_rays = std::max(max_star_rays, rays);
        r_of_star = std::max(r_of_star, static_cast<int>(dec.star_rays.size()));
    }
    // r(A) over cycles in V(A'): components of a contributing member inside
    // one odd cycle.
    for (int len : core_lengths) {
        Graph cyc = cycle_graph(len);
        for (size_t i : contributing) {
            int count = 0;
            for (const auto& comp : connected_components(fam[i].graph)) {
                Graph sub = induced_subgraph(fam[i].graph, comp);
                if (comp.size() == 1 || embeds_into(sub, cyc)) ++count;
            }
            r_repeat = std::max(r_repeat, count);
        }
    }
    log.r = r_repeat;
    log.rS = r_of_star;

    Graph gprime = empty_graph(0);
    for (int len : core_lengths)
        gprime = disjoint_union(gprime, build_broom_cycle_gadget(log.hairs, len));
    // Copy counts from the construction, guarded at >= 1 (they vanish when
    // r = 1 and x = 1, and zero copies witness nothing).
    log.gprime_copies = std::max(1, 2 * (log.r - 1) * log.aux_edge_count + 2 * log.x - 2);
    log.tbs_copies =
        max_star_rays > 0 ? std::max(1, log.rS + 2 * log.x - 2) : 0;
    Graph host = empty_graph(0);
    for (int i = 0; i < log.gprime_copies; ++i) host = disjoint_union(host, gprime);
    for (int i = 0; i < log.tbs_copies; ++i)
        host = disjoint_union(host, build_broom_star_tree(log.hairs, max_star_rays));
    if (!is_at_most_unicyclic(host))
        throw FalsificationError("build_plain_ramsey_witness: host has m > 1");
    return WitnessPackage{std::move(host), std::nullopt, fam, std::move(log)};
}

EdgeColouring aux_guided_colouring(const Graph& g, const GraphFamily& fam,
                                   const std::map<int, int>& phi) {
    if (!is_at_most_unicyclic(g)) throw DomainError("aux_guided_colouring: requires m(G) <= 1");
    for (const auto& member : fam.members())
        if (classify(member.graph).is_star_forest)
            throw DomainError("aux_guided_colouring: family contains a star forest");
    for (const auto& [len, colour] : phi)
        if (len < 3 || len % 2 == 0 || (colour != 0 && colour != 1))
            throw DomainError("aux_guided_colouring: phi must map odd lengths to {0,1}");

    // Cap: the largest odd cycle length present in G.
    auto comps = connected_components(g);
    int cap = 3;
    std::vector<std::pair<std::vector<int>, int>> odd_components;  // (component, cycle length)
    std::vector<std::vector<int>> even_or_tree;
    for (const auto& comp : comps) {
        std::vector<int> cyc = unique_cycle_in_component(g, comp);
        if (!cyc.empty() && cyc.size() % 2 == 1) {
            cap = std::max(cap, static_cast<int>(cyc.size()));
            odd_components.push_back({comp, static_cast<int>(cyc.size())});
        } else {
            even_or_tree.push_back(comp);
        }
    }
    for (int len = 3; len <= cap; len += 2)
        if (!phi.count(len))
            throw DomainError("aux_guided_colouring: phi misses cycle length " +
                              std::to_string(len));
    Hypergraph aux = aux_hypergraph(fam, cap);
    for (const auto& he : aux.edges) {
        bool mono = true;
        int first = phi.at(3 + 2 * he.vertices[0]);
        for (int v : he.vertices)
            if (phi.at(3 + 2 * v) != first) mono = false;
        if (mono)
            throw DomainError("aux_guided_colouring: phi is not proper on the truncated Aux");
    }

    ListAssignment plain = ListAssignment::identical(g, {0, 1});
    std::vector<int> colour_of(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& [comp, len] : odd_components)
        colour_component(g, plain, comp, CycleScheme::MonoCycle, phi.at(len), colour_of);
    for (const auto& comp : even_or_tree)
        if (!colour_component(g, plain, comp, CycleScheme::Nonrepetitive, -1, colour_of))
            throw FalsificationError("aux_guided_colouring: nonrepetitive scheme failed on an "
                                     "even or acyclic component");
    EdgeColouring col{std::move(colour_of)};
    if (!colouring_avoids_family(g, fam, col))
        throw FalsificationError("aux_guided_colouring: a family member became monochromatic");
    return col;
}

}  // namespace ramseylab
