#include "ramseylab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ramseylab/copies.hpp"
#include "ramseylab/errors.hpp"

namespace ramseylab {

namespace {

// A configuration that must not become monochromatic: the copy's edges, and
// the colour it is forbidden in (-1 = every colour).
struct Forbidden {
    std::vector<int> edges;
    int colour = -1;
};

// Edge order for the backtracking search: vertices in reverse degeneracy
// order (densest core first), edges keyed by their later endpoint, so dense
// prefixes complete copies early.
std::vector<int> search_edge_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<int> removal;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<size_t>(v)] && (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        removed[static_cast<size_t>(best)] = 1;
        removal.push_back(best);
        for (int w : g.neighbours(best))
            if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    // pos 0 = most core (last removed).
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(removal[static_cast<size_t>(i)])] = n - 1 - i;
    std::vector<int> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int ei) {
        auto [u, v] = g.edge(ei);
        int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
        if (a > b) std::swap(a, b);
        return std::pair<int, int>(b, a);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    return order;
}

// Backtracking over a fixed edge sequence with per-edge allowed colours and a
// set of forbidden monochromatic configurations.
class Engine {
public:
    Engine(int edge_total, std::vector<int> sequence, std::vector<std::vector<int>> allowed,
           std::vector<Forbidden> forbidden, bool fix_first_colour, std::uint64_t node_budget)
        : sequence_(std::move(sequence)),
          allowed_(std::move(allowed)),
          forbidden_(std::move(forbidden)),
          fix_first_(fix_first_colour),
          budget_(node_budget),
          colour_(static_cast<size_t>(edge_total), -1),
          at_edge_(static_cast<size_t>(edge_total)) {
        for (size_t k = 0; k < forbidden_.size(); ++k)
            for (int e : forbidden_[k].edges) at_edge_[static_cast<size_t>(e)].push_back(static_cast<int>(k));
        assigned_.assign(forbidden_.size(), 0);
        state_.assign(forbidden_.size(), -1);  // -1 none yet, -2 dead, else common colour
    }

    OracleVerdict run() {
        OracleVerdict v = rec(0);
        return v;
    }

    const std::vector<int>& colours() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Returns Found if the remaining sequence can be completed, None if it
    // provably cannot, Undecided on budget exhaustion.
    OracleVerdict rec(size_t depth) {
        if (depth == sequence_.size()) return OracleVerdict::Found;
        int e = sequence_[depth];
        const auto& options = allowed_[static_cast<size_t>(e)];
        bool first_fix = fix_first_ && depth == 0;
        for (int c : options) {
            if (++nodes_ > budget_) return OracleVerdict::Undecided;
            if (assign(e, c)) {
                OracleVerdict sub = rec(depth + 1);
                if (sub == OracleVerdict::Found) return sub;
                if (sub == OracleVerdict::Undecided) {
                    unassign(e);
                    return OracleVerdict::Undecided;
                }
            }
            unassign(e);
            if (first_fix) break;  // palette symmetry: one colour suffices at the root
        }
        return OracleVerdict::None;
    }

    // Applies colour c to edge e; returns false (leaving a consistent trail)
    // when a forbidden configuration completes monochromatically.
    bool assign(int e, int c) {
        colour_[static_cast<size_t>(e)] = c;
        trail_.push_back({});
        auto& changes = trail_.back();
        bool ok = true;
        for (int k : at_edge_[static_cast<size_t>(e)]) {
            int old = state_[static_cast<size_t>(k)];
            ++assigned_[static_cast<size_t>(k)];
            changes.push_back({k, old});
            if (old == -2) continue;
            int next;
            if (forbidden_[static_cast<size_t>(k)].colour != -1 && c != forbidden_[static_cast<size_t>(k)].colour)
                next = -2;
            else if (old == -1)
                next = c;
            else if (old != c)
                next = -2;
            else
                next = old;
            state_[static_cast<size_t>(k)] = next;
            if (next != -2 &&
                assigned_[static_cast<size_t>(k)] == static_cast<int>(forbidden_[static_cast<size_t>(k)].edges.size())) {
                ok = false;  // completed monochromatic in a forbidden colour
            }
        }
        return ok;
    }

    void unassign(int e) {
        for (auto it = trail_.back().rbegin(); it != trail_.back().rend(); ++it) {
            state_[static_cast<size_t>(it->first)] = it->second;
            --assigned_[static_cast<size_t>(it->first)];
        }
        trail_.pop_back();
        colour_[static_cast<size_t>(e)] = -1;
    }

    std::vector<int> sequence_;
    std::vector<std::vector<int>> allowed_;
    std::vector<Forbidden> forbidden_;
    bool fix_first_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<std::vector<int>> at_edge_;
    std::vector<int> assigned_;
    std::vector<int> state_;
    std::vector<std::vector<std::pair<int, int>>> trail_;
};

std::vector<Forbidden> forbidden_for_family(const Graph& g, const GraphFamily& fam) {
    std::vector<Forbidden> out;
    for (const auto& member : fam.members())
        for (auto& copy : enumerate_copies(member.graph, g)) out.push_back({std::move(copy), -1});
    return out;
}

// Connected components of the incidence between edges and forbidden
// configurations; edges in no configuration form no cluster.
std::vector<std::vector<int>> configuration_clusters(int edge_total,
                                                     const std::vector<Forbidden>& forb) {
    std::vector<int> parent(static_cast<size_t>(edge_total));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> covered(static_cast<size_t>(edge_total), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& f : forb) {
        for (int e : f.edges) {
            covered[static_cast<size_t>(e)] = 1;
            parent[static_cast<size_t>(find(e))] = find(f.edges[0]);
        }
    }
    std::vector<std::vector<int>> clusters;
    std::vector<int> root_to_cluster(static_cast<size_t>(edge_total), -1);
    for (int e = 0; e < edge_total; ++e) {
        if (!covered[static_cast<size_t>(e)]) continue;
        int r = find(e);
        if (root_to_cluster[static_cast<size_t>(r)] == -1) {
            root_to_cluster[static_cast<size_t>(r)] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
        clusters[static_cast<size_t>(root_to_cluster[static_cast<size_t>(r)])].push_back(e);
    }
    return clusters;
}

struct ClusterOutcome {
    OracleVerdict verdict;
    std::uint64_t nodes;
};

// Solves one cluster.  For large clusters, first tries to refute dense
// prefixes of the edge order (a Ramsey subgraph makes the whole graph Ramsey
// by monotonicity) before running the full search.
ClusterOutcome solve_cluster(const Graph& g, const std::vector<int>& cluster_edges,
                             const std::vector<Forbidden>& all_forbidden,
                             const std::vector<std::vector<int>>& allowed, bool fix_first,
                             std::uint64_t budget, std::vector<int>* out_colours) {
    std::vector<char> in_cluster(static_cast<size_t>(g.edge_count()), 0);
    for (int e : cluster_edges) in_cluster[static_cast<size_t>(e)] = 1;
    std::vector<Forbidden> forb;
    for (const auto& f : all_forbidden)
        if (in_cluster[static_cast<size_t>(f.edges[0])]) forb.push_back(f);

    std::vector<int> order = search_edge_order(g);
    std::vector<int> sequence;
    for (int e : order)
        if (in_cluster[static_cast<size_t>(e)]) sequence.push_back(e);

    std::uint64_t used = 0;
    auto run_on_prefix = [&](size_t prefix_len, std::uint64_t slice) -> ClusterOutcome {
        std::vector<char> in_prefix(static_cast<size_t>(g.edge_count()), 0);
        for (size_t i = 0; i < prefix_len; ++i) in_prefix[static_cast<size_t>(sequence[i])] = 1;
        std::vector<Forbidden> sub;
        for (const auto& f : forb) {
            bool inside = true;
            for (int e : f.edges)
                if (!in_prefix[static_cast<size_t>(e)]) {
                    inside = false;
                    break;
                }
            if (inside) sub.push_back(f);
        }
        Engine eng(g.edge_count(), {sequence.begin(), sequence.begin() + static_cast<long>(prefix_len)},
                   allowed, std::move(sub), fix_first, slice);
        OracleVerdict v = eng.run();
        used += eng.nodes();
        if (v == OracleVerdict::Found && prefix_len == sequence.size() && out_colours)
            *out_colours = eng.colours();
        return {v, eng.nodes()};
    };

    size_t m = sequence.size();
    if (m > 48) {
        for (size_t prefix : {size_t{24}, size_t{36}, size_t{54}, size_t{80}, size_t{120}}) {
            if (prefix >= m) break;
            if (used >= budget) return {OracleVerdict::Undecided, used};
            auto res = run_on_prefix(prefix, std::min(budget - used, budget / 8));
            if (res.verdict == OracleVerdict::None) return {OracleVerdict::None, used};
        }
    }
    if (used >= budget) return {OracleVerdict::Undecided, used};
    auto res = run_on_prefix(m, budget - used);
    return {res.verdict, used};
}

// Shared driver: colours every edge of g from `allowed`, avoiding all
// forbidden configurations, splitting into clusters.
ColouringResult drive(const Graph& g, std::vector<Forbidden> forbidden,
                      const std::vector<std::vector<int>>& allowed, bool fix_first,
                      const SearchLimits& limits) {
    ColouringResult out;
    std::vector<int> colours(static_cast<size_t>(g.edge_count()), -1);
    auto clusters = configuration_clusters(g.edge_count(), forbidden);
    bool undecided = false;
    for (const auto& cluster : clusters) {
        if (out.nodes >= limits.max_nodes) {
            undecided = true;
            break;
        }
        std::vector<int> cluster_colours;
        auto res = solve_cluster(g, cluster, forbidden, allowed, fix_first,
                                 limits.max_nodes - out.nodes, &cluster_colours);
        out.nodes += res.nodes;
        if (res.verdict == OracleVerdict::None) {
            out.verdict = OracleVerdict::None;
            return out;
        }
        if (res.verdict == OracleVerdict::Undecided) {
            undecided = true;
        } else {
            for (const auto& e : cluster)
                colours[static_cast<size_t>(e)] = cluster_colours[static_cast<size_t>(e)];
        }
    }
    if (undecided) {
        out.verdict = OracleVerdict::Undecided;
        return out;
    }
    // Edges in no forbidden configuration take their first allowed colour.
    for (int e = 0; e < g.edge_count(); ++e)
        if (colours[static_cast<size_t>(e)] == -1) colours[static_cast<size_t>(e)] = allowed[static_cast<size_t>(e)].front();
    out.verdict = OracleVerdict::Found;
    out.colouring = EdgeColouring{std::move(colours)};
    return out;
}

void check_edge_cap(const Graph& g, const SearchLimits& limits, const char* op) {
    if (g.edge_count() > limits.max_edges)
        throw ResourceError(std::string(op) + ": host has " + std::to_string(g.edge_count()) +
                            " edges, exceeding the exhaustive-search cap of " +
                            std::to_string(limits.max_edges) + " (raise limits.max_edges)");
}

}  // namespace

bool colouring_avoids_family(const Graph& g, const GraphFamily& fam, const EdgeColouring& col) {
    for (const auto& member : fam.members())
        for (const auto& copy : enumerate_copies(member.graph, g)) {
            int c = col.colour(copy[0]);
            bool mono = true;
            for (int e : copy)
                if (col.colour(e) != c) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
    return true;
}

ColouringResult good_colouring(const Graph& g, const GraphFamily& fam, int r,
                               const SearchLimits& limits) {
    if (r < 2) throw DomainError("good_colouring: need r >= 2");
    check_edge_cap(g, limits, "good_colouring");
    std::vector<int> palette(static_cast<size_t>(r));
    std::iota(palette.begin(), palette.end(), 0);
    std::vector<std::vector<int>> allowed(static_cast<size_t>(g.edge_count()), palette);
    auto res = drive(g, forbidden_for_family(g, fam), allowed, /*fix_first=*/true, limits);
    if (res.verdict == OracleVerdict::Found &&
        !colouring_avoids_family(g, fam, *res.colouring))
        throw FalsificationError("good_colouring: witness failed revalidation");
    return res;
}

RamseyVerdict is_asymmetric_ramsey(const Graph& g, const std::vector<NamedGraph>& seq,
                                   const SearchLimits& limits) {
    if (seq.size() < 2 || seq.size() > 4)
        throw DomainError("is_asymmetric_ramsey: need between 2 and 4 colours");
    check_edge_cap(g, limits, "is_asymmetric_ramsey");
    std::vector<Forbidden> forb;
    for (size_t i = 0; i < seq.size(); ++i)
        for (auto& copy : enumerate_copies(seq[i].graph, g))
            forb.push_back({std::move(copy), static_cast<int>(i)});
    bool symmetric = true;
    for (size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i].graph == seq[0].graph)) symmetric = false;
    std::vector<int> palette(seq.size());
    std::iota(palette.begin(), palette.end(), 0);
    std::vector<std::vector<int>> allowed(static_cast<size_t>(g.edge_count()), palette);
    auto res = drive(g, std::move(forb), allowed, symmetric, limits);
    RamseyVerdict verdict;
    verdict.nodes = res.nodes;
    verdict.verdict = res.verdict == OracleVerdict::Found ? OracleVerdict::Found
                      : res.verdict == OracleVerdict::None ? OracleVerdict::None
                                                           : OracleVerdict::Undecided;
    if (res.verdict == OracleVerdict::Found) {
        // Revalidate: colour i must avoid seq[i].
        for (size_t i = 0; i < seq.size(); ++i)
            for (const auto& copy : enumerate_copies(seq[i].graph, g)) {
                bool mono = true;
                for (int e : copy)
                    if (res.colouring->colour(e) != static_cast<int>(i)) {
                        mono = false;
                        break;
                    }
                if (mono)
                    throw FalsificationError("is_asymmetric_ramsey: witness failed revalidation");
            }
        verdict.witness = std::move(res.colouring);
    }
    return verdict;
}

ColouringResult colouring_from_lists(const Graph& g, const GraphFamily& fam,
                                     const ListAssignment& lists, const SearchLimits& limits) {
    lists.validate(g);
    check_edge_cap(g, limits, "colouring_from_lists");
    auto res = drive(g, forbidden_for_family(g, fam), lists.list_of, /*fix_first=*/false, limits);
    if (res.verdict == OracleVerdict::Found &&
        !colouring_avoids_family(g, fam, *res.colouring))
        throw FalsificationError("colouring_from_lists: witness failed revalidation");
    return res;
}

namespace {

// Ascending r-subsets of {0..limit-1} whose new colours (>= used) form the
// contiguous block used, used+1, ...: the restricted-growth canonical form
// for set-valued assignments.
void canonical_lists(int r, int used, int cap, std::vector<std::vector<int>>& out) {
    out.clear();
    int top = std::min(cap, used + r);
    std::vector<int> subset;
    // Enumerate ascending subsets of {0..top-1} of size r in lex order.
    subset.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) subset[static_cast<size_t>(i)] = i;
    if (r > top) return;
    while (true) {
        // New colours must be exactly used, used+1, ... with no gap.
        bool ok = true;
        int expect = used;
        for (int c : subset)
            if (c >= used) {
                if (c != expect) {
                    ok = false;
                    break;
                }
                ++expect;
            }
        if (ok) out.push_back(subset);
        int i = r - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == top - r + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
}

// Renumbers colours of a list sequence in first-use order.
std::vector<std::vector<int>> renumber(const std::vector<std::vector<int>>& lists) {
    std::vector<int> map;
    std::vector<std::vector<int>> out;
    auto idx = [&](int c) {
        for (size_t i = 0; i < map.size(); ++i)
            if (map[i] == c) return static_cast<int>(i);
        map.push_back(c);
        return static_cast<int>(map.size()) - 1;
    };
    for (const auto& lst : lists) {
        std::vector<int> nl;
        for (int c : lst) nl.push_back(idx(c));
        std::sort(nl.begin(), nl.end());
        out.push_back(std::move(nl));
    }
    return out;
}

}  // namespace

BadListResult find_bad_list_assignment(const Graph& g, const GraphFamily& fam, int r,
                                       int palette_cap, std::uint64_t budget) {
    if (r < 2) throw DomainError("find_bad_list_assignment: need r >= 2");
    if (palette_cap < r) throw DomainError("find_bad_list_assignment: palette_cap < r");
    int m = g.edge_count();
    BadListResult result;
    if (m == 0) {
        result.outcome = BadListOutcome::NotFoundComplete;
        return result;
    }
    bool complete_bound = palette_cap >= r * m;

    // Automorphisms of g as edge permutations.
    std::vector<int> all_edges(static_cast<size_t>(m));
    std::iota(all_edges.begin(), all_edges.end(), 0);
    std::vector<std::vector<int>> edge_perms;
    for (const auto& phi : copy_isomorphisms(g, g, all_edges)) {
        std::vector<int> ep(static_cast<size_t>(m));
        bool identity = true;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edge(e);
            ep[static_cast<size_t>(e)] = g.edge_index(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]);
            if (ep[static_cast<size_t>(e)] != e) identity = false;
        }
        if (!identity) edge_perms.push_back(std::move(ep));
    }

    std::vector<std::vector<int>> lists;  // prefix, indexed by edge
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // Lex comparison against every automorphic image of the prefix; a strictly
    // smaller image means this prefix is not the canonical orbit
    // representative and can be skipped.
    auto prefix_is_canonical = [&](size_t k) {
        for (const auto& ep : edge_perms) {
            std::vector<std::vector<int>> image;
            for (size_t i = 0; i < k; ++i) {
                int pre = ep[i];  // image at position i is the list of edge ep[i]
                if (pre >= static_cast<int>(k)) break;
                image.push_back(lists[static_cast<size_t>(pre)]);
            }
            if (image.empty()) continue;
            auto canon = renumber(image);
            bool smaller = false, larger = false;
            for (size_t i = 0; i < canon.size(); ++i) {
                if (canon[i] < lists[i]) {
                    smaller = true;
                    break;
                }
                if (lists[i] < canon[i]) {
                    larger = true;
                    break;
                }
            }
            if (smaller && !larger) return false;
        }
        return true;
    };

    std::function<bool(int, int)> rec = [&](int edge, int used) -> bool {
        if (nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (edge == m) {
            ListAssignment la;
            la.r = r;
            la.list_of = lists;
            la.validate(g);
            SearchLimits inner;
            inner.max_edges = m;
            inner.max_nodes = budget > nodes ? budget - nodes : 1;
            auto res = colouring_from_lists(g, fam, la, inner);
            nodes += res.nodes;
            if (res.verdict == OracleVerdict::Undecided) {
                out_of_budget = true;
                return false;
            }
            if (res.verdict == OracleVerdict::None) {
                result.assignment = la;
                return true;
            }
            return false;
        }
        std::vector<std::vector<int>> options;
        canonical_lists(r, used, palette_cap, options);
        for (auto& opt : options) {
            ++nodes;
            int new_used = used;
            for (int c : opt) new_used = std::max(new_used, c + 1);
            lists.push_back(opt);
            bool keep = prefix_is_canonical(lists.size());
            if (keep && rec(edge + 1, new_used)) return true;
            lists.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    };

    bool found = rec(0, 0);
    result.nodes = nodes;
    if (found) {
        result.outcome = BadListOutcome::Found;
    } else if (out_of_budget) {
        result.outcome = BadListOutcome::NotFoundBudget;
    } else {
        result.outcome = complete_bound ? BadListOutcome::NotFoundComplete
                                        : BadListOutcome::NotFoundBounded;
    }
    return result;
}

MinimalityReport is_minimally_ramsey(const Graph& g, const GraphFamily& fam, int r,
                                     const SearchLimits& limits) {
    MinimalityReport rep;
    auto whole = good_colouring(g, fam, r, limits);
    rep.nodes += whole.nodes;
    rep.ramsey = whole.verdict;
    if (whole.verdict != OracleVerdict::None) {
        rep.minimal = false;
        rep.decided = whole.verdict == OracleVerdict::Found;
        return rep;
    }
    rep.minimal = true;
    rep.decided = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        Graph smaller = with_edge_removed(g, e);
        auto res = good_colouring(smaller, fam, r, limits);
        rep.nodes += res.nodes;
        if (res.verdict == OracleVerdict::Undecided) {
            rep.minimal = false;
            rep.decided = false;
            rep.deletion_certificates.clear();
            return rep;
        }
        if (res.verdict == OracleVerdict::None) {
            rep.minimal = false;  // the deletion is still Ramsey
            rep.deletion_certificates.clear();
            return rep;
        }
        rep.deletion_certificates.push_back(*res.colouring);
    }
    return rep;
}

}  // namespace ramseylab
