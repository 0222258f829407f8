#include "ramseylab/structure.hpp"

#include <algorithm>

#include "ramseylab/density.hpp"
#include "ramseylab/errors.hpp"

namespace ramseylab {

int edge_boundary(const Graph& f, const std::vector<int>& w) {
    std::vector<char> in_w(static_cast<size_t>(f.n()), 0);
    for (int v : w) {
        if (v < 0 || v >= f.n()) throw DomainError("edge_boundary: W is not a vertex subset");
        in_w[static_cast<size_t>(v)] = 1;
    }
    int count = 0;
    for (const auto& [u, v] : f.edges())
        if (in_w[static_cast<size_t>(u)] || in_w[static_cast<size_t>(v)]) ++count;
    return count;
}

HelpfulLemmaReport helpful_lemma_check(const Graph& f) {
    auto rep = is_strictly_two_balanced(f);
    if (!rep.strictly_balanced)
        throw DomainError("helpful_lemma_check: input is not strictly 2-balanced");
    Rational m2 = max_two_density(f);
    HelpfulLemmaReport out;
    // Subsets by size then lex, so the reported violation is the first one.
    for (int size = 1; size <= f.n() - 3; ++size) {
        std::vector<int> w(static_cast<size_t>(size));
        // Enumerate ascending combinations.
        for (int i = 0; i < size; ++i) w[static_cast<size_t>(i)] = i;
        while (true) {
            if (!(Rational(edge_boundary(f, w)) > m2 * Rational(size))) {
                out.holds = false;
                out.violating_set = w;
                return out;
            }
            int i = size - 1;
            while (i >= 0 && w[static_cast<size_t>(i)] == f.n() - size + i) --i;
            if (i < 0) break;
            ++w[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) w[static_cast<size_t>(j)] = w[static_cast<size_t>(j - 1)] + 1;
        }
    }
    out.holds = true;
    return out;
}

DischargeWitness discharging_case(const Graph& g, int k, const Rational& eps) {
    if (k < 1) throw DomainError("discharging_case: k must be >= 1");
    if (eps < Rational(0) || eps >= Rational(1))
        throw DomainError("discharging_case: eps must lie in [0,1)");
    if (g.n() == 0) throw DomainError("discharging_case: empty graph");
    if (Rational(g.edge_count()) > (Rational(k) + eps) * Rational(g.n()))
        throw DomainError("discharging_case: density precondition e/v <= k + eps violated");

    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 2 * k) return {DischargeCase::Da, {v}, {g.degree(v)}};

    if (eps >= Rational::of(1, 2)) {
        for (int u = 0; u < g.n(); ++u) {
            if (g.degree(u) != 2 * k + 1) continue;
            for (int v : g.neighbours(u))
                if (g.degree(v) <= 2 * k + 2)
                    return {DischargeCase::Db, {u, v}, {g.degree(u), g.degree(v)}};
        }
    }
    if (eps >= Rational::of(7, 8)) {
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 2 * k + 3) continue;
            std::vector<int> low;
            for (int u : g.neighbours(v))
                if (g.degree(u) == 2 * k + 1) low.push_back(u);
            if (low.size() >= 2)
                return {DischargeCase::Dc,
                        {v, low[0], low[1]},
                        {g.degree(v), g.degree(low[0]), g.degree(low[1])}};
        }
    }
    throw FalsificationError("discharging_case: no witness found for a graph meeting the "
                             "precondition (k=" + std::to_string(k) + ", eps=" + eps.str() + ")");
}

namespace {

bool component_is_star(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() <= 2) return true;  // vertex or edge
    int center = -1;
    for (int v : comp)
        if (g.degree(v) > 1) {
            if (center != -1) return false;
            center = v;
        }
    return true;  // at most one vertex of degree > 1
}

bool component_is_path(const Graph& g, const std::vector<int>& comp) {
    int e = 0, deg1 = 0;
    for (int v : comp) {
        int d = g.degree(v);
        if (d > 2) return false;
        if (d == 1) ++deg1;
        e += d;
    }
    e /= 2;
    if (e != static_cast<int>(comp.size()) - 1) return false;  // not a tree
    return comp.size() == 1 || deg1 == 2;
}

bool component_is_cycle(const Graph& g, const std::vector<int>& comp) {
    for (int v : comp)
        if (g.degree(v) != 2) return false;
    return comp.size() >= 3;
}

}  // namespace

GraphClass classify(const Graph& g) {
    GraphClass out;
    out.is_forest = true;
    out.is_star_forest = true;
    out.is_b_graph = true;
    out.is_cstar_graph = true;
    out.is_unicyclic_per_component = true;

    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        ComponentSummary cs;
        cs.vertices = comp;
        for (int v : comp) cs.edge_count += g.degree(v);
        cs.edge_count /= 2;
        cs.cycle_count = cs.edge_count - static_cast<int>(comp.size()) + 1;

        bool star = component_is_star(g, comp);
        bool path = component_is_path(g, comp);
        bool cyc = component_is_cycle(g, comp);
        if (comp.size() == 1)
            cs.shape = ComponentShape::SingleVertex;
        else if (star)
            cs.shape = ComponentShape::Star;
        else if (path)
            cs.shape = ComponentShape::Path;
        else if (cyc)
            cs.shape = comp.size() % 2 ? ComponentShape::OddCycle : ComponentShape::EvenCycle;
        else if (cs.cycle_count == 0)
            cs.shape = ComponentShape::Tree;
        else if (cs.cycle_count == 1)
            cs.shape = ComponentShape::Unicyclic;
        else
            cs.shape = ComponentShape::Dense;

        if (cs.cycle_count > 0) out.is_forest = false;
        if (cs.cycle_count > 1) out.is_unicyclic_per_component = false;
        if (!star && comp.size() > 1) out.is_star_forest = false;

        // Subgraph of an odd cycle means a path or the odd cycle itself.
        bool cstar_comp = star || path || (cyc && comp.size() % 2 == 1);
        if (!cstar_comp) out.is_cstar_graph = false;

        // Broom embeddability by explicit search into a broom with as many
        // hairs as the component has edges.
        if (out.is_b_graph && comp.size() > 1) {
            Graph sub = induced_subgraph(g, comp);
            if (!embeds_into(sub, broom_graph(std::max(1, sub.edge_count()))))
                out.is_b_graph = false;
        }
        out.components.push_back(std::move(cs));
    }

    // The whole graph is a broom: a tree on >= 3 vertices isomorphic to
    // broom(v - 3); embedding in both directions with equal sizes is enough.
    if (comps.size() == 1 && g.n() >= 3 && g.edge_count() == g.n() - 1) {
        Graph b = broom_graph(g.n() - 3);
        out.is_broom = embeds_into(g, b) && embeds_into(b, g);
    }
    return out;
}

std::string shape_name(ComponentShape s) {
    switch (s) {
        case ComponentShape::SingleVertex: return "vertex";
        case ComponentShape::Star: return "star";
        case ComponentShape::Path: return "path";
        case ComponentShape::OddCycle: return "odd-cycle";
        case ComponentShape::EvenCycle: return "even-cycle";
        case ComponentShape::Tree: return "tree";
        case ComponentShape::Unicyclic: return "unicyclic";
        case ComponentShape::Dense: return "dense";
    }
    return "?";
}

}  // namespace ramseylab
