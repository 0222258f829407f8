#include "ramseylab/explore.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ramseylab/copies.hpp"
#include "ramseylab/density.hpp"
#include "ramseylab/errors.hpp"
#include "ramseylab/hypergraph.hpp"

namespace ramseylab {

EtaConstants eta_constant(const GraphFamily& fam) {
    for (const auto& member : fam.members()) {
        auto rep = is_strictly_two_balanced(member.graph);
        if (!rep.strictly_balanced)
            throw DomainError("eta_constant: member '" + member.name +
                              "' is not strictly 2-balanced");
    }
    EtaConstants out;
    out.t = family_two_density(fam);

    for (const auto& member : fam.members()) {
        const Graph& f = member.graph;
        Rational m2 = max_two_density(f);
        if (m2 > out.t) {
            Rational value = Rational(f.edge_count() - 1) - out.t * Rational(f.n() - 2);
            if (!out.eta1 || value < *out.eta1) out.eta1 = value;
        }
        // Proper subgraphs with >= 2 edges: induced proper subsets dominate,
        // plus the spanning subgraph missing one edge.
        if (f.edge_count() >= 3) {
            Rational value = Rational(1);  // (e - (e-1)) - t * 0
            if (!out.eta2 || value < *out.eta2) out.eta2 = value;
        }
        for (uint32_t mask = 1; mask + 1 < (1u << f.n()); ++mask) {
            int v = __builtin_popcount(mask);
            if (v < 3) continue;
            int e = 0;
            for (const auto& [a, b] : f.edges())
                if ((mask & (1u << a)) && (mask & (1u << b))) ++e;
            if (e < 2) continue;
            Rational value =
                Rational(f.edge_count() - e) - out.t * Rational(f.n() - v);
            if (!out.eta2 || value < *out.eta2) out.eta2 = value;
        }
    }
    if (!out.eta1 && !out.eta2)
        throw DomainError("eta_constant: no degenerate overlap is possible for this family");
    if (out.eta1 && !(*out.eta1 > Rational(0)))
        throw FalsificationError("eta_constant: eta1 is not strictly positive");
    if (out.eta2 && !(*out.eta2 > Rational(0)))
        throw FalsificationError("eta_constant: eta2 is not strictly positive");
    if (out.eta1 && out.eta2)
        out.eta = std::min(*out.eta1, *out.eta2);
    else
        out.eta = out.eta1 ? *out.eta1 : *out.eta2;
    return out;
}

long long gamma_constant(const GraphFamily& fam) {
    EtaConstants c = eta_constant(fam);
    Rational ratio = (Rational(2) * c.t) / c.eta;
    return ratio.ceil().convert_to<long long>();
}

namespace {

struct CopyInfo {
    int member;
    std::vector<int> edge_indices;  // ascending host edge indices
    std::vector<int> vertices;      // ascending host vertices
};

std::vector<int> touched_vertices(const Graph& g, const std::vector<int>& edge_indices) {
    std::vector<int> out;
    for (int ei : edge_indices) {
        out.push_back(g.edge(ei).first);
        out.push_back(g.edge(ei).second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ExplorationTrace explore_cluster(const Graph& c, const GraphFamily& fam, long long gamma,
                                 int log_bound) {
    if (gamma < 1) throw DomainError("explore_cluster: gamma must be >= 1");
    if (!is_f_cluster(c, fam)) throw DomainError("explore_cluster: input is not an F-cluster");
    Rational t = family_two_density(fam);

    std::vector<CopyInfo> copies;
    for (size_t mi = 0; mi < fam.size(); ++mi)
        for (auto& edge_set : enumerate_copies(fam[mi].graph, c))
            copies.push_back({static_cast<int>(mi), edge_set, touched_vertices(c, edge_set)});
    std::vector<char> member_at_t(fam.size(), 0);
    for (size_t mi = 0; mi < fam.size(); ++mi)
        member_at_t[mi] = max_two_density(fam[mi].graph) == t;

    std::vector<char> edge_in(static_cast<size_t>(c.edge_count()), 0);
    std::vector<char> vertex_in(static_cast<size_t>(c.n()), 0);
    std::vector<int> arrival(static_cast<size_t>(c.edge_count()), -1);
    std::vector<int> arrival_order;

    ExplorationTrace trace;
    trace.n = c.n();
    trace.seed = c.edge(0);  // the lexicographically smallest edge
    auto add_edge = [&](int ei) {
        edge_in[static_cast<size_t>(ei)] = 1;
        arrival[static_cast<size_t>(ei)] = static_cast<int>(arrival_order.size());
        arrival_order.push_back(ei);
        vertex_in[static_cast<size_t>(c.edge(ei).first)] = 1;
        vertex_in[static_cast<size_t>(c.edge(ei).second)] = 1;
    };
    add_edge(0);
    int e_count = 1, v_count = 2;
    trace.snapshots.push_back({e_count, v_count});

    while (true) {
        if (e_count == c.edge_count()) {
            trace.stop_reason = StopReason::Complete;
            break;
        }
        if (trace.degenerate_count >= gamma) {
            trace.stop_reason = StopReason::GammaDegenerate;
            break;
        }
        if (v_count >= log_bound) {
            trace.stop_reason = StopReason::LogSize;
            break;
        }

        // Candidates: copies meeting C_i in at least one edge, not contained.
        int best_regular = -1, best_regular_root_arrival = -1;
        int best_degenerate = -1;
        for (size_t k = 0; k < copies.size(); ++k) {
            const auto& cp = copies[k];
            int inside = 0;
            for (int ei : cp.edge_indices)
                if (edge_in[static_cast<size_t>(ei)]) ++inside;
            if (inside == 0 || inside == static_cast<int>(cp.edge_indices.size())) continue;
            bool regular = false;
            int root_edge = -1;
            if (inside == 1 && member_at_t[static_cast<size_t>(cp.member)]) {
                for (int ei : cp.edge_indices)
                    if (edge_in[static_cast<size_t>(ei)]) root_edge = ei;
                // The intersection must be exactly the root edge and its two
                // endpoints: an extra shared vertex changes the vertex count
                // bookkeeping and makes the step degenerate.
                int shared_vertices = 0;
                for (int v : cp.vertices)
                    if (vertex_in[static_cast<size_t>(v)]) ++shared_vertices;
                regular = shared_vertices == 2;
            }
            if (regular) {
                int root_arrival = arrival[static_cast<size_t>(root_edge)];
                if (best_regular < 0 || root_arrival < best_regular_root_arrival ||
                    (root_arrival == best_regular_root_arrival &&
                     cp.edge_indices < copies[static_cast<size_t>(best_regular)].edge_indices)) {
                    best_regular = static_cast<int>(k);
                    best_regular_root_arrival = root_arrival;
                }
            } else {
                if (best_degenerate < 0 ||
                    cp.edge_indices < copies[static_cast<size_t>(best_degenerate)].edge_indices)
                    best_degenerate = static_cast<int>(k);
            }
        }
        int chosen = best_regular >= 0 ? best_regular : best_degenerate;
        if (chosen < 0)
            throw FalsificationError("explore_cluster: no copy meets the current subgraph in an "
                                     "edge although the hypergraph is connected");
        const auto& cp = copies[static_cast<size_t>(chosen)];

        StepRecord step;
        step.member = cp.member;
        auto isos = copy_isomorphisms(fam[static_cast<size_t>(cp.member)].graph, c, cp.edge_indices);
        if (isos.empty())
            throw FalsificationError("explore_cluster: copy admits no isomorphism");
        step.vertex_images = isos.front();  // lex-least
        if (best_regular >= 0) {
            step.kind = StepKind::Regular;
            for (int ei : cp.edge_indices)
                if (edge_in[static_cast<size_t>(ei)]) {
                    step.root = c.edge(ei);
                    step.root_birth = arrival[static_cast<size_t>(ei)];
                }
        } else {
            step.kind = StepKind::Degenerate;
            ++trace.degenerate_count;
            for (int ei : cp.edge_indices)
                if (edge_in[static_cast<size_t>(ei)]) step.overlap_edges.push_back(c.edge(ei));
        }
        for (int img : step.vertex_images)
            if (!vertex_in[static_cast<size_t>(img)]) step.new_vertices.push_back(img);
        std::vector<int> fresh;
        for (int ei : cp.edge_indices)
            if (!edge_in[static_cast<size_t>(ei)]) fresh.push_back(ei);
        for (int v : cp.vertices)
            if (!vertex_in[static_cast<size_t>(v)]) ++v_count;
        for (int ei : fresh) add_edge(ei);  // ascending = lexicographic within the step
        e_count += static_cast<int>(fresh.size());
        step.e_after = e_count;
        step.v_after = v_count;
        trace.steps.push_back(std::move(step));
        trace.snapshots.push_back({e_count, v_count});
    }
    trace.tau = static_cast<int>(trace.steps.size());
    return trace;
}

bool verify_balance(const ExplorationTrace& trace, const Rational& t, const Rational& eta) {
    if (trace.snapshots.size() != trace.steps.size() + 1)
        throw DomainError("verify_balance: malformed trace (snapshot count)");
    if (trace.snapshots[0] != std::pair<int, int>{1, 2})
        throw DomainError("verify_balance: malformed trace (C_0 is not a single edge)");
    auto lhs = [&](size_t i) {
        return Rational(trace.snapshots[i].first - 1) -
               t * Rational(trace.snapshots[i].second - 2);
    };
    Rational degenerate_steps(0);
    for (size_t i = 1; i < trace.snapshots.size(); ++i) {
        const StepRecord& step = trace.steps[i - 1];
        if (step.kind == StepKind::Regular) {
            if (lhs(i) != lhs(i - 1)) return false;
        } else {
            degenerate_steps += Rational(1);
            if (lhs(i) < lhs(i - 1) + eta) return false;
        }
        if (lhs(i) < eta * degenerate_steps) return false;
    }
    return true;
}

namespace {

std::string edge_token(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge parse_edge_token(const std::string& tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw DomainError("trace: bad edge token '" + tok + "'");
    return {std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))};
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace

std::vector<std::string> encode_trace(const ExplorationTrace& trace) {
    std::vector<std::string> lines;
    lines.push_back("C0 " + edge_token(trace.seed));
    int last_birth = -1;
    for (const auto& step : trace.steps) {
        std::ostringstream os;
        if (step.kind == StepKind::Regular) {
            if (step.root_birth < last_birth)
                throw FalsificationError("encode_trace: root birth times are not non-decreasing");
            last_birth = step.root_birth;
            os << "R " << step.member << " " << step.root_birth << " " << edge_token(step.root)
               << " " << join_ints(step.vertex_images);
        } else {
            os << "D " << step.member << " ";
            for (size_t i = 0; i < step.overlap_edges.size(); ++i)
                os << (i ? "," : "") << edge_token(step.overlap_edges[i]);
            os << " ; " << join_ints(step.vertex_images);
        }
        lines.push_back(os.str());
    }
    return lines;
}

Graph decode_trace(const std::vector<std::string>& tokens, const GraphFamily& fam, int n) {
    if (tokens.empty()) throw DomainError("decode_trace: empty token list");
    std::istringstream head(tokens[0]);
    std::string tag, seed_tok;
    head >> tag >> seed_tok;
    if (tag != "C0") throw DomainError("decode_trace: missing C0 line");
    Edge seed = parse_edge_token(seed_tok);
    std::vector<Edge> edges = {seed};
    std::vector<Edge> arrival_order = {seed};
    auto have_edge = [&](const Edge& e) {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    };

    for (size_t li = 1; li < tokens.size(); ++li) {
        std::istringstream is(tokens[li]);
        std::string kind;
        is >> kind;
        int member;
        is >> member;
        if (member < 0 || member >= static_cast<int>(fam.size()))
            throw DomainError("decode_trace: member index out of range");
        const Graph& f = fam[static_cast<size_t>(member)].graph;
        std::vector<int> images;
        Edge root{-1, -1};
        if (kind == "R") {
            int birth;
            std::string root_tok, img_tok;
            is >> birth >> root_tok >> img_tok;
            root = parse_edge_token(root_tok);
            if (birth < 0 || birth >= static_cast<int>(arrival_order.size()) ||
                arrival_order[static_cast<size_t>(birth)] != root)
                throw DomainError("decode_trace: root birth time does not match the root edge");
            images = split_ints(img_tok);
        } else if (kind == "D") {
            std::string overlap_tok, semi, img_tok;
            is >> overlap_tok >> semi >> img_tok;
            if (semi != ";") throw DomainError("decode_trace: malformed degenerate line");
            images = split_ints(img_tok);
            std::string cur;
            for (char ch : overlap_tok + ",") {
                if (ch == ',') {
                    if (!have_edge(parse_edge_token(cur)))
                        throw DomainError("decode_trace: overlap edge not present yet");
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
        } else {
            throw DomainError("decode_trace: unknown step kind '" + kind + "'");
        }
        if (static_cast<int>(images.size()) != f.n())
            throw DomainError("decode_trace: image count does not match the member order");
        for (int img : images)
            if (img < 0 || img >= n) throw DomainError("decode_trace: vertex image out of range");
        std::vector<Edge> fresh;
        for (const auto& [a, b] : f.edges()) {
            int u = images[static_cast<size_t>(a)], v = images[static_cast<size_t>(b)];
            if (u == v) throw DomainError("decode_trace: images collapse an edge");
            Edge e{std::min(u, v), std::max(u, v)};
            if (!have_edge(e)) fresh.push_back(e);
        }
        if (kind == "R" && !have_edge(root))
            throw DomainError("decode_trace: root edge absent");
        std::sort(fresh.begin(), fresh.end());
        for (const auto& e : fresh) {
            edges.push_back(e);
            arrival_order.push_back(e);
        }
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> find_clusters(const Graph& g, const GraphFamily& fam) {
    std::vector<std::vector<int>> copy_sets;
    for (const auto& member : fam.members())
        for (auto& edge_set : enumerate_copies(member.graph, g))
            copy_sets.push_back(std::move(edge_set));

    std::vector<int> parent(static_cast<size_t>(g.edge_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> covered(static_cast<size_t>(g.edge_count()), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& cs : copy_sets)
        for (int ei : cs) {
            covered[static_cast<size_t>(ei)] = 1;
            parent[static_cast<size_t>(find(ei))] = find(cs[0]);
        }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<size_t>(g.edge_count()), -1);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (!covered[static_cast<size_t>(ei)]) continue;
        int r = find(ei);
        if (group_of[static_cast<size_t>(r)] == -1) {
            group_of[static_cast<size_t>(r)] = static_cast<int>(groups.size());
            groups.push_back({});
        }
        groups[static_cast<size_t>(group_of[static_cast<size_t>(r)])].push_back(ei);
    }
    std::vector<Graph> out;
    for (const auto& group : groups) out.push_back(spanned_subgraph(g, group));
    return out;
}

std::vector<BadCluster> scan_bad_clusters(const Graph& g, const GraphFamily& fam,
                                          const Rational& t) {
    std::vector<BadCluster> out;
    for (auto& cluster : find_clusters(g, fam)) {
        Rational density = Rational(cluster.edge_count()) / Rational(cluster.n());
        if (density > t) out.push_back({std::move(cluster), density});
    }
    return out;
}

}  // namespace ramseylab
