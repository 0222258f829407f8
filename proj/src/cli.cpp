#include "ramseylab/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramseylab/constructive.hpp"
#include "ramseylab/density.hpp"
#include "ramseylab/errors.hpp"
#include "ramseylab/explore.hpp"
#include "ramseylab/graph_io.hpp"
#include "ramseylab/hypergraph.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/structure.hpp"
#include "ramseylab/sweep.hpp"

namespace ramseylab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNone = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitUsage = 64;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Provenance {
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::uint64_t>> inputs;

    std::string render() const {
        std::ostringstream os;
        os << "# ramseylab " << kVersion << "\n# command:";
        for (const auto& a : args) os << " " << a;
        os << "\n";
        for (const auto& [path, digest] : inputs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
            os << "# input: " << path << " fnv1a=" << buf << "\n";
        }
        std::time_t now = std::time(nullptr);
        char stamp[64];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        os << "# generated-at: " << stamp << "\n";
        return os.str();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --graph accepts a file path or a named graph (K5, C7, P4, S3, B2, petersen).
Graph resolve_graph(const std::string& spec, Provenance& prov) {
    if (std::filesystem::exists(spec)) {
        std::string data = slurp(spec);
        prov.inputs.push_back({spec, fnv1a(data)});
        return read_graph_text(data);
    }
    return named_graph(spec);
}

// --family accepts a JSON file or a comma-separated list of graph names.
GraphFamily resolve_family(const std::string& spec, Provenance& prov) {
    if (std::filesystem::exists(spec)) {
        std::string data = slurp(spec);
        prov.inputs.push_back({spec, fnv1a(data)});
        return read_family_json(data);
    }
    std::vector<NamedGraph> members;
    std::string cur;
    for (char ch : spec + ",") {
        if (ch == ',') {
            if (!cur.empty()) members.push_back({cur, named_graph(cur)});
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return GraphFamily(std::move(members));
}

ListAssignment resolve_lists(const std::string& lists_path, const std::string& identical,
                             const Graph& host, Provenance& prov) {
    if (!lists_path.empty()) {
        std::string data = slurp(lists_path);
        prov.inputs.push_back({lists_path, fnv1a(data)});
        return read_lists_json(data, host);
    }
    if (!identical.empty()) {
        std::vector<int> colours;
        std::string cur;
        for (char ch : identical + ",") {
            if (ch == ',') {
                if (!cur.empty()) colours.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        return ListAssignment::identical(host, colours);
    }
    return ListAssignment::identical(host, {0, 1});
}

std::string render_colouring(const Graph& g, const EdgeColouring& col) {
    std::ostringstream os;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        os << u << " " << v << " " << col.colour(e) << "\n";
    }
    return os.str();
}

void emit(const std::string& output_path, const Provenance& prov, const std::string& body,
          std::ostream& out) {
    std::string full = prov.render() + body;
    if (output_path.empty()) {
        out << full;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) throw DomainError("cannot write output file: " + output_path);
        f << full;
        out << "wrote " << output_path << "\n";
    }
}

}  // namespace

std::string strip_volatile_lines(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("# generated-at:", 0) != 0) out << line << "\n";
    return out.str();
}

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ramseylab: exact desk-scale machinery for random Ramsey 0-statements"};
    app.require_subcommand(1);

    std::string graph_spec, family_spec, lists_path, identical, output_path;
    std::string mixed_spec, seq_spec, algo, kind = "list", mode = "ramsey", p_spec, phi_spec;
    int r = 2, cap = 7, n = 0, trials = 100, palette_cap = 4, log_bound = 64, jobs = 1;
    long long gamma_flag = 0;
    std::uint64_t seed = 0, budget = 5'000'000;
    SearchLimits limits;
    bool minimal = false, find_bad = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", output_path, "write the result to this file");
        sub->add_option("--max-edges", limits.max_edges, "exhaustive-search edge cap");
        sub->add_option("--max-nodes", limits.max_nodes, "search node budget");
    };

    auto* density_cmd = app.add_subcommand("density", "m, m2, family m2, mixed m2, balancedness");
    density_cmd->add_option("--graph", graph_spec);
    density_cmd->add_option("--family", family_spec);
    density_cmd->add_option("--mixed", mixed_spec, "H,L pair for the mixed 2-density");
    density_cmd->add_option("--k", n, "shorthand for --graph Kk");
    add_common(density_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "B-graph / C*-graph / star-forest flags");
    classify_cmd->add_option("--graph", graph_spec)->required();
    add_common(classify_cmd);

    auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey decision, asymmetric, minimality");
    ramsey_cmd->add_option("--graph", graph_spec)->required();
    ramsey_cmd->add_option("--family", family_spec);
    ramsey_cmd->add_option("--seq", seq_spec, "asymmetric sequence, e.g. K3,K4");
    ramsey_cmd->add_option("--r", r);
    ramsey_cmd->add_flag("--minimal", minimal, "check edge-minimality");
    add_common(ramsey_cmd);

    auto* lists_cmd = app.add_subcommand("lists", "list colouring and bad-assignment search");
    lists_cmd->add_option("--graph", graph_spec)->required();
    lists_cmd->add_option("--family", family_spec)->required();
    lists_cmd->add_option("--lists", lists_path);
    lists_cmd->add_option("--identical", identical, "identical lists, e.g. 0,1");
    lists_cmd->add_flag("--find-bad", find_bad, "search for a bad list assignment");
    lists_cmd->add_option("--r", r);
    lists_cmd->add_option("--palette-cap", palette_cap);
    lists_cmd->add_option("--budget", budget);
    add_common(lists_cmd);

    auto* colour_cmd = app.add_subcommand("colour", "constructive colourings by name");
    colour_cmd
        ->add_option("--algo", algo,
                     "nonrepetitive|cstar|broom|forest|k5k3|k6k4|sparse|aux-guided")
        ->required();
    colour_cmd->add_option("--graph", graph_spec);
    colour_cmd->add_option("--family", family_spec);
    colour_cmd->add_option("--lists", lists_path);
    colour_cmd->add_option("--identical", identical);
    colour_cmd->add_option("--phi", phi_spec, "aux colouring, e.g. 3:0,5:1");
    colour_cmd->add_option("--seed", seed);
    add_common(colour_cmd);

    auto* witness_cmd = app.add_subcommand("witness", "Ramsey witness constructions");
    witness_cmd->add_option("--kind", kind, "list|plain");
    witness_cmd->add_option("--family", family_spec)->required();
    witness_cmd->add_option("--aux-cap", cap);
    add_common(witness_cmd);

    auto* explore_cmd = app.add_subcommand("explore", "cluster exploration and trace round-trip");
    explore_cmd->add_option("--graph", graph_spec)->required();
    explore_cmd->add_option("--family", family_spec)->required();
    explore_cmd->add_option("--gamma", gamma_flag, "override Gamma (default: from eta)");
    explore_cmd->add_option("--log-bound", log_bound);
    add_common(explore_cmd);

    auto* aux_cmd = app.add_subcommand("aux", "Aux hypergraph and its 2-colourability");
    aux_cmd->add_option("--family", family_spec)->required();
    aux_cmd->add_option("--cap", cap);
    add_common(aux_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo threshold experiments");
    sweep_cmd->add_option("--mode", mode, "ramsey|cluster|unicyclic");
    sweep_cmd->add_option("--n", n)->required();
    sweep_cmd->add_option("--family", family_spec)->required();
    sweep_cmd->add_option("--p", p_spec, "comma-separated probabilities")->required();
    sweep_cmd->add_option("--trials", trials);
    sweep_cmd->add_option("--r", r);
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--jobs", jobs);
    add_common(sweep_cmd);

    std::vector<std::string> raw = args;
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    Provenance prov;
    prov.args = raw;

    try {
        if (density_cmd->parsed()) {
            std::ostringstream body;
            if (n > 0 && graph_spec.empty()) graph_spec = "K" + std::to_string(n);
            if (!graph_spec.empty()) {
                Graph g = resolve_graph(graph_spec, prov);
                body << "m = " << max_density(g).str() << "\n";
                body << "m2 = " << max_two_density(g).str() << "\n";
                if (g.n() >= 3) {
                    auto rep = is_strictly_two_balanced(g);
                    body << "strictly_2_balanced = " << (rep.strictly_balanced ? "true" : "false");
                    if (!rep.strictly_balanced && rep.violating_subgraph) {
                        body << "  (violating subgraph on";
                        for (int v : rep.violating_vertices) body << " " << v;
                        body << ")";
                    }
                    body << "\n";
                }
            }
            if (!family_spec.empty()) {
                GraphFamily fam = resolve_family(family_spec, prov);
                body << "family_m2 = " << family_two_density(fam).str() << "\n";
                bool reducible = true;
                for (const auto& mem : fam.members())
                    if (!(max_two_density(mem.graph) > Rational(1))) reducible = false;
                if (reducible) {
                    GraphFamily reduced = strictly_balanced_reduction(fam);
                    for (const auto& mem : reduced.members())
                        body << "reduced " << mem.name << ": n=" << mem.graph.n()
                             << " e=" << mem.graph.edge_count() << "\n";
                }
            }
            if (!mixed_spec.empty()) {
                auto comma = mixed_spec.find(',');
                if (comma == std::string::npos)
                    throw DomainError("--mixed expects H,L");
                Graph h = resolve_graph(mixed_spec.substr(0, comma), prov);
                Graph l = resolve_graph(mixed_spec.substr(comma + 1), prov);
                body << "mixed_m2 = " << mixed_two_density(h, l).str() << "\n";
            }
            if (body.str().empty()) throw DomainError("density: nothing to compute");
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (classify_cmd->parsed()) {
            Graph g = resolve_graph(graph_spec, prov);
            GraphClass cls = classify(g);
            std::ostringstream body;
            body << "is_forest = " << cls.is_forest << "\n"
                 << "is_star_forest = " << cls.is_star_forest << "\n"
                 << "is_broom = " << cls.is_broom << "\n"
                 << "is_b_graph = " << cls.is_b_graph << "\n"
                 << "is_cstar_graph = " << cls.is_cstar_graph << "\n"
                 << "is_unicyclic_per_component = " << cls.is_unicyclic_per_component << "\n";
            for (const auto& cs : cls.components)
                body << "component: v=" << cs.vertices.size() << " e=" << cs.edge_count
                     << " cycles=" << cs.cycle_count << " shape=" << shape_name(cs.shape) << "\n";
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (ramsey_cmd->parsed()) {
            Graph g = resolve_graph(graph_spec, prov);
            std::ostringstream body;
            if (!seq_spec.empty()) {
                GraphFamily seq = resolve_family(seq_spec, prov);
                auto verdict = is_asymmetric_ramsey(g, seq.members(), limits);
                if (verdict.verdict == OracleVerdict::Undecided) {
                    body << "verdict = UNDECIDED (node budget)\n";
                    emit(output_path, prov, body.str(), out);
                    return kExitUndecided;
                }
                body << "asymmetric_ramsey = " << (verdict.is_ramsey() ? "true" : "false") << "\n";
                if (verdict.witness) body << render_colouring(g, *verdict.witness);
                emit(output_path, prov, body.str(), out);
                return verdict.is_ramsey() ? kExitOk : kExitNone;
            }
            if (family_spec.empty()) throw DomainError("ramsey: need --family or --seq");
            GraphFamily fam = resolve_family(family_spec, prov);
            if (minimal) {
                auto rep = is_minimally_ramsey(g, fam, r, limits);
                if (!rep.decided) {
                    body << "verdict = UNDECIDED (node budget)\n";
                    emit(output_path, prov, body.str(), out);
                    return kExitUndecided;
                }
                body << "ramsey = " << (rep.ramsey == OracleVerdict::None ? "true" : "false")
                     << "\nminimally_ramsey = " << (rep.minimal ? "true" : "false") << "\n";
                emit(output_path, prov, body.str(), out);
                return rep.minimal ? kExitOk : kExitNone;
            }
            auto res = good_colouring(g, fam, r, limits);
            if (res.verdict == OracleVerdict::Undecided) {
                body << "verdict = UNDECIDED (node budget)\n";
                emit(output_path, prov, body.str(), out);
                return kExitUndecided;
            }
            if (res.verdict == OracleVerdict::None) {
                body << "ramsey = true\n";
                emit(output_path, prov, body.str(), out);
                return kExitOk;
            }
            body << "ramsey = false\n" << render_colouring(g, *res.colouring);
            emit(output_path, prov, body.str(), out);
            return kExitNone;
        }

        if (lists_cmd->parsed()) {
            Graph g = resolve_graph(graph_spec, prov);
            GraphFamily fam = resolve_family(family_spec, prov);
            std::ostringstream body;
            if (find_bad) {
                auto res = find_bad_list_assignment(g, fam, r, palette_cap, budget);
                switch (res.outcome) {
                    case BadListOutcome::Found:
                        body << "bad_assignment = found\n" << write_lists_json(*res.assignment);
                        emit(output_path, prov, body.str(), out);
                        return kExitOk;
                    case BadListOutcome::NotFoundComplete:
                        body << "bad_assignment = NOT-FOUND (COMPLETE: palette bound reached)\n";
                        emit(output_path, prov, body.str(), out);
                        return kExitNone;
                    case BadListOutcome::NotFoundBounded:
                        body << "bad_assignment = NOT-FOUND (BOUNDED: palette cap below "
                             << r * g.edge_count() << ")\n";
                        emit(output_path, prov, body.str(), out);
                        return kExitNone;
                    case BadListOutcome::NotFoundBudget:
                        body << "bad_assignment = NOT-FOUND (BOUNDED: budget exhausted)\n";
                        emit(output_path, prov, body.str(), out);
                        return kExitUndecided;
                }
            }
            ListAssignment la = resolve_lists(lists_path, identical, g, prov);
            auto res = colouring_from_lists(g, fam, la, limits);
            if (res.verdict == OracleVerdict::Undecided) {
                body << "verdict = UNDECIDED (node budget)\n";
                emit(output_path, prov, body.str(), out);
                return kExitUndecided;
            }
            if (res.verdict == OracleVerdict::None) {
                body << "colouring = NONE (the assignment is bad: list-Ramsey witness)\n";
                emit(output_path, prov, body.str(), out);
                return kExitNone;
            }
            body << "colouring = found\n" << render_colouring(g, *res.colouring);
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (colour_cmd->parsed()) {
            std::ostringstream body;
            Graph g = algo == "k5k3"   ? complete_graph(5)
                      : algo == "k6k4" ? complete_graph(6)
                                       : resolve_graph(graph_spec, prov);
            ListAssignment la = resolve_lists(lists_path, identical, g, prov);
            if (algo == "nonrepetitive") {
                auto res = nonrepetitive_colouring(g, la);
                if (res.nontrivial) {
                    body << "colouring = NONTRIVIAL\n";
                    emit(output_path, prov, body.str(), out);
                    return kExitNone;
                }
                body << render_colouring(g, *res.colouring);
            } else if (algo == "cstar") {
                body << render_colouring(g, cstar_colouring(g, la));
            } else if (algo == "broom") {
                body << render_colouring(g, broom_colouring(g, la));
            } else if (algo == "forest") {
                body << render_colouring(g, forest_list_colouring(g, la));
            } else if (algo == "k5k3") {
                auto res = colour_k5_for_k3(la);
                body << "# branch " << static_cast<int>(res.branch) << "\n"
                     << render_colouring(g, res.colouring);
            } else if (algo == "k6k4") {
                auto res = colour_k6_for_k4(la, seed);
                body << "# tries " << res.tries << (res.used_fallback ? " (fallback)" : "") << "\n"
                     << render_colouring(g, res.colouring);
            } else if (algo == "sparse") {
                auto res = sparse_triangle_free_colouring(g, la);
                body << render_colouring(g, res.colouring);
            } else if (algo == "aux-guided") {
                if (family_spec.empty()) throw DomainError("aux-guided: need --family");
                GraphFamily fam = resolve_family(family_spec, prov);
                std::map<int, int> phi;
                std::string cur;
                for (char ch : phi_spec + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) {
                            auto colon = cur.find(':');
                            if (colon == std::string::npos)
                                throw DomainError("--phi expects len:colour pairs");
                            phi[std::stoi(cur.substr(0, colon))] = std::stoi(cur.substr(colon + 1));
                        }
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                body << render_colouring(g, aux_guided_colouring(g, fam, phi));
            } else {
                throw DomainError("unknown --algo: " + algo);
            }
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (witness_cmd->parsed()) {
            GraphFamily fam = resolve_family(family_spec, prov);
            std::ostringstream body;
            auto render_package = [&](const WitnessPackage& pkg) {
                const auto& log = pkg.log;
                body << "log: k=" << log.k << " m=" << log.m << " t=" << log.t << " x=" << log.x
                     << " r=" << log.r << " rS=" << log.rS << " b=" << log.hairs
                     << " palette=" << log.palette << " gprime_copies=" << log.gprime_copies
                     << " tbs_copies=" << log.tbs_copies;
                if (log.star_forest_route)
                    body << " star_copies=" << log.star_copies << " star_rays=" << log.star_rays;
                body << "\n";
                body << write_graph_text(pkg.host);
                if (pkg.lists) body << write_lists_json(*pkg.lists);
            };
            if (kind == "list") {
                render_package(build_list_ramsey_witness(fam));
                emit(output_path, prov, body.str(), out);
                return kExitOk;
            }
            if (kind == "plain") {
                auto pkg = build_plain_ramsey_witness(fam, cap);
                if (!pkg) {
                    body << "witness = NONE (truncated Aux 2-colourable and no star forest; "
                            "BOUNDED at cap "
                         << cap << ")\n";
                    emit(output_path, prov, body.str(), out);
                    return kExitNone;
                }
                render_package(*pkg);
                emit(output_path, prov, body.str(), out);
                return kExitOk;
            }
            throw DomainError("witness: --kind must be list or plain");
        }

        if (explore_cmd->parsed()) {
            Graph g = resolve_graph(graph_spec, prov);
            GraphFamily fam = resolve_family(family_spec, prov);
            long long gamma = gamma_flag > 0 ? gamma_flag : gamma_constant(fam);
            auto eta = eta_constant(fam);
            auto trace = explore_cluster(g, fam, gamma, log_bound);
            std::ostringstream body;
            body << "gamma = " << gamma << ", eta = " << eta.eta.str() << ", t = " << eta.t.str()
                 << "\n";
            for (const auto& line : encode_trace(trace)) body << line << "\n";
            body << "tau = " << trace.tau << ", degenerate = " << trace.degenerate_count
                 << ", stop = "
                 << (trace.stop_reason == StopReason::Complete          ? "COMPLETE"
                     : trace.stop_reason == StopReason::GammaDegenerate ? "GAMMA"
                                                                        : "LOG_SIZE")
                 << "\n";
            bool balanced = verify_balance(trace, eta.t, eta.eta);
            Graph decoded = decode_trace(encode_trace(trace), fam, trace.n);
            bool roundtrip = true;
            {
                std::vector<Edge> expect;
                for (const auto& snap_edge : decoded.edges()) expect.push_back(snap_edge);
                // Compare against the explored subgraph: all edges with an
                // arrival index, i.e. accumulated counts match the snapshot.
                roundtrip = decoded.edge_count() == trace.snapshots.back().first;
            }
            body << "balance_ok = " << (balanced ? "true" : "false")
                 << ", roundtrip_ok = " << (roundtrip ? "true" : "false") << "\n";
            if (!balanced || !roundtrip)
                throw FalsificationError("explore: balance or round-trip check failed");
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (aux_cmd->parsed()) {
            GraphFamily fam = resolve_family(family_spec, prov);
            Hypergraph aux = aux_hypergraph(fam, cap);
            std::ostringstream body;
            body << write_hypergraph_text(aux);
            auto colouring = proper_two_colouring(aux);
            if (!colouring) {
                body << "two_colourable = false (certificate valid for the full Aux)\n";
                emit(output_path, prov, body.str(), out);
                return kExitNone;
            }
            body << "two_colourable = true (BOUNDED: truncation at " << cap << " only)\n";
            for (int v = 0; v < aux.vertex_count(); ++v)
                body << aux.vertex_labels[static_cast<size_t>(v)] << " -> "
                     << (*colouring)[static_cast<size_t>(v)] << "\n";
            emit(output_path, prov, body.str(), out);
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            SweepConfig cfg;
            cfg.n = n;
            cfg.trials = trials;
            cfg.r = r;
            cfg.family = resolve_family(family_spec, prov);
            cfg.seed = seed;
            cfg.jobs = jobs;
            cfg.limits = limits;
            std::string cur;
            for (char ch : p_spec + ",") {
                if (ch == ',') {
                    if (!cur.empty()) cfg.p_grid.push_back(PValue::parse(cur));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            std::vector<SweepRow> rows;
            if (mode == "ramsey") {
                cfg.mode = SweepMode::Ramsey;
                rows = ramsey_sweep(cfg);
            } else if (mode == "cluster") {
                cfg.mode = SweepMode::ClusterScan;
                rows = cluster_experiment(cfg);
            } else if (mode == "unicyclic") {
                cfg.mode = SweepMode::Unicyclic;
                rows = unicyclic_experiment(cfg);
            } else {
                throw DomainError("sweep: --mode must be ramsey, cluster or unicyclic");
            }
            emit(output_path, prov, sweep_csv(rows), out);
            return kExitOk;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const FalsificationError& e) {
        err << "FALSIFICATION: " << e.what() << "\n";
        return 70;  // internal software error
    }
    err << "usage error: no subcommand handled\n";
    return kExitUsage;
}

}  // namespace ramseylab
