#include "ramseylab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ramseylab/errors.hpp"

namespace ramseylab {

GraphFamily::GraphFamily(std::vector<NamedGraph> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("GraphFamily: empty family");
    for (const auto& m : members_)
        if (m.graph.edge_count() == 0)
            throw DomainError("GraphFamily: member '" + m.name + "' has no edges");
}

std::string GraphFamily::label() const {
    std::string out;
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ";";
        out += members_[i].name;
    }
    return out;
}

GraphFamily family_of(std::vector<NamedGraph> members) { return GraphFamily(std::move(members)); }

GraphFamily singleton_family(const std::string& name, Graph g) {
    return GraphFamily({NamedGraph{name, std::move(g)}});
}

void ListAssignment::validate(const Graph& g) const {
    if (r < 1) throw DomainError("ListAssignment: r must be >= 1");
    if (static_cast<int>(list_of.size()) != g.edge_count())
        throw DomainError("ListAssignment: expected one list per edge");
    for (const auto& lst : list_of) {
        if (static_cast<int>(lst.size()) != r)
            throw DomainError("ListAssignment: every list must have exactly r colours");
        if (!std::is_sorted(lst.begin(), lst.end()) ||
            std::adjacent_find(lst.begin(), lst.end()) != lst.end())
            throw DomainError("ListAssignment: lists must be strictly ascending");
        if (lst.front() < 0) throw DomainError("ListAssignment: negative colour");
    }
}

ListAssignment ListAssignment::identical(const Graph& g, std::vector<int> colours) {
    std::sort(colours.begin(), colours.end());
    ListAssignment la;
    la.r = static_cast<int>(colours.size());
    la.list_of.assign(static_cast<size_t>(g.edge_count()), colours);
    la.validate(g);
    return la;
}

std::vector<int> ListAssignment::palette() const {
    std::vector<int> p;
    for (const auto& lst : list_of) p.insert(p.end(), lst.begin(), lst.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream os;
    os << g.n() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw DomainError("graph text: missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw DomainError("graph text: bad header, expected 'n m'");
    std::vector<Edge> edges;
    Edge prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el)) throw DomainError("graph text: fewer edges than declared");
        std::istringstream es(el);
        int u, v;
        if (!(es >> u >> v)) throw DomainError("graph text: bad edge line '" + el + "'");
        if (!(0 <= u && u < v && v < n)) throw DomainError("graph text: edge out of range or not u<v");
        if (Edge{u, v} <= prev) throw DomainError("graph text: edges not in ascending order");
        prev = {u, v};
        edges.push_back(prev);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_graph_text(const std::string& text) {
    std::istringstream is(text);
    return read_graph_text(is);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file: " + path);
    return read_graph_text(in);
}

std::string write_family_json(const GraphFamily& fam) {
    nlohmann::json j;
    j["graphs"] = nlohmann::json::array();
    for (const auto& m : fam.members()) {
        nlohmann::json g;
        g["name"] = m.name;
        g["n"] = m.graph.n();
        g["edges"] = nlohmann::json::array();
        for (const auto& [u, v] : m.graph.edges()) g["edges"].push_back({u, v});
        j["graphs"].push_back(std::move(g));
    }
    return j.dump(2) + "\n";
}

GraphFamily read_family_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("graphs") || !j["graphs"].is_array())
        throw DomainError("family json: missing 'graphs' array");
    std::vector<NamedGraph> members;
    for (const auto& g : j["graphs"]) {
        std::vector<Edge> edges;
        for (const auto& e : g.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        members.push_back({g.at("name").get<std::string>(),
                           Graph(g.at("n").get<int>(), std::move(edges))});
    }
    return GraphFamily(std::move(members));
}

GraphFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open family file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_family_json(ss.str());
}

std::string write_lists_json(const ListAssignment& lists) {
    nlohmann::json j;
    j["r"] = lists.r;
    j["lists"] = nlohmann::json::array();
    for (size_t i = 0; i < lists.list_of.size(); ++i)
        j["lists"].push_back({static_cast<int>(i), lists.list_of[i]});
    return j.dump(2) + "\n";
}

ListAssignment read_lists_json(const std::string& text, const Graph& host) {
    nlohmann::json j = nlohmann::json::parse(text);
    ListAssignment la;
    la.r = j.at("r").get<int>();
    la.list_of.assign(static_cast<size_t>(host.edge_count()), {});
    std::vector<char> seen(static_cast<size_t>(host.edge_count()), 0);
    for (const auto& entry : j.at("lists")) {
        int ei = entry.at(0).get<int>();
        if (ei < 0 || ei >= host.edge_count()) throw DomainError("lists json: edge index out of range");
        if (seen[static_cast<size_t>(ei)]) throw DomainError("lists json: duplicate edge index");
        seen[static_cast<size_t>(ei)] = 1;
        auto lst = entry.at(1).get<std::vector<int>>();
        std::sort(lst.begin(), lst.end());
        la.list_of[static_cast<size_t>(ei)] = std::move(lst);
    }
    for (char s : seen)
        if (!s) throw DomainError("lists json: some edge has no list");
    la.validate(host);
    return la;
}

ListAssignment load_lists_file(const std::string& path, const Graph& host) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open lists file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_lists_json(ss.str(), host);
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    auto numeric_suffix = [&](size_t from) {
        for (size_t i = from; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        return name.size() > from ? std::stoi(name.substr(from)) : -1;
    };
    if (name.size() >= 2) {
        int k = numeric_suffix(1);
        if (k >= 0) {
            switch (name[0]) {
                case 'K': return complete_graph(k);
                case 'C': return cycle_graph(k);
                case 'P': return path_graph(k);
                case 'S': return star_graph(k);
                case 'B': return broom_graph(k);
                default: break;
            }
        }
    }
    throw DomainError("unknown graph name: " + name +
                      " (expected Kn, Cn, Pn, Sn, Bn or petersen)");
}

}  // namespace ramseylab
