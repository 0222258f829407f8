#pragma once

#include <string>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

struct NamedGraph {
    std::string name;
    Graph graph;
};

// Finite non-empty ordered family; every member has at least one edge.
class GraphFamily {
public:
    GraphFamily() = default;
    explicit GraphFamily(std::vector<NamedGraph> members);

    size_t size() const { return members_.size(); }
    const NamedGraph& operator[](size_t i) const { return members_[i]; }
    const std::vector<NamedGraph>& members() const { return members_; }
    // Member names joined with ';' (used in CSV rows and logs).
    std::string label() const;

private:
    std::vector<NamedGraph> members_;
};

GraphFamily family_of(std::vector<NamedGraph> members);
GraphFamily singleton_family(const std::string& name, Graph g);

}  // namespace ramseylab
