#pragma once

#include <map>
#include <vector>

#include "ramseylab/errors.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

// Total edge colouring of a host graph; colour_of[i] is the colour of the
// edge with canonical index i.
struct EdgeColouring {
    std::vector<int> colour_of;

    int colour(int edge_index) const { return colour_of[static_cast<size_t>(edge_index)]; }
    // Edge indices of one colour class.
    std::vector<int> colour_class(int colour) const {
        std::vector<int> out;
        for (size_t i = 0; i < colour_of.size(); ++i)
            if (colour_of[i] == colour) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> palette() const {
        std::vector<int> p(colour_of);
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return p;
    }
};

// Per-edge colour lists over a small integer palette; every list has exactly
// r colours, in ascending order.
struct ListAssignment {
    int r = 0;
    std::vector<std::vector<int>> list_of;  // indexed by canonical edge index

    const std::vector<int>& list(int edge_index) const { return list_of[static_cast<size_t>(edge_index)]; }

    static ListAssignment identical(const Graph& g, std::vector<int> colours);
    void validate(const Graph& g) const;
    std::vector<int> palette() const;
};

}  // namespace ramseylab
