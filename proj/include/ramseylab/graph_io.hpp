#pragma once

#include <iosfwd>
#include <string>

#include "ramseylab/colouring.hpp"
#include "ramseylab/family.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

// Graph text format (bit-exact): first line "n m", then m lines "u v" with
// 0 <= u < v < n, in ascending lexicographic order.  Lines starting with '#'
// are ignored on input.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(std::istream& in);
Graph read_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

// Family file: {"graphs":[{"name":str,"n":int,"edges":[[u,v],...]},...]}.
std::string write_family_json(const GraphFamily& fam);
GraphFamily read_family_json(const std::string& text);
GraphFamily load_family_file(const std::string& path);

// List file: {"r":int,"lists":[[edge_index,[c1,...,cr]],...]} with edges in
// the canonical order of the Graph format.
std::string write_lists_json(const ListAssignment& lists);
ListAssignment read_lists_json(const std::string& text, const Graph& host);
ListAssignment load_lists_file(const std::string& path, const Graph& host);

// Named small graphs for quick CLI use: K5, C7, P4, S3 (star), B2 (broom),
// petersen.  Throws DomainError on unknown names.
Graph named_graph(const std::string& name);

}  // namespace ramseylab
