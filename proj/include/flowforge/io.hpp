#pragma once

#include <string>

#include "flowforge/graph.hpp"

namespace flowforge {

enum class Format { JsonEdgeList, Graph6 };

/// json-edgelist: {"n": <int>, "edges": [[u,v],...]}, 0-based, edge order
/// significant (it defines edge ids). graph6 import widens simple graphs
/// to Multigraph; export rejects parallel edges.
Multigraph parse_graph(const std::string& text, Format format);
std::string serialize_graph(const Multigraph& g, Format format);

/// Round-trip canonical form: serialize_graph(parse_graph(x)) == x.
std::string to_json_edgelist(const Multigraph& g);
Multigraph from_json_edgelist(const std::string& text);

std::string to_graph6(const Multigraph& g);
Multigraph from_graph6(const std::string& text);

}  // namespace flowforge
