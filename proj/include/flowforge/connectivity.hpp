#pragma once

#include <optional>

#include "flowforge/graph.hpp"

namespace flowforge {

struct EdgeConnectivity {
    int value;
    CutCertificate cut;  // attains value; a component side when disconnected
};

/// Global minimum edge cut via n-1 unit-capacity max-flows from a fixed root.
EdgeConnectivity edge_connectivity(const Multigraph& g);

/// lambda_G(x, y): maximum number of edge-disjoint x-y paths.
int local_edge_connectivity(const Multigraph& g, int x, int y);

/// Minimum essential edge cut (both remaining sides keep an edge), or
/// nullopt value when no essential cut exists.
struct EssentialConnectivity {
    std::optional<int> value;  // nullopt = infinite
    std::optional<CutCertificate> cut;
};
EssentialConnectivity essential_edge_connectivity(const Multigraph& g);

bool is_essentially_k_edge_connected(const Multigraph& g, int k);

/// Split off the edge pair e1 = v1z, e2 = v2z into v1v2, preserving every
/// local edge-connectivity away from z. The pair is found by exhaustive
/// trial with max-flow verification.
struct MaderSplit {
    int e1;
    int e2;
    Multigraph result;  // g - e1 - e2 + v1v2, same vertex ids
};
MaderSplit mader_split(const Multigraph& g, int z);

/// Unit-capacity min cut separating two merged vertex sets; S is the side
/// containing the sources, expressed in g's vertex ids.
struct MinCut {
    int value;
    std::vector<int> source_side;
};
MinCut min_cut_between(const Multigraph& g, const std::vector<int>& sources,
                       const std::vector<int>& sinks);

}  // namespace flowforge
