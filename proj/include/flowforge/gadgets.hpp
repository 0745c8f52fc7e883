#pragma once

#include "flowforge/graph.hpp"

namespace flowforge {

/// g1 with edge e = (a,b) removed, glued to g2 by identifying u2 with a and
/// v2 with b (anchor order follows e's stored endpoint order).
struct TwoSumResult {
    Multigraph graph;
    int u;                    // identified vertex a = u2
    int v;                    // identified vertex b = v2
    std::vector<int> g2_map;  // g2 vertex id -> id in graph
};
TwoSumResult two_sum(const Multigraph& g1, int e, const Multigraph& g2, int u2, int v2);

Multigraph complete_graph(int n);

/// The 4-regular 12-vertex graph of three K4 blocks joined by a perfect
/// matching: blocks {0..3}, {4..7}, {8..11}; matching edges (1,4), (3,6),
/// (5,9), (7,11), (2,10), (0,8).
Multigraph jaeger_graph();

/// J(v1,v2) and G(Gamma) built from Gamma by deleting the adjacent edges
/// v-v1, v-v2 and composing with K4 via 2-sums. Supports both the v1 != v2
/// branch (2-sum composition) and the v1 == v2 branch (vertex
/// identification of the two copies).
struct KocholResult {
    Multigraph j_gadget;   // J(v1, v2)
    int v1_copy, v2_copy;  // the distinguished vertices of j_gadget
    Multigraph composite;  // G(Gamma)
};
KocholResult kochol_composite(const Multigraph& gamma, int v, int v1, int v2);

/// H(w3_1, w3_2): two triangles 2-summed onto G at (u1,u2) and (v1,v2);
/// the triangle apexes are the only degree-2 vertices.
struct HGadget {
    Multigraph graph;
    int w3_1, w3_2;
};
HGadget h_gadget(const Multigraph& g, int u1, int u2, int v1, int v2);

/// Six copies of H(w3_1, w3_2) attached to the Jaeger graph by 2-sums at
/// the block edges (0,1), (2,3), ..., (10,11).
Multigraph g_star(const Multigraph& g, int u1, int u2, int v1, int v2);

/// Subdivide each edge of e1 (1 <= |e1| <= 3) and identify the subdivision
/// vertices into a single new vertex z0 (id |V|); d(z0) = 2|e1| and
/// removing z0 gives back G - e1.
struct SubdivideIdentifyResult {
    Multigraph graph;
    int z0;
};
SubdivideIdentifyResult subdivide_identify(const Multigraph& g, const std::vector<int>& e1);

}  // namespace flowforge
