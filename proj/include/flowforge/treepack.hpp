#pragma once

#include <optional>

#include "flowforge/graph.hpp"

namespace flowforge {

/// Certificate for F(G,k): parts are disjoint nonempty vertex sets covering V.
struct Partition {
    std::vector<std::vector<int>> parts;
};

/// Edge-disjoint spanning trees (edge-id lists), verified tree by tree.
struct ForestPacking {
    std::vector<std::vector<int>> trees;
};

struct TreePackingResult {
    int count;
    ForestPacking packing;
};

/// Maximum number of edge-disjoint spanning trees, with certificate.
TreePackingResult tree_packing_number(const Multigraph& g);

struct DeficiencyResult {
    int value;           // F(G,k)
    Partition partition; // attains max(0, k(|P|-1) - e_G(P))
};

/// F(G,k): edges needed so the supergraph packs k spanning trees. Exact via
/// matroid union over k graphic matroids; the partition certificate comes
/// from iterated contraction of k-tree-packed subgraphs.
DeficiencyResult deficiency(const Multigraph& g, int k);

/// Number of edges crossing between different parts.
int inter_part_edges(const Multigraph& g, const Partition& p);

/// A vertex set X with |X| >= 2 and F(G[X],k) = 0, or nullopt. Guaranteed
/// to find one whenever |E| >= k(|V|-1).
std::optional<std::vector<int>> find_dense_subgraph(const Multigraph& g, int k);

/// Maximum total size of k edge-disjoint forests (matroid union).
int max_forest_union(const Multigraph& g, int k, ForestPacking* out = nullptr);

/// Check the packing: pairwise edge-disjoint, each part a spanning tree.
bool verify_spanning_trees(const Multigraph& g, const ForestPacking& p);

}  // namespace flowforge
