#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowforge/errors.hpp"

namespace flowforge {

/// An edge instance: unordered endpoint pair, u != v. The edge id is the
/// index into Multigraph::edges().
struct Edge {
    int u;
    int v;
    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return u == x ? v : u; }
    bool operator==(const Edge&) const = default;
};

/// Loopless undirected multigraph. Vertices are dense ids 0..n-1, parallel
/// edges are separate entries in the edge list. Immutable after build;
/// safe to share across threads.
class Multigraph {
public:
    Multigraph() = default;

    static Multigraph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const Edge& edge(int id) const {
        if (id < 0 || id >= edge_count()) throw UnknownEdge(id);
        return edges_[id];
    }

    /// Edge ids incident to v.
    const std::vector<int>& incident(int v) const {
        check_vertex(v);
        return inc_[v];
    }

    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw UnknownVertex(v);
    }

    bool operator==(const Multigraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
};

/// A vertex bipartition (side, complement) witnessing an edge cut.
struct CutCertificate {
    std::vector<int> side;       // sorted, proper nonempty subset of V
    std::vector<int> cut_edges;  // sorted edge ids of [side, V - side]
};

struct ContractionResult {
    Multigraph graph;
    std::vector<int> vertex_map;  // old vertex id -> new vertex id
};

struct VertexDeletionResult {
    Multigraph graph;
    std::vector<int> vertex_map;  // old vertex id -> new vertex id, -1 for the deleted one
};

struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> vertices;  // new vertex id -> old vertex id (sorted)
};

/// Identify the endpoints of every edge in X, drop resulting loops.
/// Surviving vertices are renumbered densely by smallest original member.
ContractionResult contract(const Multigraph& g, const std::vector<int>& edge_ids);

VertexDeletionResult delete_vertex(const Multigraph& g, int v);

Multigraph delete_edges(const Multigraph& g, const std::vector<int>& edge_ids);

/// Append one extra edge; the new edge gets the largest id.
Multigraph add_edge(const Multigraph& g, int u, int v);

CutCertificate edge_cut(const Multigraph& g, const std::vector<int>& side);

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices);

bool is_connected(const Multigraph& g);

/// Connected component containing v, as a sorted vertex list.
std::vector<int> component_of(const Multigraph& g, int v);

bool has_parallel_edges(const Multigraph& g);
bool has_bridge(const Multigraph& g);

/// Lex-smallest adjacency encoding over all vertex relabelings; equal
/// strings iff isomorphic (multiplicities included).
std::string canonical_form(const Multigraph& g);

}  // namespace flowforge
