#pragma once

#include <functional>
#include <random>

#include "flowforge/graph.hpp"

namespace flowforge::gen {

/// n vertices and m edges with endpoints drawn uniformly among non-loop pairs.
Multigraph random_multigraph(std::mt19937_64& rng, int n, int m);

/// Rejection sampling: draw (n, m) uniformly in the given ranges and resample
/// until pred accepts. Throws BudgetExceeded after max_tries rejections.
Multigraph sample_until(std::mt19937_64& rng, int n_min, int n_max, int m_min, int m_max,
                        const std::function<bool(const Multigraph&)>& pred,
                        int max_tries = 200000);

/// Every connected simple graph on exactly n labeled vertices.
std::vector<Multigraph> connected_simple_graphs(int n);

/// Every connected loopless multigraph on exactly n labeled vertices with at
/// most max_m edges (parallel edges allowed).
std::vector<Multigraph> connected_multigraphs(int n, int max_m);

}  // namespace flowforge::gen
