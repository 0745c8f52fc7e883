#pragma once

#include <optional>

#include "flowforge/graph.hpp"
#include "flowforge/orient.hpp"
#include "flowforge/treepack.hpp"

namespace flowforge::oracles {

/// Existence of a beta-orientation by direct enumeration of all 2^m
/// orientations (optionally fixing the edges named by a pre-orientation).
bool orientation_enumeration_exists(const Multigraph& g, const BoundaryFunction& beta,
                                    const std::optional<PreOrientation>& pre = std::nullopt);

/// Existence of a beta-orientation via a spanning-forest particular
/// solution shifted by every cycle-space combination mod m.
bool cycle_space_exists(const Multigraph& g, const BoundaryFunction& beta);

bool is_z3_connected(const Multigraph& g);
bool is_strongly_zm_connected(const Multigraph& g, int modulus);

/// Extendability at z0 checked from the definition: every zero-sum beta and
/// every compatible orientation of the edges at z0 must extend.
bool is_extendable_at(const Multigraph& g, int z0);

/// Minimum edge cut by enumeration of all vertex subsets containing 0.
int edge_connectivity(const Multigraph& g);

/// F(G,k) by enumeration of all vertex partitions (restricted growth
/// strings); exponential, intended for n <= 10.
DeficiencyResult deficiency(const Multigraph& g, int k);

}  // namespace flowforge::oracles
