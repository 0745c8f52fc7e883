#pragma once

#include <optional>

#include "flowforge/graph.hpp"

namespace flowforge {

struct ReducednessVerdict {
    bool reduced;
    std::optional<std::vector<int>> witness;  // X with G[X] Z3-connected, |X| >= 2
};

/// True iff G has no nontrivial Z3-connected subgraph. Induced subgraphs
/// suffice (Z3-connectedness survives edge additions); enumeration goes
/// smallest subset first and short-circuits on the first hit.
ReducednessVerdict is_z3_reduced(const Multigraph& g);

struct ReductionResult {
    Multigraph reduced;
    /// Each step records the original vertex ids merged by that contraction.
    std::vector<std::vector<int>> trace;
};

/// Contract minimal Z3-connected induced subgraphs until none remain.
/// The input is Z3-connected iff the result is K1.
ReductionResult z3_reduce(const Multigraph& g);

/// Z3-connectivity of G - v + v1v2; true lets the caller conclude G is
/// Z3-connected without testing it directly.
bool lift_implies_z3(const Multigraph& g, int v, int v1, int v2);

/// Necessary density bound for reduced graphs: |E| <= 4|V| - 8 (|V| >= 3).
bool density_check(const Multigraph& g);

}  // namespace flowforge
