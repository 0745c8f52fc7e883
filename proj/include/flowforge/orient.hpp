#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "flowforge/graph.hpp"

namespace flowforge {

/// A direction per edge id, as (tail, head) matching that edge's endpoints.
struct Orientation {
    std::vector<std::pair<int, int>> edges;
};

/// V -> Z_m with zero sum.
struct BoundaryFunction {
    int modulus = 3;
    std::vector<int> values;  // in [0, modulus)

    bool zero_sum() const;
};

/// Directions for exactly the edges at z0; `out` means directed away from z0.
struct PreOrientation {
    int z0 = -1;
    std::vector<std::pair<int, bool>> dirs;  // (edge id, out)
};

/// d+(v) - d-(v) per vertex, as exact integers.
std::vector<int> boundary(const Multigraph& g, const Orientation& d);

/// |tau(A)| from beta(A) mod 3 and the parity of d(A): the unique |t| with
/// t = beta_A (mod 3), t = d_A (mod 2), t in {0,+-1,+-2,+-3}.
int tau_abs(int beta_a, int d_a);

/// Exact beta-orientation solver: frontier dynamic program over an edge
/// elimination order; state holds partial boundary residues mod m of the
/// active vertices. O(|E| * m^w) for frontier width w. Reusable across
/// many boundary functions on the same graph. Not thread-safe; give each
/// worker its own instance.
class OrientationSolver {
public:
    OrientationSolver(const Multigraph& g, int modulus,
                      std::optional<PreOrientation> fixed = std::nullopt);
    ~OrientationSolver();
    OrientationSolver(OrientationSolver&&) noexcept;
    OrientationSolver& operator=(OrientationSolver&&) noexcept;

    bool exists(std::span<const int> beta);
    std::optional<Orientation> solve(std::span<const int> beta);
    int frontier_width() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::optional<Orientation> find_beta_orientation(
    const Multigraph& g, const BoundaryFunction& beta,
    std::optional<PreOrientation> fixed = std::nullopt);

std::optional<Orientation> has_mod_orientation(const Multigraph& g, int m);

struct GroupConnectivityVerdict {
    bool value;
    std::optional<std::vector<int>> witness;  // lex-first boundary with no orientation

    explicit operator bool() const { return value; }
};

/// Iterates every zero-sum beta (3^{n-1} candidates, distributed across
/// workers); the witness reported is the lexicographically first failure.
GroupConnectivityVerdict is_z3_connected(const Multigraph& g);

/// Same sweep at odd modulus m = 2s+1; coincides with Z3 at m = 3.
GroupConnectivityVerdict is_strongly_zm_connected(const Multigraph& g, int m);

/// Extendability at z0, decided through Z3-connectivity of G - z0.
bool is_extendable_at(const Multigraph& g, int z0);

struct LtwzResult {
    bool ok;
    int failed_condition = 0;              // 1, 2 or 3 when !ok
    std::optional<std::vector<int>> violating_set;  // for condition 3
};

/// The partial-extension sufficient conditions: (i) |V| >= 3, (ii) d(z0) <=
/// 4 + |tau(z0)| with the pre-orientation matching beta(z0), (iii) d(A) >=
/// 4 + |tau(A)| for nonempty A avoiding z0 with |V - A| >= 2.
LtwzResult ltwz_conditions(const Multigraph& g, int z0, const BoundaryFunction& beta,
                           const PreOrientation& pre);

/// Worker count: FLOWFORGE_THREADS, else hardware concurrency.
int worker_threads();

}  // namespace flowforge
