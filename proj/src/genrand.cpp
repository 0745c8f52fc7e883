#include "flowforge/genrand.hpp"

#include <algorithm>

namespace flowforge::gen {

Multigraph random_multigraph(std::mt19937_64& rng, int n, int m) {
    if (n < 1) throw TooSmall("need at least one vertex");
    if (n == 1 && m > 0) throw LoopRejected(0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (static_cast<int>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        edges.emplace_back(u, v);
    }
    return Multigraph::build(n, edges);
}

Multigraph sample_until(std::mt19937_64& rng, int n_min, int n_max, int m_min, int m_max,
                        const std::function<bool(const Multigraph&)>& pred, int max_tries) {
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::uniform_int_distribution<int> pick_m(m_min, m_max);
    for (int t = 0; t < max_tries; ++t) {
        Multigraph g = random_multigraph(rng, pick_n(rng), pick_m(rng));
        if (pred(g)) return g;
    }
    throw BudgetExceeded("rejection sampling exhausted its retry budget");
}

std::vector<Multigraph> connected_simple_graphs(int n) {
    if (n < 1) throw TooSmall("need at least one vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Multigraph> out;
    int p = static_cast<int>(pairs.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << p); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        Multigraph g = Multigraph::build(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> connected_multigraphs(int n, int max_m) {
    if (n < 1) throw TooSmall("need at least one vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int p = static_cast<int>(pairs.size());
    std::vector<Multigraph> out;
    std::vector<int> mult(p, 0);
    // odometer over multiplicity vectors with total at most max_m
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            for (int c = 0; c < mult[i]; ++c) edges.push_back(pairs[i]);
        Multigraph g = Multigraph::build(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
        int total = 0;
        for (int c : mult) total += c;
        int prefix = 0, i = 0;
        for (; i < p; ++i) {
            // zero slots below i, bump slot i, keep the total within max_m
            if (total - prefix + 1 <= max_m) {
                std::fill(mult.begin(), mult.begin() + i, 0);
                ++mult[i];
                break;
            }
            prefix += mult[i];
        }
        if (i == p) break;
    }
    return out;
}

}  // namespace flowforge::gen
