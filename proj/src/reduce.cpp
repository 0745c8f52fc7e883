#include "flowforge/reduce.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "flowforge/orient.hpp"

namespace flowforge {

namespace {

constexpr int kCacheMaxVertices = 9;

// Z3 verdicts keyed by canonical form; many subsets induce isomorphic graphs.
class VerdictCache {
public:
    std::optional<bool> lookup(const std::string& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, bool value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, value);  // idempotent
    }

private:
    std::mutex mu_;
    std::map<std::string, bool> map_;
};

bool z3_connected_cached(const Multigraph& sub, VerdictCache& cache) {
    if (sub.vertex_count() <= kCacheMaxVertices) {
        std::string key = canonical_form(sub);
        if (auto hit = cache.lookup(key)) return *hit;
        bool verdict = is_z3_connected(sub).value;
        cache.store(key, verdict);
        return verdict;
    }
    return is_z3_connected(sub).value;
}

// smallest-first, lexicographic subset scan for a Z3-connected induced
// subgraph; nullopt when none exists
std::optional<std::vector<int>> find_z3_subgraph(const Multigraph& g, VerdictCache& cache) {
    int n = g.vertex_count();
    std::vector<int> pick;
    for (int size = 2; size <= n; ++size) {
        pick.assign(size, 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            auto sub = induced_subgraph(g, pick);
            // cheap necessary filters: connected, no bridge
            if (sub.graph.edge_count() >= size && is_connected(sub.graph) &&
                !has_bridge(sub.graph)) {
                if (z3_connected_cached(sub.graph, cache)) return pick;
            }
            // next size-subset in lex order
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

ReducednessVerdict is_z3_reduced(const Multigraph& g) {
    VerdictCache cache;
    if (auto hit = find_z3_subgraph(g, cache)) return {false, std::move(hit)};
    return {true, std::nullopt};
}

ReductionResult z3_reduce(const Multigraph& g) {
    VerdictCache cache;
    Multigraph cur = g;
    std::vector<std::vector<int>> classes(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) classes[v] = {v};
    ReductionResult result;
    while (auto hit = find_z3_subgraph(cur, cache)) {
        std::vector<char> in(cur.vertex_count(), 0);
        for (int v : *hit) in[v] = 1;
        std::vector<int> ids;
        for (int e = 0; e < cur.edge_count(); ++e)
            if (in[cur.edges()[e].u] && in[cur.edges()[e].v]) ids.push_back(e);
        auto res = contract(cur, ids);
        std::vector<int> merged_originals;
        for (int v : *hit)
            merged_originals.insert(merged_originals.end(), classes[v].begin(),
                                    classes[v].end());
        std::sort(merged_originals.begin(), merged_originals.end());
        result.trace.push_back(std::move(merged_originals));
        std::vector<std::vector<int>> next_classes(res.graph.vertex_count());
        for (int v = 0; v < cur.vertex_count(); ++v) {
            auto& dst = next_classes[res.vertex_map[v]];
            dst.insert(dst.end(), classes[v].begin(), classes[v].end());
        }
        for (auto& c : next_classes) std::sort(c.begin(), c.end());
        classes = std::move(next_classes);
        cur = std::move(res.graph);
    }
    result.reduced = std::move(cur);
    return result;
}

bool lift_implies_z3(const Multigraph& g, int v, int v1, int v2) {
    g.check_vertex(v);
    g.check_vertex(v1);
    g.check_vertex(v2);
    if (g.degree(v) < 4) throw PreconditionViolated("lifting needs degree(v) >= 4");
    if (v1 == v2) throw PreconditionViolated("lifting needs distinct neighbors v1, v2");
    auto has_edge = [&](int a, int b) {
        for (int id : g.incident(a))
            if (g.edges()[id].other(a) == b) return true;
        return false;
    };
    if (!has_edge(v, v1) || !has_edge(v, v2))
        throw PreconditionViolated("lifting needs edges vv1 and vv2");
    auto del = delete_vertex(g, v);
    Multigraph lifted = add_edge(del.graph, del.vertex_map[v1], del.vertex_map[v2]);
    return is_z3_connected(lifted).value;
}

bool density_check(const Multigraph& g) {
    if (g.vertex_count() < 3) throw TooSmall("density bound applies for |V| >= 3");
    return g.edge_count() <= 4 * g.vertex_count() - 8;
}

}  // namespace flowforge
