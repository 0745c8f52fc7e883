#include "flowforge/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace flowforge {

namespace {

// Dinic on unit capacities; undirected edges become an arc pair that share
// residual capacity in both directions.
class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1) {}

    void add_undirected(int u, int v) {
        add_arc(u, v, 1);
        add_arc(v, u, 1);
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (int pushed = dfs(s, t, 1 << 30)) flow += pushed;
        }
        return flow;
    }

    // call after max_flow: residual-reachable set from s
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to, next, cap;
    };

    void add_arc(int u, int v, int cap) {
        arcs_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
    }

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push(arcs_[a].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& a = it_[v]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
                int pushed = dfs(arc.to, t, std::min(limit, arc.cap));
                if (pushed) {
                    arc.cap -= pushed;
                    arcs_[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, level_, it_;
    std::vector<Arc> arcs_;
};

}  // namespace

MinCut min_cut_between(const Multigraph& g, const std::vector<int>& sources,
                       const std::vector<int>& sinks) {
    int n = g.vertex_count();
    std::vector<int> role(n, -1);  // node id in the flow network
    for (int v : sinks) {
        g.check_vertex(v);
        role[v] = 1;
    }
    for (int v : sources) {
        g.check_vertex(v);
        if (role[v] == 1) throw PreconditionViolated("source and sink sets intersect");
        role[v] = 0;
    }
    // node map: 0 = merged source, 1 = merged sink, others fresh
    std::vector<int> node(n);
    int next = 2;
    for (int v = 0; v < n; ++v) node[v] = (role[v] >= 0) ? role[v] : next++;
    Dinic dinic(next);
    for (const Edge& e : g.edges()) {
        int a = node[e.u], b = node[e.v];
        if (a != b) dinic.add_undirected(a, b);
    }
    MinCut cut;
    cut.value = dinic.max_flow(0, 1);
    auto seen = dinic.reachable(0);
    for (int v = 0; v < n; ++v)
        if (seen[node[v]]) cut.source_side.push_back(v);
    return cut;
}

int local_edge_connectivity(const Multigraph& g, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw SameVertex();
    return min_cut_between(g, {x}, {y}).value;
}

EdgeConnectivity edge_connectivity(const Multigraph& g) {
    if (g.vertex_count() < 2) throw TooSmall("edge_connectivity needs at least 2 vertices");
    if (!is_connected(g)) {
        auto comp = component_of(g, 0);
        return {0, edge_cut(g, comp)};
    }
    int best = -1;
    std::vector<int> best_side;
    for (int v = 1; v < g.vertex_count(); ++v) {
        MinCut cut = min_cut_between(g, {0}, {v});
        if (best < 0 || cut.value < best ||
            (cut.value == best && cut.source_side < best_side)) {
            best = cut.value;
            best_side = cut.source_side;
        }
    }
    return {best, edge_cut(g, best_side)};
}

EssentialConnectivity essential_edge_connectivity(const Multigraph& g) {
    if (g.vertex_count() < 2) throw TooSmall("essential connectivity needs at least 2 vertices");
    std::optional<int> best;
    std::vector<int> best_side;
    int m = g.edge_count();
    for (int i = 0; i < m; ++i) {
        const Edge& a = g.edges()[i];
        for (int j = i + 1; j < m; ++j) {
            const Edge& b = g.edges()[j];
            // edges sharing a vertex can never end up in distinct components
            if (b.touches(a.u) || b.touches(a.v)) continue;
            MinCut cut = min_cut_between(g, {a.u, a.v}, {b.u, b.v});
            if (!best || cut.value < *best ||
                (cut.value == *best && cut.source_side < best_side)) {
                best = cut.value;
                best_side = cut.source_side;
            }
        }
    }
    if (!best) return {std::nullopt, std::nullopt};
    return {best, edge_cut(g, best_side)};
}

bool is_essentially_k_edge_connected(const Multigraph& g, int k) {
    auto ess = essential_edge_connectivity(g);
    return !ess.value || *ess.value >= k;
}

MaderSplit mader_split(const Multigraph& g, int z) {
    g.check_vertex(z);
    if (g.degree(z) < 4) throw PreconditionViolated("mader_split needs degree(z) >= 4");
    std::vector<int> nbrs;
    for (int id : g.incident(z)) nbrs.push_back(g.edges()[id].other(z));
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (nbrs.size() < 2) throw PreconditionViolated("mader_split needs at least 2 distinct neighbors");
    {
        auto del = delete_vertex(g, z);
        if (!is_connected(del.graph)) throw PreconditionViolated("z must be non-separating");
    }

    int n = g.vertex_count();
    std::vector<std::vector<int>> lambda(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (x != z && y != z) lambda[x][y] = local_edge_connectivity(g, x, y);

    const auto& inc = g.incident(z);
    for (size_t i = 0; i < inc.size(); ++i) {
        int v1 = g.edges()[inc[i]].other(z);
        for (size_t j = i + 1; j < inc.size(); ++j) {
            int v2 = g.edges()[inc[j]].other(z);
            if (v1 == v2) continue;  // a loop is outside the graph class
            Multigraph cand = add_edge(delete_edges(g, {inc[i], inc[j]}), v1, v2);
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                for (int y = x + 1; y < n && ok; ++y)
                    if (x != z && y != z)
                        ok = local_edge_connectivity(cand, x, y) == lambda[x][y];
            if (ok) return {inc[i], inc[j], std::move(cand)};
        }
    }
    // Mader's theorem guarantees a pair under the preconditions
    throw std::logic_error("mader_split: no preserving pair found; this is a bug");
}

}  // namespace flowforge
