#include "flowforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace flowforge {

Multigraph Multigraph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    Multigraph g;
    g.n_ = n;
    g.inc_.resize(n);
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRange(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRange(v, n);
        if (u == v) throw LoopRejected(u);
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.inc_[u].push_back(id);
        g.inc_[v].push_back(id);
    }
    return g;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep smallest id as representative
        parent[b] = a;
        return true;
    }
};

}  // namespace

ContractionResult contract(const Multigraph& g, const std::vector<int>& edge_ids) {
    Dsu dsu(g.vertex_count());
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        dsu.unite(e.u, e.v);
    }
    // dense renumbering in order of smallest original member
    std::vector<int> vmap(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = dsu.find(v);
        if (vmap[r] < 0) vmap[r] = next++;
        vmap[v] = vmap[r];
    }
    std::set<int> contracted(edge_ids.begin(), edge_ids.end());
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < g.edge_count(); ++id) {
        if (contracted.count(id)) continue;
        const Edge& e = g.edges()[id];
        int u = vmap[e.u], v = vmap[e.v];
        if (u != v) edges.emplace_back(u, v);  // loops vanish
    }
    return {Multigraph::build(next, edges), std::move(vmap)};
}

VertexDeletionResult delete_vertex(const Multigraph& g, int v) {
    g.check_vertex(v);
    std::vector<int> vmap(g.vertex_count());
    int next = 0;
    for (int x = 0; x < g.vertex_count(); ++x) vmap[x] = (x == v) ? -1 : next++;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (!e.touches(v)) edges.emplace_back(vmap[e.u], vmap[e.v]);
    return {Multigraph::build(g.vertex_count() - 1, edges), std::move(vmap)};
}

Multigraph delete_edges(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::set<int> dead;
    for (int id : edge_ids) {
        g.edge(id);
        dead.insert(id);
    }
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < g.edge_count(); ++id)
        if (!dead.count(id)) edges.emplace_back(g.edges()[id].u, g.edges()[id].v);
    return Multigraph::build(g.vertex_count(), edges);
}

Multigraph add_edge(const Multigraph& g, int u, int v) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + 1);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    edges.emplace_back(u, v);
    return Multigraph::build(g.vertex_count(), edges);
}

CutCertificate edge_cut(const Multigraph& g, const std::vector<int>& side) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : side) {
        g.check_vertex(v);
        in[v] = 1;
    }
    int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
    if (count == 0 || count == g.vertex_count()) throw EmptyOrFullSide();
    CutCertificate cert;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in[v]) cert.side.push_back(v);
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges()[id];
        if (in[e.u] != in[e.v]) cert.cut_edges.push_back(id);
    }
    return cert;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> vmap(g.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        g.check_vertex(vs[i]);
        vmap[vs[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (vmap[e.u] >= 0 && vmap[e.v] >= 0) edges.emplace_back(vmap[e.u], vmap[e.v]);
    return {Multigraph::build(static_cast<int>(vs.size()), edges), std::move(vs)};
}

std::vector<int> component_of(const Multigraph& g, int v) {
    g.check_vertex(v);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{v}, comp;
    seen[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int id : g.incident(x)) {
            int y = g.edges()[id].other(x);
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool is_connected(const Multigraph& g) {
    if (g.vertex_count() <= 1) return true;
    return static_cast<int>(component_of(g, 0).size()) == g.vertex_count();
}

bool has_parallel_edges(const Multigraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second) return true;
    }
    return false;
}

namespace {

// iterative DFS bridge finder (lowpoint), parallel-edge aware: a bridge is an
// edge instance whose removal disconnects, so a parallel pair is never a bridge
struct BridgeFinder {
    const Multigraph& g;
    std::vector<int> disc, low;
    int timer = 0;
    bool found = false;

    explicit BridgeFinder(const Multigraph& gr)
        : g(gr), disc(gr.vertex_count(), -1), low(gr.vertex_count(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            int via_edge;
            size_t it;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.it < inc.size()) {
                int id = inc[f.it++];
                if (id == f.via_edge) continue;
                int w = g.edges()[id].other(f.v);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, id, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int via = f.via_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) found = true;
                }
                (void)via;
            }
        }
    }
};

}  // namespace

bool has_bridge(const Multigraph& g) {
    BridgeFinder bf(g);
    for (int v = 0; v < g.vertex_count() && !bf.found; ++v)
        if (bf.disc[v] < 0) bf.run(v);
    return bf.found;
}

namespace {

// adjacency multiplicity matrix under a (possibly partial) labeling, flattened
// row by row for placed vertices only
struct CanonSearch {
    int n;
    std::vector<std::vector<uint8_t>> mult;
    std::vector<int> best;      // best[i] = original vertex placed at position i
    std::vector<uint8_t> bests; // flattened lower-triangle of best labeling
    bool have_best = false;

    std::vector<int> order;
    std::vector<uint8_t> cur;
    std::vector<char> used;

    void search() {
        if (static_cast<int>(order.size()) == n) {
            if (!have_best || cur < bests) {
                bests = cur;
                best = order;
                have_best = true;
            }
            return;
        }
        size_t row_start = cur.size();
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            for (int prev : order) cur.push_back(mult[v][prev]);
            // prune: compare the prefix against best
            if (!have_best || std::lexicographical_compare(
                                  cur.begin(), cur.end(), bests.begin(),
                                  bests.begin() + static_cast<long>(cur.size())) ||
                std::equal(cur.begin(), cur.end(), bests.begin())) {
                used[v] = 1;
                order.push_back(v);
                search();
                order.pop_back();
                used[v] = 0;
            }
            cur.resize(row_start);
        }
    }
};

}  // namespace

std::string canonical_form(const Multigraph& g) {
    int n = g.vertex_count();
    CanonSearch cs;
    cs.n = n;
    cs.mult.assign(n, std::vector<uint8_t>(n, 0));
    for (const Edge& e : g.edges()) {
        if (cs.mult[e.u][e.v] < 255) {
            ++cs.mult[e.u][e.v];
            ++cs.mult[e.v][e.u];
        }
    }
    cs.used.assign(n, 0);
    cs.search();
    std::string out;
    out += std::to_string(n);
    out += ':';
    for (uint8_t b : cs.bests) out += static_cast<char>('0' + b);
    return out;
}

}  // namespace flowforge
