#include "flowforge/gadgets.hpp"

#include <algorithm>

namespace flowforge {

namespace {

// edge id of the first u-v edge in g, or -1
int find_edge(const Multigraph& g, int u, int v) {
    for (int id : g.incident(u))
        if (g.edges()[id].other(u) == v) return id;
    return -1;
}

std::vector<std::pair<int, int>> edge_pairs(const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

TwoSumResult two_sum(const Multigraph& g1, int e, const Multigraph& g2, int u2, int v2) {
    const Edge& base = g1.edge(e);
    g2.check_vertex(u2);
    g2.check_vertex(v2);
    if (u2 == v2) throw IdenticalAnchors();

    int n1 = g1.vertex_count();
    std::vector<int> map2(g2.vertex_count(), -1);
    map2[u2] = base.u;
    map2[v2] = base.v;
    int next = n1;
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g1.edge_count() - 1 + g2.edge_count());
    for (int id = 0; id < g1.edge_count(); ++id) {
        if (id == e) continue;
        edges.emplace_back(g1.edges()[id].u, g1.edges()[id].v);
    }
    for (const Edge& f : g2.edges()) edges.emplace_back(map2[f.u], map2[f.v]);

    TwoSumResult out{Multigraph::build(next, edges), base.u, base.v, std::move(map2)};
    return out;
}

Multigraph complete_graph(int n) {
    if (n < 1) throw TooSmall("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Multigraph::build(n, edges);
}

Multigraph jaeger_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 3; ++b) {
        int base = 4 * b;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.emplace_back(base + i, base + j);
    }
    edges.emplace_back(1, 4);
    edges.emplace_back(3, 6);
    edges.emplace_back(5, 9);
    edges.emplace_back(7, 11);
    edges.emplace_back(2, 10);
    edges.emplace_back(0, 8);
    return Multigraph::build(12, edges);
}

KocholResult kochol_composite(const Multigraph& gamma, int v, int v1, int v2) {
    gamma.check_vertex(v);
    gamma.check_vertex(v1);
    gamma.check_vertex(v2);
    if (v == v1 || v == v2) throw MissingEdges("v must differ from v1 and v2");

    int e1 = find_edge(gamma, v, v1);
    if (e1 < 0) throw MissingEdges("edge v-v1 not present");
    int e2 = -1;
    for (int id : gamma.incident(v))
        if (id != e1 && gamma.edges()[id].other(v) == v2) {
            e2 = id;
            break;
        }
    if (e2 < 0) throw MissingEdges(v1 == v2 ? "need two parallel v-v1 edges"
                                            : "edge v-v2 not present");
    Multigraph l = delete_edges(gamma, {e1, e2});

    Multigraph k4 = complete_graph(4);
    // k4 edge order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    KocholResult out;
    if (v1 != v2) {
        auto s1 = two_sum(k4, 0, l, v1, v2);
        int copy1_v = s1.g2_map[v];
        // after removing (0,1) the (2,3) edge sits at id 4
        auto s2 = two_sum(s1.graph, 4, l, v1, v2);
        out.j_gadget = s2.graph;
        out.v1_copy = copy1_v;
        out.v2_copy = s2.g2_map[v];
    } else {
        // identify the v1 copies of two disjoint copies of l
        int nl = l.vertex_count();
        std::vector<int> map2(nl, -1);
        map2[v1] = v1;
        int next = nl;
        for (int x = 0; x < nl; ++x)
            if (map2[x] < 0) map2[x] = next++;
        auto edges = edge_pairs(l);
        for (const Edge& f : l.edges()) edges.emplace_back(map2[f.u], map2[f.v]);
        out.j_gadget = Multigraph::build(next, edges);
        out.v1_copy = v;
        out.v2_copy = map2[v];
    }

    auto c1 = two_sum(k4, 0, out.j_gadget, out.v1_copy, out.v2_copy);
    int w2w3 = find_edge(c1.graph, 1, 2);
    auto c2 = two_sum(c1.graph, w2w3, out.j_gadget, out.v1_copy, out.v2_copy);
    int w3w4 = find_edge(c2.graph, 2, 3);
    auto c3 = two_sum(c2.graph, w3w4, out.j_gadget, out.v1_copy, out.v2_copy);
    out.composite = c3.graph;
    return out;
}

HGadget h_gadget(const Multigraph& g, int u1, int u2, int v1, int v2) {
    g.check_vertex(u1);
    g.check_vertex(u2);
    g.check_vertex(v1);
    g.check_vertex(v2);
    if (u1 == u2 || v1 == v2) throw MissingAnchors("anchor pairs must be distinct vertices");

    Multigraph triangle = complete_graph(3);
    // triangle edge order: (0,1) (0,2) (1,2); apex w3 = 2
    auto k = two_sum(triangle, 0, g, u1, u2);
    auto h = two_sum(triangle, 0, k.graph, k.g2_map[v1], k.g2_map[v2]);
    return {h.graph, h.g2_map[2], 2};
}

Multigraph g_star(const Multigraph& g, int u1, int u2, int v1, int v2) {
    HGadget h = h_gadget(g, u1, u2, v1, v2);
    Multigraph cur = jaeger_graph();
    for (int i = 0; i < 6; ++i) {
        int e = find_edge(cur, 2 * i, 2 * i + 1);
        cur = two_sum(cur, e, h.graph, h.w3_1, h.w3_2).graph;
    }
    return cur;
}

SubdivideIdentifyResult subdivide_identify(const Multigraph& g, const std::vector<int>& e1) {
    if (e1.empty() || e1.size() > 3) throw TooManyEdges(e1.size());
    std::vector<int> ids = e1;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw MissingEdges("duplicate edge id");
    for (int id : ids) g.edge(id);

    int z0 = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<char> drop(g.edge_count(), 0);
    for (int id : ids) drop[id] = 1;
    for (int id = 0; id < g.edge_count(); ++id)
        if (!drop[id]) edges.emplace_back(g.edges()[id].u, g.edges()[id].v);
    for (int id : ids) {
        edges.emplace_back(g.edges()[id].u, z0);
        edges.emplace_back(g.edges()[id].v, z0);
    }
    return {Multigraph::build(z0 + 1, edges), z0};
}

}  // namespace flowforge
