#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "flowforge/gadgets.hpp"
#include "flowforge/graph.hpp"

using namespace flowforge;

namespace {

Multigraph two_cycle() { return Multigraph::build(2, {{0, 1}, {0, 1}}); }

}  // namespace

TEST_CASE("build accepts parallel edges and rejects loops") {
    Multigraph c2 = two_cycle();
    CHECK(c2.vertex_count() == 2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.degree(0) == 2);

    Multigraph k4 = complete_graph(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    CHECK_THROWS_AS(Multigraph::build(2, {{0, 0}}), LoopRejected);
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 2}}), VertexOutOfRange);
    CHECK_THROWS_AS(Multigraph::build(2, {{-1, 0}}), VertexOutOfRange);
}

TEST_CASE("contract identifies endpoints and drops loops") {
    Multigraph k4 = complete_graph(4);
    auto res = contract(k4, {0});
    CHECK(res.graph.vertex_count() == 3);
    CHECK(res.graph.edge_count() == 5);
    int degsum = 0;
    for (int v = 0; v < 3; ++v) degsum += res.graph.degree(v);
    CHECK(degsum == 10);
    CHECK(has_parallel_edges(res.graph));
    CHECK(res.vertex_map[0] == res.vertex_map[1]);

    auto collapsed = contract(two_cycle(), {0});
    CHECK(collapsed.graph.vertex_count() == 1);
    CHECK(collapsed.graph.edge_count() == 0);

    auto same = contract(k4, {});
    CHECK(same.graph == k4);

    CHECK_THROWS_AS(contract(k4, {17}), UnknownEdge);
}

TEST_CASE("contract of a union matches iterated contraction") {
    Multigraph g = Multigraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
    auto both = contract(g, {0, 2});
    auto first = contract(g, {0});
    // edge 2 of g keeps endpoints under the first contraction's renumbering
    const Edge& e2 = g.edges()[2];
    int u = first.vertex_map[e2.u], v = first.vertex_map[e2.v];
    int remaining = -1;
    for (int id = 0; id < first.graph.edge_count(); ++id) {
        const Edge& e = first.graph.edges()[id];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) remaining = id;
    }
    REQUIRE(remaining >= 0);
    auto second = contract(first.graph, {remaining});
    CHECK(canonical_form(both.graph) == canonical_form(second.graph));
    for (int w = 0; w < 5; ++w) {
        for (int x = 0; x < 5; ++x) {
            bool merged_a = both.vertex_map[w] == both.vertex_map[x];
            bool merged_b =
                second.vertex_map[first.vertex_map[w]] == second.vertex_map[first.vertex_map[x]];
            CHECK(merged_a == merged_b);
        }
    }
}

TEST_CASE("delete_vertex removes incident edges and renumbers") {
    Multigraph k4 = complete_graph(4);
    auto res = delete_vertex(k4, 3);
    CHECK(res.graph.vertex_count() == 3);
    CHECK(res.graph.edge_count() == k4.edge_count() - k4.degree(3));
    CHECK(res.vertex_map[3] == -1);
    CHECK(res.vertex_map[0] == 0);
    CHECK_THROWS_AS(delete_vertex(k4, 9), UnknownVertex);
}

TEST_CASE("edge_cut certificate counts crossing edges") {
    Multigraph k4 = complete_graph(4);
    auto cut = edge_cut(k4, {0, 1});
    CHECK(cut.cut_edges.size() == 4);

    // degree-sum identity over a few subsets
    for (const auto& side : std::vector<std::vector<int>>{{0}, {1, 2}, {0, 2, 3}}) {
        auto c = edge_cut(k4, side);
        int degsum = 0;
        for (int v : side) degsum += k4.degree(v);
        auto ind = induced_subgraph(k4, side);
        CHECK(static_cast<int>(c.cut_edges.size()) == degsum - 2 * ind.graph.edge_count());
    }

    CHECK_THROWS_AS(edge_cut(k4, {}), EmptyOrFullSide);
    CHECK_THROWS_AS(edge_cut(k4, std::vector<int>{0, 1, 2, 3}), EmptyOrFullSide);
}

TEST_CASE("connectivity, components and bridges") {
    Multigraph path = Multigraph::build(3, {{0, 1}, {1, 2}});
    CHECK(is_connected(path));
    CHECK(has_bridge(path));

    Multigraph cycle = Multigraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!has_bridge(cycle));
    CHECK(!has_bridge(two_cycle()));

    Multigraph split = Multigraph::build(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(split));
    CHECK(component_of(split, 2) == std::vector<int>{2, 3});
}

TEST_CASE("canonical form is a graph invariant") {
    Multigraph a = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Multigraph b = Multigraph::build(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    Multigraph c = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    CHECK(canonical_form(a) != canonical_form(c));
    CHECK(canonical_form(two_cycle()) !=
          canonical_form(Multigraph::build(2, {{0, 1}})));
}
