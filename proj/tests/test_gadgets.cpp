#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "flowforge/connectivity.hpp"
#include "flowforge/gadgets.hpp"
#include "flowforge/genrand.hpp"
#include "flowforge/io.hpp"
#include "flowforge/orient.hpp"
#include "flowforge/reduce.hpp"

using namespace flowforge;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string golden_dir() {
#ifdef GOLDEN_DIR
    return GOLDEN_DIR;
#else
    return "tests/golden";
#endif
}

}  // namespace

TEST_CASE("two_sum size laws and anchors") {
    Multigraph k4 = complete_graph(4);
    auto r = two_sum(k4, 0, k4, 0, 1);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.graph.edge_count() == 11);
    CHECK(r.u == 0);
    CHECK(r.v == 1);
    CHECK(r.g2_map[0] == 0);
    CHECK(r.g2_map[1] == 1);
    CHECK(r.g2_map[2] == 4);

    CHECK_THROWS_AS(two_sum(k4, 99, k4, 0, 1), UnknownEdge);
    CHECK_THROWS_AS(two_sum(k4, 0, k4, 2, 2), IdenticalAnchors);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        Multigraph g1 = gen::sample_until(rng, 2, 6, 1, 9,
                                          [](const Multigraph& h) { return h.edge_count() > 0; });
        Multigraph g2 = gen::random_multigraph(rng, 2 + static_cast<int>(rng() % 5),
                                               static_cast<int>(rng() % 8));
        int e = static_cast<int>(rng() % g1.edge_count());
        int u2 = static_cast<int>(rng() % g2.vertex_count());
        int v2 = (u2 + 1 + static_cast<int>(rng() % (g2.vertex_count() - 1))) %
                 g2.vertex_count();
        auto s = two_sum(g1, e, g2, u2, v2);
        CHECK(s.graph.vertex_count() == g1.vertex_count() + g2.vertex_count() - 2);
        CHECK(s.graph.edge_count() == g1.edge_count() - 1 + g2.edge_count());
    }
}

TEST_CASE("two_sum of non-Z3-connected graphs stays non-Z3-connected") {
    Multigraph k4 = complete_graph(4);
    CHECK(!is_z3_connected(two_sum(k4, 0, k4, 0, 1).graph).value);

    Multigraph tri = Multigraph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(!is_z3_connected(two_sum(tri, 0, k4, 1, 3).graph).value);
}

TEST_CASE("two_sum of reduced graphs is reduced") {
    Multigraph k4 = complete_graph(4);
    Multigraph tri = Multigraph::build(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_z3_reduced(two_sum(k4, 2, tri, 0, 2).graph).reduced);
    CHECK(is_z3_reduced(two_sum(tri, 0, tri, 0, 1).graph).reduced);
}

TEST_CASE("jaeger graph structure") {
    Multigraph j = jaeger_graph();
    CHECK(j.vertex_count() == 12);
    CHECK(j.edge_count() == 24);
    for (int v = 0; v < 12; ++v) CHECK(j.degree(v) == 4);
    CHECK(edge_connectivity(j).value == 4);
    CHECK(to_json_edgelist(j) == read_file(golden_dir() + "/jaeger.json"));
}

TEST_CASE("kochol composite sizes and preservation") {
    // Gamma: K5 with v = 0, v1 = 1, v2 = 2
    Multigraph k5 = complete_graph(5);
    auto r = kochol_composite(k5, 0, 1, 2);
    int ng = k5.vertex_count(), mg = k5.edge_count();
    CHECK(r.j_gadget.vertex_count() == 2 * ng);
    CHECK(r.j_gadget.edge_count() == 2 * mg);
    CHECK(r.composite.vertex_count() == 6 * ng - 2);
    CHECK(r.composite.edge_count() == 6 * mg + 3);
    CHECK(to_json_edgelist(r.composite) ==
          read_file(golden_dir() + "/kochol_k5.json"));

    CHECK_THROWS_AS(kochol_composite(k5, 0, 0, 2), MissingEdges);
    CHECK_THROWS_AS(kochol_composite(k5, 0, 1, 1), MissingEdges);  // no parallel pair

    // v1 == v2 branch on a doubled edge
    Multigraph doubled = Multigraph::build(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
    auto same = kochol_composite(doubled, 0, 1, 1);
    CHECK(same.j_gadget.vertex_count() == 2 * 3 - 1);
    CHECK(same.j_gadget.edge_count() == 2 * (4 - 2));
    CHECK(same.v1_copy != same.v2_copy);
}

TEST_CASE("kochol composite keeps Gamma's obstructions") {
    // Gamma - {vv1, vv2} not Z3-connected => G(Gamma) not Z3-connected
    Multigraph k5 = complete_graph(5);
    Multigraph l = delete_edges(k5, {0, 1});
    REQUIRE(!is_z3_connected(l).value);
    auto r = kochol_composite(k5, 0, 1, 2);
    CHECK(!is_z3_connected(r.j_gadget).value);
}

TEST_CASE("kochol composite of a 5-edge-connected Gamma stays 5-edge-connected") {
    // 3 * K3: triangle with every edge tripled, kappa' = 6
    Multigraph gamma = Multigraph::build(3, {{0, 1}, {0, 1}, {0, 1},
                                             {0, 2}, {0, 2}, {0, 2},
                                             {1, 2}, {1, 2}, {1, 2}});
    REQUIRE(edge_connectivity(gamma).value == 6);
    auto r = kochol_composite(gamma, 0, 1, 2);
    CHECK(edge_connectivity(r.composite).value >= 5);
}

TEST_CASE("h gadget basics") {
    Multigraph k4 = complete_graph(4);
    auto h = h_gadget(k4, 0, 1, 2, 3);
    CHECK(h.graph.vertex_count() == 6);
    CHECK(h.graph.edge_count() == 10);
    CHECK(h.graph.degree(h.w3_1) == 2);
    CHECK(h.graph.degree(h.w3_2) == 2);
    CHECK(to_json_edgelist(h.graph) == read_file(golden_dir() + "/h_gadget_k4.json"));

    CHECK_THROWS_AS(h_gadget(k4, 0, 0, 2, 3), MissingAnchors);
}

TEST_CASE("h gadget degrees and g star on a min-degree-5 host") {
    Multigraph k6 = complete_graph(6);
    auto h = h_gadget(k6, 0, 1, 2, 3);
    int twos = 0;
    for (int v = 0; v < h.graph.vertex_count(); ++v) {
        if (h.graph.degree(v) == 2)
            ++twos;
        else
            CHECK(h.graph.degree(v) >= 5);
    }
    CHECK(twos == 2);

    Multigraph gs = g_star(k6, 0, 1, 2, 3);
    CHECK(gs.vertex_count() == 12 + 6 * (h.graph.vertex_count() - 2));
    CHECK(gs.edge_count() == 24 - 6 + 6 * h.graph.edge_count());
    int mindeg = gs.degree(0);
    for (int v = 1; v < gs.vertex_count(); ++v) mindeg = std::min(mindeg, gs.degree(v));
    CHECK(mindeg >= 5);
    CHECK(to_json_edgelist(gs) == read_file(golden_dir() + "/g_star_k6.json"));
}

TEST_CASE("subdivide and identify") {
    Multigraph k4 = complete_graph(4);
    auto r = subdivide_identify(k4, {0, 1, 2});
    CHECK(r.z0 == 4);
    CHECK(r.graph.vertex_count() == 5);
    CHECK(r.graph.edge_count() == 9);
    CHECK(r.graph.degree(r.z0) == 6);

    // removing z0 gives back G - E1
    auto del = delete_vertex(r.graph, r.z0);
    CHECK(canonical_form(del.graph) == canonical_form(delete_edges(k4, {0, 1, 2})));

    CHECK_THROWS_AS(subdivide_identify(k4, {0, 1, 2, 3}), TooManyEdges);
    CHECK_THROWS_AS(subdivide_identify(k4, {}), TooManyEdges);
    CHECK_THROWS_AS(subdivide_identify(k4, {9}), UnknownEdge);

    // a 6-edge-connected host stays 6-edge-connected
    Multigraph gamma = Multigraph::build(3, {{0, 1}, {0, 1}, {0, 1},
                                             {0, 2}, {0, 2}, {0, 2},
                                             {1, 2}, {1, 2}, {1, 2}});
    auto sub = subdivide_identify(gamma, {0, 3, 6});
    CHECK(edge_connectivity(sub.graph).value >= 6);
}
