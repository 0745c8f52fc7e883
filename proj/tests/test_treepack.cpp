#include <doctest.h>

#include <random>

#include "flowforge/gadgets.hpp"
#include "flowforge/genrand.hpp"
#include "flowforge/oracles.hpp"
#include "flowforge/treepack.hpp"

using namespace flowforge;

TEST_CASE("tree packing number on fixed instances") {
    auto k4 = tree_packing_number(complete_graph(4));
    CHECK(k4.count == 2);
    CHECK(verify_spanning_trees(complete_graph(4), k4.packing));

    auto c2 = tree_packing_number(Multigraph::build(2, {{0, 1}, {0, 1}}));
    CHECK(c2.count == 2);

    auto j = tree_packing_number(jaeger_graph());
    CHECK(j.count == 2);
    CHECK(verify_spanning_trees(jaeger_graph(), j.packing));

    CHECK_THROWS_AS(tree_packing_number(Multigraph::build(4, {{0, 1}, {2, 3}})),
                    Disconnected);
    CHECK_THROWS_AS(tree_packing_number(Multigraph::build(1, {})), TooSmall);
}

TEST_CASE("deficiency on fixed instances") {
    auto r = deficiency(complete_graph(4), 4);
    CHECK(r.value == 6);
    CHECK(r.partition.parts.size() == 4);  // singleton partition attains 4*3 - 6

    CHECK(deficiency(complete_graph(4), 2).value == 0);
    CHECK(deficiency(Multigraph::build(2, {{0, 1}, {0, 1}}), 4).value == 2);
    CHECK(deficiency(jaeger_graph(), 4).value == 20);

    CHECK_THROWS_AS(deficiency(Multigraph::build(4, {{0, 1}, {2, 3}}), 2), Disconnected);
}

TEST_CASE("deficiency certificate replays") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 40; ++t) {
        Multigraph g = gen::sample_until(rng, 2, 7, 1, 14,
                                         [](const Multigraph& h) { return is_connected(h); });
        for (int k = 2; k <= 4; ++k) {
            auto r = deficiency(g, k);
            int parts = static_cast<int>(r.partition.parts.size());
            int cross = inter_part_edges(g, r.partition);
            CHECK(r.value == std::max(0, k * (parts - 1) - cross));
        }
    }
}

TEST_CASE("matroid union agrees with the partition oracle") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 30; ++t) {
        Multigraph g = gen::sample_until(rng, 2, 7, 1, 16,
                                         [](const Multigraph& h) { return is_connected(h); });
        for (int k = 2; k <= 4; ++k)
            CHECK(deficiency(g, k).value == oracles::deficiency(g, k).value);
    }
}

TEST_CASE("find_dense_subgraph") {
    auto k4 = find_dense_subgraph(complete_graph(4), 2);
    REQUIRE(k4.has_value());
    CHECK(*k4 == std::vector<int>{0, 1, 2, 3});

    auto c2 = find_dense_subgraph(Multigraph::build(2, {{0, 1}, {0, 1}}), 2);
    REQUIRE(c2.has_value());
    CHECK(*c2 == std::vector<int>{0, 1});

    // two triangles joined by a bridge: no nontrivial 2-tree subgraph
    Multigraph bowtie = Multigraph::build(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    CHECK(!find_dense_subgraph(bowtie, 2).has_value());

    // guaranteed whenever |E| >= k(|V|-1)
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        Multigraph g = gen::random_multigraph(rng, n, 2 * (n - 1) + static_cast<int>(rng() % 3));
        auto x = find_dense_subgraph(g, 2);
        REQUIRE(x.has_value());
        auto sub = induced_subgraph(g, *x);
        CHECK(deficiency(sub.graph, 2).value == 0);
    }
}

TEST_CASE("adding edges across the certificate partition clears the deficit") {
    std::mt19937_64 rng(999);
    for (int t = 0; t < 15; ++t) {
        Multigraph g = gen::sample_until(rng, 3, 6, 2, 10,
                                         [](const Multigraph& h) { return is_connected(h); });
        int k = 2 + static_cast<int>(rng() % 3);
        Multigraph cur = g;
        int guard = 0;
        while (true) {
            auto r = deficiency(cur, k);
            if (r.value == 0) break;
            REQUIRE(++guard <= 4 * k * 6);
            auto parts = r.partition.parts;
            std::sort(parts.begin(), parts.end(),
                      [](const auto& a, const auto& b) { return a.size() > b.size(); });
            REQUIRE(parts.size() >= 2);
            cur = add_edge(cur, parts[0][0], parts[1][0]);
            CHECK(deficiency(cur, k).value == r.value - 1);
        }
        CHECK(tree_packing_number(cur).count >= k);
    }
}
