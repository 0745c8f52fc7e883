#include <doctest.h>

#include <random>

#include "flowforge/gadgets.hpp"
#include "flowforge/genrand.hpp"
#include "flowforge/oracles.hpp"
#include "flowforge/orient.hpp"

using namespace flowforge;

namespace {

Multigraph two_cycle() { return Multigraph::build(2, {{0, 1}, {0, 1}}); }
Multigraph triangle() { return Multigraph::build(3, {{0, 1}, {0, 2}, {1, 2}}); }

void check_beta(const Multigraph& g, const Orientation& d, const BoundaryFunction& beta) {
    auto net = boundary(g, d);
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(((net[v] % beta.modulus) + beta.modulus) % beta.modulus == beta.values[v]);
}

BoundaryFunction random_zero_sum(std::mt19937_64& rng, int n, int m) {
    BoundaryFunction beta{m, std::vector<int>(n, 0)};
    int total = 0;
    for (int v = 0; v + 1 < n; ++v) {
        beta.values[v] = static_cast<int>(rng() % m);
        total += beta.values[v];
    }
    if (n > 0) beta.values[n - 1] = ((-total) % m + m) % m;
    return beta;
}

}  // namespace

TEST_CASE("boundary and tau") {
    Orientation cyc{{{0, 1}, {2, 0}, {1, 2}}};
    CHECK(boundary(triangle(), cyc) == std::vector<int>{0, 0, 0});

    Orientation both{{{0, 1}, {0, 1}}};
    CHECK(boundary(two_cycle(), both) == std::vector<int>{2, -2});

    Orientation bad{{{0, 1}, {0, 1}, {0, 1}}};
    CHECK_THROWS_AS(boundary(two_cycle(), bad), IncompleteOrientation);
    Orientation wrong_ends{{{0, 2}, {0, 1}}};
    CHECK_THROWS_AS(boundary(two_cycle(), wrong_ends), IncompleteOrientation);

    CHECK(tau_abs(0, 2) == 0);
    CHECK(tau_abs(0, 3) == 3);
    CHECK(tau_abs(1, 2) == 2);
    CHECK(tau_abs(1, 3) == 1);
    CHECK(tau_abs(2, 2) == 2);
    CHECK(tau_abs(2, 3) == 1);
}

TEST_CASE("find_beta_orientation on fixed instances") {
    auto r = find_beta_orientation(two_cycle(), {3, {1, 2}});
    REQUIRE(r.has_value());
    CHECK(r->edges == std::vector<std::pair<int, int>>{{1, 0}, {1, 0}});

    CHECK(!find_beta_orientation(complete_graph(4), {3, {0, 0, 0, 0}}).has_value());
    CHECK(!find_beta_orientation(triangle(), {3, {1, 1, 1}}).has_value());

    CHECK_THROWS_AS(find_beta_orientation(triangle(), {3, {1, 0, 0}}), NotZeroSum);
}

TEST_CASE("pre-orientation constraints are honored") {
    // z0 = 2 attached to a 2-cycle on {0,1}
    Multigraph g = Multigraph::build(3, {{0, 1}, {0, 1}, {2, 0}, {2, 1}, {2, 0}});
    BoundaryFunction beta{3, {0, 0, 0}};
    PreOrientation pre{2, {{2, true}, {3, true}, {4, false}}};  // net +1 at z0
    CHECK_THROWS_AS(find_beta_orientation(g, beta, pre), PreOrientationMismatch);

    BoundaryFunction beta1{3, {1, 1, 1}};
    auto r = find_beta_orientation(g, beta1, pre);
    REQUIRE(r.has_value());
    check_beta(g, *r, beta1);
    CHECK(r->edges[2] == std::pair<int, int>{2, 0});
    CHECK(r->edges[3] == std::pair<int, int>{2, 1});
    CHECK(r->edges[4] == std::pair<int, int>{0, 2});
}

TEST_CASE("is_z3_connected on fixed instances") {
    CHECK(is_z3_connected(two_cycle()).value);
    CHECK(is_z3_connected(Multigraph::build(1, {})).value);

    auto k4 = is_z3_connected(complete_graph(4));
    CHECK(!k4.value);
    CHECK(*k4.witness == std::vector<int>{0, 0, 0, 0});

    auto tri = is_z3_connected(triangle());
    CHECK(!tri.value);
    CHECK(*tri.witness == std::vector<int>{1, 1, 1});

    auto edge = is_z3_connected(Multigraph::build(2, {{0, 1}}));
    CHECK(!edge.value);
    CHECK(*edge.witness == std::vector<int>{0, 0});
}

TEST_CASE("mod orientations") {
    auto tri = has_mod_orientation(triangle(), 3);
    REQUIRE(tri.has_value());
    check_beta(triangle(), *tri, {3, {0, 0, 0}});

    CHECK(!has_mod_orientation(complete_graph(4), 3).has_value());

    auto c2 = has_mod_orientation(two_cycle(), 3);
    REQUIRE(c2.has_value());
    CHECK(c2->edges[0] != c2->edges[1]);

    CHECK_THROWS_AS(has_mod_orientation(triangle(), 4), BadModulus);
    CHECK_THROWS_AS(has_mod_orientation(triangle(), 1), BadModulus);

    // mod-5 orientation implies mod-3 orientation on sampled graphs
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        Multigraph g = gen::random_multigraph(rng, 2 + static_cast<int>(rng() % 5),
                                              static_cast<int>(rng() % 11));
        if (has_mod_orientation(g, 5).has_value())
            CHECK(has_mod_orientation(g, 3).has_value());
    }
}

TEST_CASE("strong Zm connectivity") {
    auto c2 = is_strongly_zm_connected(two_cycle(), 5);
    CHECK(!c2.value);
    CHECK(*c2.witness == std::vector<int>{1, 4});

    std::mt19937_64 rng(52);
    for (int t = 0; t < 20; ++t) {
        Multigraph g = gen::random_multigraph(rng, 2 + static_cast<int>(rng() % 4),
                                              static_cast<int>(rng() % 9));
        CHECK(is_strongly_zm_connected(g, 3).value == is_z3_connected(g).value);
    }
    CHECK_THROWS_AS(is_strongly_zm_connected(two_cycle(), 2), BadModulus);
}

TEST_CASE("solver agrees with both brute-force oracles") {
    std::mt19937_64 rng(6174);
    for (int t = 0; t < 120; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        Multigraph g = gen::random_multigraph(rng, n, static_cast<int>(rng() % 11));
        for (int b = 0; b < 6; ++b) {
            BoundaryFunction beta = random_zero_sum(rng, n, 3);
            auto got = find_beta_orientation(g, beta);
            CHECK(got.has_value() == oracles::orientation_enumeration_exists(g, beta));
            CHECK(got.has_value() == oracles::cycle_space_exists(g, beta));
            if (got) check_beta(g, *got, beta);
        }
    }
}

TEST_CASE("extendability via vertex deletion matches the definition") {
    Multigraph tail = Multigraph::build(3, {{0, 1}, {0, 1}, {2, 0}});
    CHECK(is_extendable_at(tail, 2));
    CHECK(!is_extendable_at(triangle(), 0));

    // apex joined to K4 by double edges
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < 4; ++u) {
        edges.emplace_back(4, u);
        edges.emplace_back(4, u);
    }
    CHECK(!is_extendable_at(Multigraph::build(5, edges), 4));

    CHECK_THROWS_AS(is_extendable_at(triangle(), 7), UnknownVertex);

    std::mt19937_64 rng(1234);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        Multigraph g = gen::sample_until(rng, n, n, 1, 8,
                                         [](const Multigraph& h) { return is_connected(h); });
        int z0 = static_cast<int>(rng() % n);
        CHECK(is_extendable_at(g, z0) == oracles::is_extendable_at(g, z0));
    }
}

TEST_CASE("ltwz conditions") {
    Multigraph c2 = two_cycle();
    BoundaryFunction beta{3, {1, 2}};
    PreOrientation pre{0, {{0, true}, {1, false}}};
    auto small = ltwz_conditions(c2, 0, beta, pre);
    CHECK(!small.ok);
    CHECK(small.failed_condition == 1);

    // triangle with a pendant vertex: A = {pendant} has d(A) = 1 < 4
    Multigraph g = Multigraph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
    BoundaryFunction zero{3, {0, 0, 0, 0}};
    PreOrientation at0{0, {{0, true}, {1, false}}};
    auto r = ltwz_conditions(g, 0, zero, at0);
    CHECK(!r.ok);

    CHECK_THROWS_AS(ltwz_conditions(g, 0, BoundaryFunction{3, {1, 0, 0, 0}}, at0),
                    NotZeroSum);
}

TEST_CASE("ltwz-approved extensions always succeed") {
    std::mt19937_64 rng(808017);
    int found = 0, tries = 0;
    while (found < 20) {
        REQUIRE(++tries < 100000);
        int n = 3 + static_cast<int>(rng() % 4);
        Multigraph g = gen::random_multigraph(rng, n, 3 * n + static_cast<int>(rng() % (2 * n)));
        int z0 = static_cast<int>(rng() % n);
        BoundaryFunction beta = random_zero_sum(rng, n, 3);
        const auto& inc = g.incident(z0);
        PreOrientation pre{z0, {}};
        int net = 0;
        for (int id : inc) {
            bool out = rng() & 1;
            pre.dirs.emplace_back(id, out);
            net += out ? 1 : -1;
        }
        if (((net % 3) + 3) % 3 != beta.values[z0]) continue;
        if (!ltwz_conditions(g, z0, beta, pre).ok) continue;
        ++found;
        auto r = find_beta_orientation(g, beta, pre);
        REQUIRE(r.has_value());
        check_beta(g, *r, beta);
    }
}
