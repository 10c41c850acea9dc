#include <doctest.h>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/rational.hpp"
#include "naive.hpp"

using namespace fracdecomp;

TEST_CASE("K6 has a fractional triangle decomposition") {
    auto g = gen_complete(6, 2);
    auto res = lp_feasible(g, 3);
    REQUIRE(res.feasible);
    CHECK(res.witness.has_value());
    CHECK(!res.dual_witness.has_value());
    CHECK(naive::residual(g, *res.witness, [](const Clique&) { return Rational(1); }) == 0);
    Weighting uniform(3);
    for (const auto& K : naive::cliques(g, 3)) uniform.set(K, Rational(1, 4));
    CHECK(check_primal(g, 3, uniform));
}

TEST_CASE("K4 minus an edge has none") {
    auto g = gen_k4_minus_edge();
    auto res = lp_feasible(g, 3);
    CHECK(!res.feasible);
    REQUIRE(res.dual_witness.has_value());
    const auto& y = *res.dual_witness;
    Rational total = 0;
    for (const auto& v : y) total += v;
    CHECK(total > 0);
    for (const auto& K : naive::cliques(g, 3)) {
        Rational s = 0;
        auto edges = g.edge_list();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (naive::contains(K, edges[i])) s += y[i];
        CHECK(s <= 0);
    }
}

TEST_CASE("lower-bound family on 16 vertices is infeasible") {
    auto g = gen_lower_bound_family(3, 1);
    auto res = lp_feasible(g, 3);
    CHECK(!res.feasible);
    CHECK(check_dual(g, 3, *res.dual_witness));
}

TEST_CASE("complete hosts are feasible") {
    for (auto [n, k, r] : {std::tuple{5, 2, 3}, {7, 2, 4}, {6, 3, 4}, {5, 3, 5}}) {
        auto g = gen_complete(n, k);
        auto res = lp_feasible(g, r);
        CHECK(res.feasible);
        for (const auto& [K, v] : res.witness->entries()) {
            CHECK(v >= 0);
            CHECK(v <= 1);
        }
    }
}

TEST_CASE("edges outside every clique make the system infeasible") {
    Hypergraph g(5, 2, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    auto res = lp_feasible(g, 3);
    CHECK(!res.feasible);
    CHECK(check_dual(g, 3, *res.dual_witness));
}

TEST_CASE("oracle respects its size cap") {
    CHECK_THROWS_AS(lp_feasible(gen_complete(12, 2), 3, {100}), CapExceeded);
}

TEST_CASE("witness checkers reject bad witnesses") {
    auto g = gen_k4_minus_edge();
    std::vector<Rational> y(g.edge_count(), 0);
    CHECK(!check_dual(g, 3, y));
    Weighting w(3);
    w.set({0, 1, 2}, 1);
    CHECK(!check_primal(g, 3, w));
}

TEST_CASE("LP result serialises") {
    auto g = gen_k4_minus_edge();
    auto j = to_json(g, lp_feasible(g, 3));
    CHECK(j["feasible"] == false);
    CHECK(j["witness"].is_null());
    CHECK(j["dual_witness"].is_array());
}
