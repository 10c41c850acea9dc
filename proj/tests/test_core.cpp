#include <doctest.h>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/io.hpp"
#include "fracdecomp/rational.hpp"
#include "naive.hpp"

using namespace fracdecomp;

TEST_CASE("neighbourhoods in K5") {
    auto g = gen_complete(5, 2);
    Clique s{0};
    CHECK(g.neighborhood(s) == std::vector<Clique>{{1}, {2}, {3}, {4}});
    CHECK(g.neighborhood_complement(s) == std::vector<Clique>{{0}});
    CHECK(g.non_neighbors(0).count() == 1);
}

TEST_CASE("neighbourhoods in K4 minus an edge") {
    auto g = gen_k4_minus_edge();
    Clique s{2};
    CHECK(g.neighborhood(s) == std::vector<Clique>{{0}, {1}});
    CHECK(g.non_neighbors(2).to_vector() == std::vector<Vertex>{2, 3});
}

TEST_CASE("pair neighbourhood in complete triple system") {
    auto g = gen_complete(5, 3);
    Clique s{0, 1};
    CHECK(g.neighborhood(s) == std::vector<Clique>{{2}, {3}, {4}});
    CHECK(g.degree_of(s) == 3);
}

TEST_CASE("neighbourhood rejects bad subsets") {
    auto g = gen_complete(5, 3);
    Clique big{0, 1, 2}, out{0, 7};
    CHECK_THROWS_AS(g.neighborhood(big), InvalidArgument);
    CHECK_THROWS_AS(g.neighborhood(out), InvalidArgument);
}

TEST_CASE("N and its complement partition the candidate sets") {
    auto g = gen_random_min_degree(9, 3, Rational(1, 3), 5);
    naive::subsets(naive::all_vertices(g), 1, [&](const Clique& s) {
        CHECK(g.neighborhood(s).size() + g.neighborhood_complement(s).size() == 28);
    });
    naive::subsets(naive::all_vertices(g), 2, [&](const Clique& s) {
        CHECK(g.neighborhood(s).size() + g.neighborhood_complement(s).size() == 7);
    });
    auto h = gen_random_min_degree(10, 2, Rational(1, 4), 5);
    for (Vertex x = 0; x < 10; ++x) CHECK(h.degree(x) + h.non_neighbors(x).count() == 10);
}

TEST_CASE("min j-degree of complete triple system on 6 vertices") {
    auto g = gen_complete(6, 3);
    CHECK(g.min_j_degree(2).min_degree == 4);
    CHECK(g.min_j_degree(1).min_degree == 10);
    CHECK(g.min_j_degree(1).arg_min == Clique{0});
}

TEST_CASE("min j-degree agrees with double loop") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = gen_random_min_degree(8 + seed % 4, 3, Rational(1, 2), seed);
        for (int j = 1; j <= 2; ++j) CHECK(g.min_j_degree(j).min_degree == naive::min_j_degree(g, j));
        auto h = gen_random_min_degree(12, 2, Rational(1, 3), seed);
        CHECK(h.min_j_degree(1).min_degree == naive::min_j_degree(h, 1));
        CHECK(h.min_degree() == naive::min_j_degree(h, 1));
    }
}

TEST_CASE("text format") {
    auto g = load_text("4 2\n0 1\n1 2\n");
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 2);
    auto t = load_text("5 3\n0 1 2\n");
    CHECK(t.k() == 3);
    CHECK(t.edge_count() == 1);
    CHECK_THROWS_AS(load_text("4 2\n0 1\n1 0\n"), ParseError);
    try {
        load_text("4 2\n0 1\n1 2 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS(load_text("4 2\n0 9\n"));
}

TEST_CASE("save canonicalises and round-trips") {
    auto g = load_text("5 2\n3 1\n0 4\n\n1 0\n");
    CHECK(save_text(g) == "5 2\n0 1\n0 4\n1 3\n");
    CHECK(load_text(save_text(g)) == g);
    CHECK(hypergraph_from_json(to_json(g)) == g);
}

TEST_CASE("edge index lookup") {
    auto g = gen_complete(6, 3);
    for (std::size_t i = 0; i < g.edge_count(); ++i) CHECK(g.edge_index(g.edge(i)) == i);
    Clique missing{0, 1, 1};
    CHECK(g.edge_index(missing) == Hypergraph::npos);
}
