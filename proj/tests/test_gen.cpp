#include <doctest.h>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/io.hpp"
#include "fracdecomp/rational.hpp"
#include "naive.hpp"

using namespace fracdecomp;

TEST_CASE("complete hosts") {
    CHECK(gen_complete(5, 2).edge_count() == 10);
    CHECK(gen_complete(5, 3).edge_count() == 10);
    auto one = gen_complete(3, 3);
    CHECK(one.edge_count() == 1);
    CHECK(one.edge_clique(0) == Clique{0, 1, 2});
    CHECK_THROWS_AS(gen_complete(2, 3), InvalidArgument);
}

TEST_CASE("lower-bound family for triangles") {
    auto g = gen_lower_bound_family(3, 1);
    CHECK(g.n() == 16);
    CHECK(g.edge_count() == 88);
    CHECK(g.min_degree() == 11);
    std::size_t intra = 0;
    for (const auto& e : g.edge_list()) intra += (e[0] / 8 == e[1] / 8);
    CHECK(intra == 24);
    CHECK(intra * 3 < g.edge_count());
}

TEST_CASE("lower-bound family is regular and every clique uses an inner edge") {
    for (auto [r, s] : {std::pair{3, 2}, {4, 1}, {5, 1}}) {
        auto g = gen_lower_bound_family(r, s);
        const std::size_t m = 2 * s * (r + 1);
        CHECK(g.n() == (r - 1) * m);
        for (Vertex v = 0; v < g.n(); ++v) CHECK(g.degree(v) == (r - 2) * m + 4 * s - 1);
        if (g.n() <= 20)
            for (const auto& K : naive::cliques(g, r)) {
                bool inner = false;
                for (std::size_t a = 0; a < K.size(); ++a)
                    for (std::size_t b = a + 1; b < K.size(); ++b) inner = inner || K[a] / m == K[b] / m;
                CHECK(inner);
            }
    }
}

TEST_CASE("random minimum-degree instances") {
    auto a = gen_random_min_degree(14, 2, Rational(1, 5), 42);
    auto b = gen_random_min_degree(14, 2, Rational(1, 5), 42);
    CHECK(save_text(a) == save_text(b));
    CHECK(a.min_degree() >= 12);
    CHECK(a.edge_count() < 91);
    CHECK(gen_random_min_degree(10, 2, Rational(1, 1000), 3) == gen_complete(10, 2));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto h = gen_random_min_degree(9, 3, Rational(1, 3), seed);
        CHECK(h.min_j_degree(2).min_degree >= 6);
    }
    CHECK_THROWS_AS(gen_random_min_degree(10, 2, Rational(0), 1), InvalidArgument);
}

TEST_CASE("K4 minus an edge") {
    auto g = gen_k4_minus_edge();
    CHECK(g.edge_count() == 5);
    CHECK(count_cliques(g, 3) == 2);
    CHECK(g.min_degree() == 2);
}

TEST_CASE("complete graph minus a perfect matching") {
    auto g = gen_complete_minus_matching(10);
    CHECK(g.edge_count() == 40);
    CHECK(g.min_degree() == 8);
    CHECK(!g.adjacent(4, 5));
    CHECK(g.adjacent(5, 6));
}

TEST_CASE("manifest records the edge hash") {
    GenSpec s{"random", 12, 2, 3, 1, Rational(1, 4), 7};
    auto g = generate(s);
    auto m = manifest(s, g);
    CHECK(m["edges"] == g.edge_count());
    CHECK(m["seed"] == 7);
    CHECK(m["edge_hash"].get<std::string>().size() == 16);
    CHECK(edge_hash(g) == edge_hash(generate(s)));
    s.seed = 8;
    CHECK(edge_hash(g) != edge_hash(generate(s)));
    CHECK_THROWS_AS(generate(GenSpec{"nope"}), InvalidArgument);
}
