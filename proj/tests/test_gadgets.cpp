#include <doctest.h>

#include "fracdecomp/audit.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/gadgets.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/rational.hpp"
#include "naive.hpp"

using namespace fracdecomp;

namespace {

BigInt C(long n, long k) {
    if (k < 0 || n < k) return 0;
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Rational indicator(const Clique& f, const Clique& e) { return f == e ? 1 : 0; }

}  // namespace

TEST_CASE("alpha for triangles in graphs") {
    auto a = solve_alpha(3, 2);
    CHECK(a.alpha == std::vector<Rational>{Rational(1, 3), Rational(-1, 6), Rational(1, 3)});
}

TEST_CASE("alpha for r = 5, k = 2") {
    auto a = solve_alpha(5, 2);
    CHECK(a.alpha[2] == Rational(1, 10));
    CHECK(a.alpha[1] == Rational(-3, 20));
    CHECK(a.alpha[0] == Rational(3, 5));
}

TEST_CASE("alpha solves the triangular system") {
    for (int k = 2; k <= 5; ++k)
        for (int r = k + 1; r <= 9; ++r) {
            auto a = solve_alpha(r, k);
            REQUIRE(a.alpha.size() == static_cast<std::size_t>(k + 1));
            for (int i = 0; i <= k; ++i) {
                Rational s = 0;
                for (int j = i; j <= k; ++j) s += Rational(C(k - i, j - i) * C(r - k + i, j)) * a.alpha[j];
                CHECK(s == (i == k ? 1 : 0));
                CHECK(alpha_matrix_entry(r, k, i, k) == C(r - k + i, k));
            }
            CHECK(a.alpha[k] == Rational(1) / Rational(C(r, k)));
        }
}

TEST_CASE("alpha closed form when r = k + 1") {
    for (int k = 2; k <= 8; ++k) {
        auto a = solve_alpha(k + 1, k);
        for (int j = 0; j <= k; ++j) {
            Rational want = Rational(1) / Rational(C(k, j) * (k + 1));
            if ((k - j) % 2) want = -want;
            CHECK(a.alpha[j] == want);
        }
    }
}

TEST_CASE("phi numerators") {
    CHECK(edge_phi_numerators(3) == std::vector<std::int64_t>{2, -1, 2});
    CHECK(edge_phi_numerators(5) == std::vector<std::int64_t>{12, -3, 2});
}

TEST_CASE("basic gadget on K5") {
    auto g = gen_complete(5, 2);
    Clique J{0, 1, 2, 3, 4}, e{0, 1};
    auto w = basic_edge_gadget(g, J, e, solve_alpha(3, 2));
    for (Vertex v = 2; v < 5; ++v) CHECK(w.get({0, 1, v}) == Rational(1, 3));
    CHECK(naive::residual(g, w, [&](const Clique& f) { return indicator(f, e); }) == 0);
    CHECK(naive::coverage(g, w)[g.edge_index(2, 3)] == 0);
}

TEST_CASE("basic gadget on a complete triple system") {
    auto g = gen_complete(7, 3);
    Clique J{0, 1, 2, 3, 4, 5, 6}, e{1, 3, 5};
    auto w = basic_edge_gadget(g, J, e, solve_alpha(4, 3));
    CHECK(naive::residual(g, w, [&](const Clique& f) { return indicator(f, e); }) == 0);
}

TEST_CASE("basic gadget needs a clique") {
    auto g = gen_k4_minus_edge();
    Clique J{0, 1, 2, 3}, e{0, 1};
    CHECK_THROWS_AS(basic_edge_gadget(g, J, e, solve_alpha(3, 2)), InvalidArgument);
}

TEST_CASE("averaged gadget on K11") {
    auto g = gen_complete(11, 2);
    Clique e{0, 1};
    auto H = extension_family_He(g, e, 3);
    REQUIRE(H.size() == 84);
    auto w = averaged_edge_gadget(g, e, 3, H);
    for (Vertex v = 2; v < 11; ++v) CHECK(w.get({0, 1, v}) == Rational(1, 9));
    CHECK(naive::residual(g, w, [&](const Clique& f) { return indicator(f, e); }) == 0);
}

TEST_CASE("averaged gadget over a singleton is the basic gadget") {
    auto g = gen_random_min_degree(10, 2, Rational(1, 5), 3);
    Clique e = g.edge_clique(0);
    auto H = extension_family_He(g, e, 3);
    REQUIRE(!H.empty());
    auto one = H.filter([&](std::span<const Vertex> A) { return H.find(A) == 0; });
    Clique J = H.clique(0);
    J.insert(J.end(), e.begin(), e.end());
    std::sort(J.begin(), J.end());
    CHECK(averaged_edge_gadget(g, e, 3, one) == basic_edge_gadget(g, J, e, solve_alpha(3, 2)));
}

TEST_CASE("averaged gadget identity and scaling on random graphs") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto g = gen_random_min_degree(11, 2, Rational(1, 5), seed);
        for (int r = 3; r <= 4; ++r)
            for (std::size_t i = 0; i < g.edge_count(); i += 5) {
                Clique e = g.edge_clique(i);
                auto H = extension_family_He(g, e, r);
                if (H.empty()) continue;
                auto w = averaged_edge_gadget(g, e, r, H).scaled(Rational(7, 3));
                CHECK(naive::residual(g, w, [&](const Clique& f) -> Rational { return indicator(f, e) * Rational(7, 3); }) == 0);
            }
    }
}

TEST_CASE("averaged gadget needs hosts") {
    auto g = gen_k4_minus_edge();
    Clique e{0, 1};
    CHECK_THROWS_AS(averaged_edge_gadget(g, e, 3, CliqueFamily(3)), StageError);
}

TEST_CASE("approximate vertex gadget cancels away from x") {
    auto g = gen_complete(10, 2);
    auto [phi, rep] = vertex_gadget_approx(g, 0, 4, observed_delta(g), {}, Regime::relaxed);
    CHECK(rep.w_x == 30);
    auto edges = g.edge_list();
    auto cov = naive::coverage(g, phi);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i][0] != 0) CHECK(cov[i] == 0);
    REQUIRE(rep.tau.size() == 9);
    for (const auto& [y, t] : rep.tau) {
        CHECK(t == rep.tau.begin()->second);
        CHECK(t == 1 - cov[g.edge_index(0, y)]);
    }
}

TEST_CASE("vertex gadget denominator must be positive") {
    auto g = gen_complete_minus_matching(8);
    CHECK_THROWS_AS(vertex_gadget_approx(g, 0, 5, observed_delta(g), {}, Regime::relaxed), StageError);
}

TEST_CASE("vertex gadget covers exactly the edges at x") {
    auto g = gen_random_min_degree(12, 2, Rational(1, 6), 21);
    auto delta = observed_delta(g);
    for (Vertex x : {0u, 5u, 11u}) {
        VertexGadgetResult det;
        auto xi = vertex_gadget(g, x, 3, delta, {}, Regime::relaxed, &det);
        CHECK(naive::residual(g, xi, [&](const Clique& f) { return Rational(f[0] == x || f[1] == x ? 1 : 0); }) == 0);
        CHECK(det.corrections > 0);
    }
}
