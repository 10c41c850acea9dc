#include <doctest.h>

#include "fracdecomp/audit.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/rational.hpp"
#include "naive.hpp"

using namespace fracdecomp;

namespace {

Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

BigInt C(long n, long k) {
    if (k < 0 || n < k) return 0;
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Clique> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.push_back({u, static_cast<Vertex>(a + v)});
    return Hypergraph(a + b, 2, e);
}

std::vector<Rational> edge_pi(const Hypergraph& g, int r, const Rational& kappa) {
    std::vector<Rational> pi(g.edge_count());
    for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = Rational(extensions(g, g.edge(i), r)) - kappa;
    return pi;
}

PipelineOptions relaxed() {
    PipelineOptions o;
    o.regime = Regime::relaxed;
    return o;
}

}  // namespace

TEST_CASE("preprocess leaves clique-free graphs alone") {
    auto g = complete_bipartite(4, 4);
    auto p = preprocess(g, 3, Rational(1, 2));
    CHECK(p.h == g);
    CHECK(p.removed.empty());
}

TEST_CASE("preprocess on a complete host") {
    auto g = gen_complete(10, 2);
    const Rational delta(1, 2);
    auto p = preprocess(g, 3, delta);
    CHECK(!p.removed.empty());
    CHECK(p.removed.front() == Clique{0, 1, 2});
    CHECK(q(p.h.min_degree()) >= (1 - delta) * 10);
    CHECK(q(p.X.size()) <= delta * 2 * 10);
    std::vector<Clique> inX;
    for (const auto& K : naive::cliques(p.h, 3))
        if (std::all_of(K.begin(), K.end(), [&](Vertex v) { return std::count(p.X.begin(), p.X.end(), v); }))
            inX.push_back(K);
    CHECK(inX.empty());
    for (Vertex v = 0; v < 10; ++v) {
        bool hi = q(p.h.degree(v)) >= (1 - delta) * 10 + 2;
        CHECK(hi == static_cast<bool>(std::count(p.X.begin(), p.X.end(), v)));
    }
    auto again = preprocess(g, 3, delta);
    CHECK(again.removed == p.removed);
    CHECK(again.h == p.h);
}

TEST_CASE("preprocess rejects graphs below the degree threshold") {
    CHECK_THROWS_AS(preprocess(gen_lower_bound_family(3, 1), 3, Rational(1, 100)), StageError);
}

TEST_CASE("uniform weightings") {
    auto k7 = gen_complete(7, 2);
    auto w = uniform_weighting(k7, 4, Rational(C(5, 2)));
    CHECK(verify(k7, 4, w).max_residual == 0);
    auto t5 = gen_complete(5, 3);
    auto u = uniform_weighting(t5, 4, 2);
    CHECK(u.get({0, 1, 2, 3}) == Rational(1, 2));
    CHECK(verify(t5, 4, u).feasible);
    CHECK_THROWS_AS(uniform_weighting(k7, 4, 0), StageError);
}

TEST_CASE("graph kappa") {
    auto k10 = gen_complete(10, 2);
    CHECK(graph_kappa(k10, 4, Rational(1, 10)) == 25);
    CHECK(graph_kappa(k10, 4, Rational(1, 100)) == 43);
}

TEST_CASE("smoothness verdicts") {
    auto g = gen_complete(12, 2);
    std::vector<Rational> zero(g.edge_count(), 0);
    CHECK(smoothness_check(g, 3, zero, 10).smooth());
    auto spike = zero;
    spike[5] = Rational(2 * 10, 10000);
    auto rep = smoothness_check(g, 3, spike, 10);
    CHECK(!rep.a1);
    CHECK(rep.a1_edge == 5);
    CHECK(rep.a1_max == Rational(2, 10000));
}

TEST_CASE("smoothness quantities match a double loop") {
    auto g = gen_random_min_degree(40, 2, Rational(3, 100), 17);
    REQUIRE(q(g.min_degree()) >= Rational(97, 100) * 40);
    auto delta = observed_delta(g);
    auto p = preprocess(g, 4, delta);
    auto kappa = graph_kappa(p.h, 4, delta);
    auto pi = edge_pi(p.h, 4, kappa);
    auto rep = smoothness_check(p.h, 4, pi, kappa);
    Rational a1 = 0, a2 = 0, a3 = 0;
    auto edges = p.h.edge_list();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Rational v = abs(pi[i]) / kappa;
        a1 = std::max(a1, v);
        a3 += v;
    }
    for (Vertex x = 0; x < 40; ++x) {
        Rational s = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i][0] == x || edges[i][1] == x) s += abs(pi[i]) / kappa;
        a2 = std::max(a2, s);
    }
    CHECK(rep.a1_max == a1);
    CHECK(rep.a2_max == a2);
    CHECK(rep.a3_total == a3);
    CHECK(rep.a1 == (a1 * 10000 <= 1));
    CHECK(rep.a3 == (a3 * 10000 * 16 <= 1600));
}

TEST_CASE("smooth correction of zero is zero") {
    auto g = gen_complete(10, 2);
    std::vector<Rational> zero(g.edge_count(), 0);
    CHECK(smooth_correction(g, 3, Rational(1, 10), zero, Regime::relaxed).size() == 0);
}

TEST_CASE("smooth correction on one edge") {
    auto g = gen_random_min_degree(12, 2, Rational(1, 6), 2);
    auto delta = observed_delta(g);
    auto kappa = graph_kappa(g, 3, delta);
    std::vector<Rational> pi(g.edge_count(), 0);
    pi[3] = kappa * Rational(5, 7);
    auto w = smooth_correction(g, 3, delta, pi, Regime::relaxed);
    auto target = g.edge_clique(3);
    CHECK(naive::residual(g, w, [&](const Clique& f) { return f == target ? Rational(5, 7) : Rational(0); }) == 0);
}

TEST_CASE("smooth correction with constant pi on K12") {
    auto g = gen_complete(12, 2);
    auto delta = observed_delta(g);
    auto kappa = graph_kappa(g, 3, delta);
    std::vector<Rational> pi(g.edge_count(), kappa / 100000);
    for (auto regime : {Regime::relaxed, Regime::strict}) {
        CorrectionReport rep;
        try {
            auto w = smooth_correction(g, 3, delta, pi, regime, &rep);
            CHECK(naive::residual(g, w, [](const Clique&) { return Rational(1, 100000); }) == 0);
            CHECK(rep.max_abs_weight > 0);
        } catch (const StageError& e) {
            CHECK(regime == Regime::strict);
            CHECK(e.stage() == "smooth-correction");
        }
    }
}

TEST_CASE("breakdown identity against naive counts") {
    for (auto g : {gen_complete(10, 2), gen_random_min_degree(11, 2, Rational(1, 5), 4)}) {
        auto delta = observed_delta(g);
        const int r = 5;
        auto bd = breakdown(g, r, delta, {}, 2);
        const Rational dn = delta * q(g.n());
        Rational k3(count_cliques(g, r - 3));
        for (Vertex x = 0; x < g.n(); ++x) CHECK(bd.gamma[x] == (dn - q(g.n() - g.degree(x))) * k3);
        auto edges = g.edge_list();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            Vertex x = edges[i][0], y = edges[i][1];
            Rational lhs = q(naive::kappa(g, edges[i], r));
            CHECK(lhs == bd.kappa + bd.gamma[x] + bd.gamma[y] + bd.sigma[x] + bd.sigma[y] + bd.pi[i]);
        }
    }
}

TEST_CASE("breakdown on a complete host is symmetric") {
    auto g = gen_complete(9, 2);
    auto bd = breakdown(g, 5, Rational(1, 9), {});
    for (Vertex x = 1; x < 9; ++x) {
        CHECK(bd.gamma[x] == bd.gamma[0]);
        CHECK(bd.sigma[x] == bd.sigma[0]);
    }
    for (const auto& p : bd.pi) CHECK(p == bd.pi[0]);
    CHECK_THROWS_AS(breakdown(g, 4, Rational(1, 9), {}), StageError);
}

TEST_CASE("hypergraph threshold") {
    CHECK(hypergraph_delta(2, 3) == Rational(1, 1728));
    for (int r = 3; r <= 24; ++r) {
        // 1/(10^4 r^{3/2}) <= 1/(64 r^3)
        CHECK(hypergraph_delta(2, r) == Rational(1, 64 * r * r * r));
        CHECK(BigInt(64 * r * r * r) * (64 * r * r * r) <= BigInt(100000000) * r * r * r);
    }
}

TEST_CASE("hypergraph driver on complete hosts is uniform") {
    for (auto [n, k, r] : {std::tuple{8, 2, 4}, {7, 3, 4}, {9, 3, 5}}) {
        auto g = gen_complete(n, k);
        auto res = decompose_hypergraph(g, r);
        CHECK(res.certificate.feasible);
        Rational u = Rational(1) / Rational(C(n - k, r - k));
        for (const auto& [K, v] : res.certificate.weighting.entries()) CHECK(v == u);
        CHECK(res.certificate.weighting.size() == C(n, r));
    }
}

TEST_CASE("hypergraph driver on a triple system missing one edge") {
    auto full = gen_complete(9, 3).edge_list();
    full.erase(full.begin() + 17);
    Hypergraph g(9, 3, full);
    auto res = decompose_hypergraph(g, 4);
    CHECK(res.certificate.max_residual == 0);
    CHECK(naive::residual(g, res.certificate.weighting, [](const Clique&) { return Rational(1); }) == 0);
    auto lp = lp_feasible(g, 4);
    if (res.certificate.feasible) CHECK(lp.feasible);
}

TEST_CASE("hypergraph driver needs host cliques") {
    try {
        decompose_hypergraph(gen_k4_minus_edge(), 3);
        FAIL("expected a stage error");
    } catch (const StageError& e) {
        CHECK(e.stage() == "hypergraph-correction");
    }
}

TEST_CASE("r2 driver") {
    auto kn = decompose_r2(gen_complete(12, 2), 4, relaxed());
    CHECK(kn.certificate.max_residual == 0);
    CHECK(kn.certificate.feasible);
    auto g = gen_random_min_degree(20, 2, Rational(1, 20), 8);
    auto res = decompose_r2(g, 4, relaxed());
    CHECK(res.certificate.max_residual == 0);
    CHECK(naive::residual(g, res.certificate.weighting, [](const Clique&) { return Rational(1); }) == 0);
    if (res.certificate.feasible) CHECK(check_primal(g, 4, res.certificate.weighting));
}

TEST_CASE("r2 strict mode reports unmet smoothness") {
    auto g = gen_random_min_degree(14, 2, Rational(1, 5), 1);
    try {
        decompose_r2(g, 4);
        FAIL("expected a stage error");
    } catch (const StageError& e) {
        CHECK(e.stage() == "smoothness");
    }
}

TEST_CASE("r32 delegates small r") {
    auto res = decompose_r32(gen_complete(8, 2), 4);
    CHECK(res.driver == "hypergraph");
    CHECK(res.certificate.feasible);
    CHECK(decompose_auto(gen_complete(7, 3), 4).driver == "hypergraph");
}

TEST_CASE("r32 full machinery on a complete host") {
    auto o = relaxed();
    o.force_full_machinery = true;
    auto g = gen_complete(12, 2);
    auto res = decompose_r32(g, 5, o);
    CHECK(res.driver == "r32");
    CHECK(res.certificate.max_residual == 0);
    CHECK(naive::residual(g, res.certificate.weighting, [](const Clique&) { return Rational(1); }) == 0);
    auto first = res.certificate.weighting.entries().begin()->second;
    for (const auto& [K, v] : res.certificate.weighting.entries()) CHECK(v == first);
}

TEST_CASE("folding vertex terms reproduces the r2 driver") {
    for (auto g : {gen_complete(11, 2), gen_random_min_degree(13, 2, Rational(1, 13), 3)}) {
        auto o = relaxed();
        o.force_full_machinery = true;
        o.fold_vertex_terms = true;
        auto folded = decompose_r32(g, 5, o);
        auto r2 = decompose_r2(g, 5, relaxed());
        CHECK(folded.certificate.weighting == r2.certificate.weighting);
    }
}

TEST_CASE("certificates do not depend on the thread count") {
    auto g = gen_random_min_degree(13, 2, Rational(1, 13), 5);
    auto o = relaxed();
    o.force_full_machinery = true;
    o.threads = 1;
    auto a = to_json(decompose_r32(g, 5, o)).dump();
    o.threads = 3;
    CHECK(to_json(decompose_r32(g, 5, o)).dump() == a);
}

TEST_CASE("verify") {
    auto g = gen_complete(7, 2);
    Weighting w(3);
    for (const auto& K : naive::cliques(g, 3)) w.set(K, Rational(1, 5));
    auto c = verify(g, 3, w);
    CHECK(c.feasible);
    CHECK(c.max_residual == 0);
    w.set({0, 1, 2}, -1);
    c = verify(g, 3, w);
    CHECK(!c.feasible);
    CHECK(c.min_weight == -1);
    Weighting bad(3);
    bad.set({0, 2, 3}, 1);
    CHECK_THROWS_AS(verify(gen_k4_minus_edge(), 3, bad), InvalidArgument);
}
