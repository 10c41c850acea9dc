#include <algorithm>

#include "accumulate.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/parallel.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::string edge_text(std::span<const Vertex> e) {
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}";
}

}  // namespace

Rational graph_kappa(const Hypergraph& g, int r, const Rational& delta) {
    return Rational(count_cliques(g, r - 2)) - 2 * delta * rat(g.n()) * Rational(count_cliques(g, r - 3));
}

Weighting uniform_weighting(const Hypergraph& g, int r, const Rational& kappa) {
    if (kappa <= 0) throw StageError("uniform-weighting", "uniform scale nonpositive (kappa = " + to_string(kappa) + ")");
    auto family = enumerate_cliques(g, r);
    return Weighting::from_dense(family, std::vector<Rational>(family.size(), Rational(1) / kappa));
}

SmoothnessReport smoothness_check(const Hypergraph& g, int r, const std::vector<Rational>& pi, const Rational& kappa) {
    if (!g.is_graph()) throw InvalidArgument("smoothness is defined for graphs");
    if (pi.size() != g.edge_count()) throw InvalidArgument("pi must have one value per edge");
    if (kappa <= 0) throw InvalidArgument("smoothness needs kappa > 0");
    SmoothnessReport rep;
    rep.gamma_scale = kappa;
    rep.a1_max = 0;
    rep.a3_total = 0;
    std::vector<Rational> around(g.n(), 0);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        Rational a = abs(pi[i]) / kappa;
        if (rep.a1_edge == Hypergraph::npos || a > rep.a1_max) {
            rep.a1_max = a;
            rep.a1_edge = i;
        }
        rep.a3_total += a;
        auto e = g.edge(i);
        around[e[0]] += a;
        around[e[1]] += a;
    }
    rep.a2_max = 0;
    for (Vertex x = 0; x < g.n(); ++x)
        if (x == 0 || around[x] > rep.a2_max) {
            rep.a2_max = around[x];
            rep.a2_vertex = x;
        }
    const Rational n = rat(g.n());
    rep.a1 = rep.a1_max * 10000 <= 1;
    rep.a2 = rep.a2_max * 10000 * r <= n;
    rep.a3 = rep.a3_total * 10000 * r * r <= n * n;
    return rep;
}

std::vector<Rational> smooth_correction_dense(const Hypergraph& g, int r, const CliqueFamily& family,
                                              const std::vector<Rational>& pi, const Rational& kappa,
                                              Regime regime, int threads, CorrectionReport* report) {
    if (!g.is_graph()) throw InvalidArgument("smooth correction is defined for graphs");
    if (r < 3) throw InvalidArgument("smooth correction needs r >= 3");
    if (pi.size() != g.edge_count()) throw InvalidArgument("pi must have one value per edge");
    if (kappa <= 0) throw StageError("smooth-correction", "kappa nonpositive (" + to_string(kappa) + ")");
    const std::size_t n = g.n(), m = g.edge_count(), fsz = family.size();
    const bool strict = regime == Regime::strict;

    std::vector<Rational> pin(m);
    for (std::size_t i = 0; i < m; ++i) pin[i] = pi[i] / kappa;

    // |π/κ| as a dense matrix and its row sums.
    std::vector<Rational> absmat, around;
    Rational lim1, lim2;
    if (strict) {
        absmat.assign(n * n, 0);
        around.assign(n, 0);
        for (std::size_t i = 0; i < m; ++i) {
            auto e = g.edge(i);
            Rational a = abs(pin[i]);
            absmat[e[0] * n + e[1]] = a;
            absmat[e[1] * n + e[0]] = a;
            around[e[0]] += a;
            around[e[1]] += a;
        }
        Rational gamma = Rational(1, 10000) / (r * r);
        lim1 = 72 * r * r * gamma;
        lim2 = 48 * r * rat(n) * gamma;
    }
    auto inner_sum = [&](std::span<const Vertex> S) {
        Rational s = 0;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) s += absmat[S[a] * n + S[b]];
        return s;
    };
    auto light = [&](std::span<const Vertex> S) {
        Rational inner = inner_sum(S);
        if (inner > lim1) return false;
        Rational touch = -inner;
        for (Vertex v : S) touch += around[v];
        return touch <= lim2;
    };

    std::vector<char> in_a(fsz, 1);
    if (strict)
        for (std::size_t c = 0; c < fsz; ++c) in_a[c] = light(family[c]);
    CorrectionReport rep;
    rep.admissible = static_cast<std::size_t>(std::count(in_a.begin(), in_a.end(), 1));
    const BigInt kr(static_cast<unsigned long>(fsz));

    auto num = edge_phi_numerators(r);
    int t = resolve_threads(threads, m);
    std::vector<std::vector<Rational>> acc(t);
    std::vector<std::size_t> min_hosts(t, 0), min_core(t, 0), corrected(t, 0);
    parallel_chunks(m, t, [&](int w, std::size_t begin, std::size_t end) {
        detail::CountScratch scratch(fsz);
        acc[w].assign(fsz, 0);
        detail::ScaledSum<Rational, Rational> sum(fsz, acc[w]);
        for (std::size_t i = begin; i < end; ++i) {
            if (!strict && pin[i] == 0) continue;
            auto e = g.edge(i);
            std::size_t core = 0;
            std::size_t h = detail::accumulate_hosts(
                g, family, e, r, num,
                [&](const Clique& J, const std::vector<detail::SubClique>& subs) {
                    for (const auto& s : subs)
                        if (!in_a[s.index]) return false;
                    if (strict && light(J)) ++core;
                    return true;
                },
                scratch);
            if (strict) {
                if (2 * BigInt(static_cast<unsigned long>(core)) < kr) {
                    scratch.discard();
                    throw StageError("smooth-correction",
                                     "edge " + edge_text(e) + " has " + std::to_string(core) +
                                         " light hosts, below k_r/2 = " + to_string(Rational(kr, 2)));
                }
                if (min_core[w] == 0 || core < min_core[w]) min_core[w] = core;
            }
            if (pin[i] == 0) {
                scratch.discard();
                continue;
            }
            if (h == 0) {
                scratch.discard();
                throw StageError("smooth-correction", "no admissible host for edge " + edge_text(e));
            }
            sum.take(scratch, pin[i] / (Rational(static_cast<long>(r) * (r - 1)) * rat(h)));
            ++corrected[w];
            if (min_hosts[w] == 0 || h < min_hosts[w]) min_hosts[w] = h;
        }
        sum.finish();
    });

    std::vector<Rational> out(fsz, 0);
    for (int w = 0; w < t; ++w) {
        if (!acc[w].empty())
            for (std::size_t c = 0; c < fsz; ++c) out[c] += acc[w][c];
        rep.corrected_edges += corrected[w];
        if (min_hosts[w] && (rep.min_hosts == 0 || min_hosts[w] < rep.min_hosts)) rep.min_hosts = min_hosts[w];
        if (min_core[w] && (rep.min_core_hosts == 0 || min_core[w] < rep.min_core_hosts)) rep.min_core_hosts = min_core[w];
    }
    rep.max_abs_weight = 0;
    for (const auto& v : out)
        if (abs(v) > rep.max_abs_weight) rep.max_abs_weight = abs(v);
    rep.bound_ok = rep.max_abs_weight * 2 * kappa <= 1;
    if (report) *report = std::move(rep);
    return out;
}

Weighting smooth_correction(const Hypergraph& g, int r, const Rational& delta, const std::vector<Rational>& pi,
                            Regime regime, CorrectionReport* report) {
    auto family = enumerate_cliques(g, r);
    Rational kappa = graph_kappa(g, r, delta);
    auto dense = smooth_correction_dense(g, r, family, pi, kappa, regime, 0, report);
    return Weighting::from_dense(family, dense);
}

}  // namespace fracdecomp
