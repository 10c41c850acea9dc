#include <algorithm>

#include "accumulate.hpp"
#include "combinatorics.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/gadgets.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

std::size_t count_in(const VertexSet& s, std::span<const Vertex> vs) {
    std::size_t c = 0;
    for (Vertex v : vs) c += s.test(v);
    return c;
}

Rational power(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// |value| / (c n^{i+1} / (r^{i+1} k_r)), i = [x ∈ K].
Rational bound_ratio(const Rational& value, long c, std::size_t n, int r, const BigInt& k_r, bool contains_x) {
    int e = contains_x ? 2 : 1;
    Rational lim = Rational(c) * power(Rational(static_cast<unsigned long>(n), static_cast<unsigned long>(r)), e) /
                   Rational(k_r);
    return abs(value) / lim;
}

}  // namespace

GadgetContext::GadgetContext(const Hypergraph& g_, int r_, Rational delta_, std::vector<Vertex> X_, Regime regime_,
                             int threads_)
    : g(g_), r(r_), delta(std::move(delta_)), X(std::move(X_)), regime(regime_), threads(threads_) {
    if (!g.is_graph()) throw InvalidArgument("vertex gadgets are defined for graphs");
    if (r < 3) throw InvalidArgument("vertex gadgets need r >= 3");
    cliques = enumerate_cliques(g, r, {0, threads});
    init();
}

GadgetContext::GadgetContext(const Hypergraph& g_, int r_, Rational delta_, std::vector<Vertex> X_, Regime regime_,
                             CliqueFamily cliques_, int threads_)
    : g(g_), r(r_), delta(std::move(delta_)), X(std::move(X_)), regime(regime_), threads(threads_),
      cliques(std::move(cliques_)) {
    if (!g.is_graph()) throw InvalidArgument("vertex gadgets are defined for graphs");
    if (r < 3) throw InvalidArgument("vertex gadgets need r >= 3");
    init();
}

void GadgetContext::init() {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    x_set = VertexSet(g.n());
    for (Vertex v : X) {
        if (v >= g.n()) throw InvalidArgument("X contains an out-of-range vertex");
        x_set.set(v);
    }
    k_r = BigInt(static_cast<unsigned long>(cliques.size()));
    k_r1 = count_cliques(g, r - 1, threads);
    k_r2 = count_cliques(g, r - 2, threads);
    admissible.assign(cliques.size(), 0);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        admissible[i] = le_sqrt_plus(static_cast<long>(count_in(x_set, cliques[i])), r, 2);
}

std::vector<Rational> vertex_gadget_approx_dense(const GadgetContext& ctx, Vertex x, VertexGadgetReport& rep) {
    const auto& g = ctx.g;
    const int r = ctx.r;
    const std::size_t n = g.n();
    if (x >= n) throw InvalidArgument("vertex out of range");
    rep = VertexGadgetReport{};
    rep.x = x;
    Rational nc(static_cast<unsigned long>(n - g.degree(x)));
    rep.w_x = Rational(ctx.k_r1) - (nc + ctx.delta * Rational(static_cast<unsigned long>(n))) * Rational(ctx.k_r2);
    if (rep.w_x <= 0)
        throw StageError("vertex-gadget", "vertex gadget denominator nonpositive at x=" + std::to_string(x) +
                                              " (w_x = " + to_string(rep.w_x) + ")");

    detail::CountScratch scratch(ctx.cliques.size());
    const std::int64_t coeff[2] = {-static_cast<std::int64_t>(r - 2), 1};
    const Vertex base[1] = {x};
    const bool x_in_X = ctx.x_set.test(x);
    std::vector<std::uint64_t> wxy(n, 0);
    rep.hosts = detail::accumulate_hosts(
        g, ctx.cliques, base, r, coeff,
        [&](const Clique& J, const std::vector<detail::SubClique>&) {
            long in_x = static_cast<long>(count_in(ctx.x_set, J)) - (x_in_X ? 1 : 0);
            if (!le_sqrt_plus(in_x, r, 1)) return false;
            for (Vertex y : J)
                if (y != x) ++wxy[y];
            return true;
        },
        scratch);

    std::vector<Rational> phi(ctx.cliques.size(), 0);
    Rational scale = Rational(1) / (Rational(r - 1) * rep.w_x);
    scratch.flush(scale, phi);

    std::vector<Rational> cov(n, 0);
    for (std::size_t c = 0; c < phi.size(); ++c) {
        if (phi[c] == 0) continue;
        auto K = ctx.cliques[c];
        bool has_x = std::binary_search(K.begin(), K.end(), x);
        if (has_x)
            for (Vertex y : K)
                if (y != x) cov[y] += phi[c];
    }
    rep.b2 = true;
    rep.max_abs_tau = 0;
    rep.sum_abs_tau = 0;
    g.adjacency(x).for_each([&](Vertex y) {
        Rational t = 1 - cov[y];
        rep.tau[y] = t;
        rep.w_xy[y] = wxy[y];
        Rational a = abs(t);
        rep.sum_abs_tau += a;
        if (a > rep.max_abs_tau) rep.max_abs_tau = a;
        if (t * t * r > 1) rep.b2 = false;
    });
    rep.b3 = rep.sum_abs_tau * r <= Rational(static_cast<unsigned long>(n));
    rep.max_phi_ratio = 0;
    if (ctx.k_r > 0) {
        for (std::size_t c = 0; c < phi.size(); ++c) {
            if (phi[c] == 0) continue;
            auto K = ctx.cliques[c];
            Rational q = bound_ratio(phi[c], 2, n, r, ctx.k_r, std::binary_search(K.begin(), K.end(), x));
            if (q > rep.max_phi_ratio) rep.max_phi_ratio = q;
        }
    }
    rep.b4 = rep.max_phi_ratio <= 1;
    return phi;
}

VertexGadgetResult vertex_gadget_dense(const GadgetContext& ctx, Vertex x) {
    const auto& g = ctx.g;
    const int r = ctx.r;
    const std::size_t n = g.n();
    VertexGadgetResult res;
    res.xi = vertex_gadget_approx_dense(ctx, x, res.report);
    const auto& tau = res.report.tau;

    std::vector<Rational> abs_tau(n, 0);
    for (const auto& [y, t] : tau) abs_tau[y] = abs(t);
    std::vector<char> in_ax(ctx.cliques.size(), 0);
    for (std::size_t c = 0; c < ctx.cliques.size(); ++c) {
        if (!ctx.admissible[c]) continue;
        if (ctx.regime == Regime::strict) {
            Rational s = 0;
            for (Vertex y : ctx.cliques[c]) s += abs_tau[y];
            if (s > 12) continue;
        }
        in_ax[c] = 1;
        ++res.admissible_x;
    }
    auto all_in_ax = [&](const Clique&, const std::vector<detail::SubClique>& subs) {
        for (const auto& s : subs)
            if (!in_ax[s.index]) return false;
        return true;
    };
    auto num = edge_phi_numerators(r);
    detail::CountScratch scratch(ctx.cliques.size());

    if (ctx.regime == Regime::strict) {
        // A_x must be well-distributed: every edge needs k_r/2 hosts inside A_x.
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            auto e = g.edge(i);
            std::size_t h = detail::accumulate_hosts(g, ctx.cliques, e, r, num, all_in_ax, scratch);
            scratch.discard();
            if (2 * BigInt(static_cast<unsigned long>(h)) < ctx.k_r)
                throw StageError("vertex-gadget", "restricted family for x=" + std::to_string(x) +
                                                      " is not well-distributed: edge {" + std::to_string(e[0]) +
                                                      "," + std::to_string(e[1]) + "} has " + std::to_string(h) +
                                                      " hosts, k_r/2 = " + to_string(Rational(ctx.k_r, 2)));
        }
    }

    res.min_hosts = 0;
    for (const auto& [z, t] : tau) {
        if (t == 0) continue;
        Vertex e[2] = {std::min(x, z), std::max(x, z)};
        std::size_t h = detail::accumulate_hosts(g, ctx.cliques, e, r, num, all_in_ax, scratch);
        if (h == 0) {
            scratch.discard();
            throw StageError("vertex-gadget", "no admissible host for edge {" + std::to_string(e[0]) + "," +
                                                  std::to_string(e[1]) + "} in the gadget at x=" + std::to_string(x));
        }
        Rational scale = t / (Rational(static_cast<long>(r) * (r - 1)) * Rational(static_cast<unsigned long>(h)));
        scratch.flush(scale, res.xi);
        ++res.corrections;
        if (res.min_hosts == 0 || h < res.min_hosts) res.min_hosts = h;
    }

    res.max_xi_ratio = 0;
    if (ctx.k_r > 0) {
        for (std::size_t c = 0; c < res.xi.size(); ++c) {
            if (res.xi[c] == 0) continue;
            auto K = ctx.cliques[c];
            Rational q = bound_ratio(res.xi[c], 80, n, r, ctx.k_r, std::binary_search(K.begin(), K.end(), x));
            if (q > res.max_xi_ratio) res.max_xi_ratio = q;
        }
    }
    res.bound_ok = res.max_xi_ratio <= 1;
    return res;
}

std::pair<Weighting, VertexGadgetReport> vertex_gadget_approx(const Hypergraph& g, Vertex x, int r,
                                                              const Rational& delta, std::vector<Vertex> X,
                                                              Regime regime) {
    GadgetContext ctx(g, r, delta, std::move(X), regime);
    VertexGadgetReport rep;
    auto phi = vertex_gadget_approx_dense(ctx, x, rep);
    return {Weighting::from_dense(ctx.cliques, phi), std::move(rep)};
}

Weighting vertex_gadget(const Hypergraph& g, Vertex x, int r, const Rational& delta, std::vector<Vertex> X,
                        Regime regime, VertexGadgetResult* details) {
    GadgetContext ctx(g, r, delta, std::move(X), regime);
    auto res = vertex_gadget_dense(ctx, x);
    Weighting w = Weighting::from_dense(ctx.cliques, res.xi);
    if (details) *details = std::move(res);
    return w;
}

}  // namespace fracdecomp
