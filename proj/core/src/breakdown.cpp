#include "combinatorics.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/parallel.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

}  // namespace

BreakdownResult breakdown(const Hypergraph& g, int r, const Rational& delta, const std::vector<Vertex>& X,
                          int threads) {
    if (!g.is_graph()) throw InvalidArgument("breakdown is defined for graphs");
    if (r < 5) throw StageError("breakdown", "needs r >= 5 (got " + std::to_string(r) + ")");
    const std::size_t n = g.n(), m = g.edge_count();
    const Rational dn = delta * rat(n);
    const BigInt kr2 = count_cliques(g, r - 2);
    const Rational k2(kr2), k3(count_cliques(g, r - 3)), k4(count_cliques(g, r - 4)), k5(count_cliques(g, r - 5));

    BreakdownResult res;
    res.delta = delta;
    res.kappa = k2 - 2 * dn * k3;

    std::vector<VertexSet> nc(n);
    std::vector<std::size_t> ncs(n);
    for (Vertex x = 0; x < n; ++x) {
        nc[x] = g.non_neighbors(x);
        ncs[x] = nc[x].count();
    }
    std::vector<std::size_t> inside(n, 0), nc_sum(n, 0);
    for (Vertex x = 0; x < n; ++x) {
        std::size_t twice = 0;
        nc[x].for_each([&](Vertex a) {
            twice += intersection_count(g.adjacency(a), nc[x]);
            nc_sum[x] += ncs[a];
        });
        inside[x] = twice / 2;
    }

    res.gamma.assign(n, 0);
    res.sigma.assign(n, 0);
    res.sigma1.assign(n, 0);
    res.sigma2.assign(n, 0);
    res.sigma3.assign(n, 0);
    parallel_chunks(n, threads, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            auto U = nc[x].to_vector();
            BigInt s1 = 0;
            for (int i = 1; i <= 3; ++i) {
                BigInt part = 0;
                detail::for_each_subset(U, i, [&](const std::vector<Vertex>& Z) {
                    part += extensions(g, Z, r - 2);
                    return true;
                });
                if (i % 2) s1 -= part;
                else s1 += part;
            }
            res.gamma[x] = (dn - rat(ncs[x])) * k3;
            res.sigma1[x] = Rational(s1) - res.gamma[x] + dn * k3;
            res.sigma2[x] = dn * (rat(ncs[x]) - dn / 2) * k4 - dn * rat(nc_sum[x]) * k5;
            res.sigma3[x] = -rat(inside[x]) * dn * k5;
            res.sigma[x] = res.sigma1[x] + res.sigma2[x] + res.sigma3[x];
        }
    });

    res.kappa_edge.assign(m, 0);
    res.pi.assign(m, 0);
    res.pi1.assign(m, 0);
    res.pi2.assign(m, 0);
    res.pi_bound.assign(m, 0);
    const Rational dr = delta * r;
    const Rational tail = 203 * dr * dr * dr * dr * k2;
    parallel_chunks(m, threads, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto e = g.edge(i);
            Vertex x = e[0], y = e[1];
            res.kappa_edge[i] = extensions(g, e, r);
            res.pi[i] = Rational(res.kappa_edge[i]) - res.kappa - res.gamma[x] - res.gamma[y] - res.sigma[x] -
                        res.sigma[y];
            std::size_t unions = 0, ebar = 0;
            nc[x].for_each([&](Vertex z1) {
                ebar += intersection_count(nc[y], nc[z1]);
                nc[y].for_each([&](Vertex z2) { unions += ncs[z1] + ncs[z2] - intersection_count(nc[z1], nc[z2]); });
            });
            res.pi1[i] = dn * rat(nc_sum[x]) * k5 + dn * rat(nc_sum[y]) * k5 - rat(unions) * k5 +
                         (dn - rat(ncs[x])) * (dn - rat(ncs[y])) * k4;
            res.pi2[i] = (rat(inside[x]) * (rat(ncs[y]) - dn) + rat(inside[y]) * (rat(ncs[x]) - dn)) * k5;
            res.pi_bound[i] = abs(res.pi1[i]) + abs(res.pi2[i]) + 2 * rat(intersection_count(nc[x], nc[y])) * k3 +
                              tail + 3 * rat(ebar) * k4;
        }
    });
    for (std::size_t i = 0; i < m; ++i)
        if (abs(res.pi[i]) > res.pi_bound[i]) {
            if (res.pi_bound_violations++ == 0) res.first_violation = i;
        }

    res.max_sigma_ratio = 0;
    if (kr2 > 0)
        for (Vertex x = 0; x < n; ++x) {
            Rational q = abs(res.sigma[x]) * 10000 * r / k2;
            if (q > res.max_sigma_ratio) res.max_sigma_ratio = q;
        }
    res.sigma_bound = res.max_sigma_ratio <= 1;

    // δ = 1/(10^4 r^{3/2}); compare after squaring.
    const BigInt nn = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
    const BigInt r3 = BigInt(r) * r * r;
    BigInt gap = BigInt(static_cast<unsigned long>(n - g.min_degree())) * 10000;
    BigInt xs = BigInt(static_cast<unsigned long>(X.size())) * 10000;
    BigInt rn = BigInt(r - 1) * static_cast<unsigned long>(n);
    res.stated_hypotheses = n > 0 && gap * gap * r3 <= nn && xs * xs * r3 <= rn * rn;
    res.observed_hypotheses = n > 0 && dr * 16 <= 1 && rat(n - g.min_degree()) <= dn &&
                              rat(X.size()) <= delta * (r - 1) * rat(n);
    return res;
}

}  // namespace fracdecomp
