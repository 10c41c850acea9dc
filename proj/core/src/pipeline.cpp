#include "fracdecomp/pipeline.hpp"

#include <chrono>
#include <numeric>

#include "accumulate.hpp"
#include "combinatorics.hpp"
#include "fracdecomp/audit.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/parallel.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::string tuple_text(std::span<const Vertex> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

class Stopwatch {
public:
    explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    void lap(const std::string& stage) {
        auto now = std::chrono::steady_clock::now();
        sink_.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }

private:
    std::vector<std::pair<std::string, double>>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// κ_e^(r) for every edge, from the clique family.
std::vector<std::uint64_t> edge_clique_counts(const Hypergraph& g, const CliqueFamily& family) {
    std::vector<std::uint64_t> cnt(g.edge_count(), 0);
    const int k = g.k();
    for (std::size_t c = 0; c < family.size(); ++c) {
        auto K = family[c];
        std::vector<Vertex> kv(K.begin(), K.end());
        detail::for_each_subset(kv, k, [&](const std::vector<Vertex>& e) {
            ++cnt[g.edge_index(e)];
            return true;
        });
    }
    return cnt;
}

CliqueFamily all_cliques(const Hypergraph& g, int r, int threads) {
    if (r < 1 || static_cast<std::size_t>(r) > g.n()) return CliqueFamily(std::max(r, 1));
    return enumerate_cliques(g, r, {0, threads});
}

// δ(G) >= (1 - 1/(c r^{3/2})) n, compared after squaring.
bool degree_above_three_halves(const Hypergraph& g, int r, long c) {
    const long n = static_cast<long>(g.n());
    BigInt gap = BigInt(n - static_cast<long>(g.min_degree())) * c;
    return gap * gap * r * r * r <= BigInt(n) * n;
}

Rational working_delta(const Hypergraph& g, const PipelineOptions& opt) {
    if (opt.delta) {
        if (*opt.delta < 0 || *opt.delta >= 1) throw InvalidArgument("delta must lie in [0, 1)");
        return *opt.delta;
    }
    return observed_delta(g);
}

Weighting lift(const CliqueFamily& family, const std::vector<Rational>& values, const std::vector<Clique>& removed) {
    Weighting w = Weighting::from_dense(family, values);
    for (const auto& K : removed) w.add(K, 1);
    return w;
}

struct GraphStages {
    PreprocessResult pre;
    CliqueFamily family;
    Rational kappa;
};

GraphStages graph_setup(const Hypergraph& g, int r, PipelineResult& res, const PipelineOptions& opt, Stopwatch& sw) {
    if (!g.is_graph()) throw InvalidArgument("this driver needs a graph");
    if (r < 3) throw InvalidArgument("r must be at least 3");
    GraphStages s{preprocess(g, r, res.delta), CliqueFamily(r), 0};
    res.removed = s.pre.removed.size();
    res.x_size = s.pre.X.size();
    sw.lap("preprocess");
    s.family = all_cliques(s.pre.h, r, opt.threads);
    res.k_r = BigInt(static_cast<unsigned long>(s.family.size()));
    s.kappa = graph_kappa(s.pre.h, r, res.delta);
    res.kappa = s.kappa;
    if (s.kappa <= 0)
        throw StageError("uniform-weighting", "uniform scale nonpositive (kappa = " + to_string(s.kappa) + ")");
    sw.lap("enumerate");
    return s;
}

void require_smooth(const SmoothnessReport& sm, const Hypergraph& h, Regime regime) {
    if (regime != Regime::strict || sm.smooth()) return;
    std::string why;
    if (!sm.a1) why = "per-edge bound fails at edge " + tuple_text(h.edge(sm.a1_edge)) + " (" + to_string(sm.a1_max) + ")";
    else if (!sm.a2) why = "per-vertex bound fails at vertex " + std::to_string(sm.a2_vertex) + " (" + to_string(sm.a2_max) + ")";
    else why = "global bound fails (" + to_string(sm.a3_total) + ")";
    throw StageError("smoothness", "pi/kappa is not r-smooth: " + why);
}

}  // namespace

PreprocessResult preprocess(const Hypergraph& g, int r, const Rational& delta) {
    if (!g.is_graph()) throw InvalidArgument("preprocessing is defined for graphs");
    if (r < 2) throw InvalidArgument("r must be at least 2");
    const std::size_t n = g.n();
    const Rational floor_deg = (1 - delta) * rat(n);
    if (rat(g.min_degree()) < floor_deg)
        throw StageError("preprocess", "minimum degree " + std::to_string(g.min_degree()) + " below (1-delta)n = " +
                                           to_string(floor_deg));
    const Rational thr = floor_deg + (r - 1);
    std::vector<VertexSet> adj(n);
    std::vector<std::size_t> deg(n);
    VertexSet xs(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v] = g.adjacency(v);
        deg[v] = g.degree(v);
        if (rat(deg[v]) >= thr) xs.set(v);
    }

    PreprocessResult out;
    std::vector<Vertex> P;
    // Lexicographically least r-clique inside xs.
    auto search = [&](auto&& self, const VertexSet& cand) -> bool {
        if (static_cast<int>(P.size()) == r) return true;
        bool found = false;
        cand.for_each([&](Vertex v) {
            if (found) return;
            VertexSet next = cand;
            next &= adj[v];
            next.keep_above(v);
            if (static_cast<int>(next.count() + P.size() + 1) < r) return;
            P.push_back(v);
            if (self(self, next)) found = true;
            else P.pop_back();
        });
        return found;
    };
    for (;;) {
        P.clear();
        if (static_cast<int>(xs.count()) < r || !search(search, xs)) break;
        for (std::size_t a = 0; a < P.size(); ++a)
            for (std::size_t b = a + 1; b < P.size(); ++b) {
                adj[P[a]].reset(P[b]);
                adj[P[b]].reset(P[a]);
            }
        for (Vertex v : P) {
            deg[v] -= r - 1;
            if (rat(deg[v]) < thr) xs.reset(v);
        }
        out.removed.push_back(P);
    }

    std::vector<Vertex> flat;
    for (Vertex v = 0; v < n; ++v)
        adj[v].for_each([&](Vertex u) {
            if (u > v) {
                flat.push_back(v);
                flat.push_back(u);
            }
        });
    out.h = Hypergraph::from_flat(n, 2, std::move(flat));
    out.X = xs.to_vector();
    if (static_cast<std::size_t>(r) <= out.X.size() &&
        count_cliques(Hypergraph::from_flat(n, 2, [&] {
                          std::vector<Vertex> f;
                          for (Vertex v : out.X)
                              adj[v].for_each([&](Vertex u) {
                                  if (u > v && xs.test(u)) {
                                      f.push_back(v);
                                      f.push_back(u);
                                  }
                              });
                          return f;
                      }()),
                      r) > 0)
        throw StageError("preprocess", "H[X] still contains an r-clique");
    if (rat(out.X.size()) > delta * (r - 1) * rat(n))
        throw StageError("preprocess", "|X| = " + std::to_string(out.X.size()) + " exceeds delta(r-1)n");
    return out;
}

Rational hypergraph_delta(int k, int r) {
    Rational d = Rational(factorial(k)) / (Rational(BigInt(1) << (k + 3)) * k * k);
    for (int i = 0; i < 2 * k - 1; ++i) d /= r;
    return d;
}

PipelineResult decompose_hypergraph(const Hypergraph& g, int r, const PipelineOptions& opt) {
    const int k = g.k();
    if (r < k) throw InvalidArgument("r must be at least k");
    PipelineResult res;
    res.driver = "hypergraph";
    Stopwatch sw(res.timings);
    const std::size_t n = g.n(), m = g.edge_count();

    const Rational dh = hypergraph_delta(k, r);
    res.delta = observed_delta(g);
    bool codeg = n > 0 && res.delta <= dh;
    res.hypotheses.push_back({"codegree >= (1-delta)n at the hypergraph threshold", codeg});
    res.hypotheses.push_back({"n > 1/delta at the hypergraph threshold", rat(n) * dh > 1});

    auto family = all_cliques(g, r, opt.threads);
    res.k_r = BigInt(static_cast<unsigned long>(family.size()));
    sw.lap("enumerate");
    std::vector<Rational> values(family.size(), 0);
    if (m > 0) {
        auto ke = edge_clique_counts(g, family);
        BigInt total = 0;
        for (auto c : ke) total += BigInt(static_cast<unsigned long>(c));
        Rational kbar = Rational(total) / rat(m);
        res.kappa = kbar;
        if (kbar <= 0) throw StageError("uniform-weighting", "uniform scale nonpositive (no r-clique)");
        const Rational w = 1 / kbar;
        std::fill(values.begin(), values.end(), w);
        sw.lap("uniform");

        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < m; ++i)
            if (Rational(static_cast<unsigned long>(ke[i])) != kbar) todo.push_back(i);
        if (!todo.empty()) {
            if (r == k) throw StageError("hypergraph-correction", "corrections need r > k");
            auto coeffs = solve_alpha(r, k);
            BigInt L = 1;
            for (const auto& a : coeffs.alpha) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.get_den_mpz_t());
            std::vector<std::int64_t> num(k + 1);
            for (int j = 0; j <= k; ++j) {
                Rational s = coeffs.alpha[j] * Rational(L);
                if (!s.get_num().fits_slong_p()) throw Error("gadget coefficients exceed 64 bits");
                num[j] = s.get_num().get_si();
            }
            int t = resolve_threads(opt.threads, todo.size());
            // Host counts first: every scale is then known and the sum runs over one common denominator.
            std::vector<BigInt> hosts(todo.size());
            parallel_chunks(todo.size(), t, [&](int, std::size_t begin, std::size_t end) {
                for (std::size_t q = begin; q < end; ++q) hosts[q] = extensions(g, g.edge(todo[q]), r + k);
            });
            std::vector<Rational> scale(todo.size());
            BigInt D = 1;
            for (std::size_t q = 0; q < todo.size(); ++q) {
                if (hosts[q] == 0)
                    throw StageError("hypergraph-correction", "no gadget host clique for edge " + tuple_text(g.edge(todo[q])));
                scale[q] = (kbar - Rational(static_cast<unsigned long>(ke[todo[q]]))) * w / (Rational(hosts[q]) * Rational(L));
                const mpz_srcptr den = scale[q].get_den_mpz_t();
                if (!mpz_divisible_p(D.get_mpz_t(), den)) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den);
            }
            std::vector<BigInt> mult(todo.size());
            for (std::size_t q = 0; q < todo.size(); ++q) {
                mpz_divexact(mult[q].get_mpz_t(), D.get_mpz_t(), scale[q].get_den_mpz_t());
                mult[q] *= scale[q].get_num();
            }
            std::vector<std::vector<BigInt>> acc(t);
            parallel_chunks(todo.size(), t, [&](int wk, std::size_t begin, std::size_t end) {
                detail::CountScratch scratch(family.size());
                acc[wk].assign(family.size(), 0);
                detail::ScaledSum<BigInt, BigInt> sum(family.size(), acc[wk]);
                for (std::size_t q = begin; q < end; ++q) {
                    auto e = g.edge(todo[q]);
                    std::size_t h = detail::accumulate_hosts(g, family, e, r, num, detail::AcceptAll{}, scratch);
                    if (BigInt(static_cast<unsigned long>(h)) != hosts[q])
                        throw Error("host count mismatch for edge " + tuple_text(e));
                    sum.take(scratch, mult[q]);
                }
                sum.finish();
            });
            for (std::size_t c = 0; c < family.size(); ++c) {
                BigInt total = 0;
                for (int wk = 0; wk < t; ++wk) total += acc[wk][c];
                if (total == 0) continue;
                Rational v(total, D);
                v.canonicalize();
                values[c] += v;
            }
        }
        sw.lap("correction");
    }
    res.certificate = verify(g, r, Weighting::from_dense(family, values));
    sw.lap("verify");
    return res;
}

PipelineResult decompose_r2(const Hypergraph& g, int r, const PipelineOptions& opt) {
    PipelineResult res;
    res.driver = "r2";
    Stopwatch sw(res.timings);
    res.delta = working_delta(g, opt);
    const std::size_t n = g.n();
    res.hypotheses.push_back({"r >= 4", r >= 4});
    Rational dp = Rational(1, 100000) / (r * r);
    res.hypotheses.push_back({"min degree >= (1-1/10^5 r^2)n", g.is_graph() && rat(n - g.min_degree()) <= dp * rat(n)});
    res.hypotheses.push_back({"n >= 10^6 r^4", BigInt(static_cast<unsigned long>(n)) >= BigInt(1000000) * r * r * r * r});

    auto s = graph_setup(g, r, res, opt, sw);
    const auto& h = s.pre.h;
    auto ke = edge_clique_counts(h, s.family);
    std::vector<Rational> pi(h.edge_count());
    for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = Rational(static_cast<unsigned long>(ke[i])) - s.kappa;
    res.smoothness = smoothness_check(h, r, pi, s.kappa);
    require_smooth(*res.smoothness, h, opt.regime);
    sw.lap("smoothness");

    CorrectionReport corr;
    auto wp = smooth_correction_dense(h, r, s.family, pi, s.kappa, opt.regime, opt.threads, &corr);
    res.correction = corr;
    sw.lap("smooth-correction");

    const Rational u = 1 / s.kappa;
    for (auto& v : wp) v = u - v;
    res.certificate = verify(g, r, lift(s.family, wp, s.pre.removed));
    sw.lap("verify");
    return res;
}

PipelineResult decompose_r32(const Hypergraph& g, int r, const PipelineOptions& opt) {
    if (r <= 24 && !opt.force_full_machinery) {
        auto res = decompose_hypergraph(g, r, opt);
        res.hypotheses.insert(res.hypotheses.begin(), {"r <= 24: delegated to the hypergraph driver", true});
        return res;
    }
    PipelineResult res;
    res.driver = "r32";
    Stopwatch sw(res.timings);
    res.delta = working_delta(g, opt);
    const std::size_t n = g.n();
    res.hypotheses.push_back({"r >= 25", r >= 25});
    res.hypotheses.push_back({"min degree >= (1-1/10^4 r^{3/2})n", g.is_graph() && degree_above_three_halves(g, r, 10000)});
    res.hypotheses.push_back({"n >= 10^4 r^3", BigInt(static_cast<unsigned long>(n)) >= BigInt(10000) * r * r * r});
    if (r < 5) throw StageError("breakdown", "needs r >= 5 (got " + std::to_string(r) + ")");

    auto s = graph_setup(g, r, res, opt, sw);
    const auto& h = s.pre.h;
    res.breakdown = breakdown(h, r, res.delta, s.pre.X, opt.threads);
    const auto& bd = *res.breakdown;
    sw.lap("breakdown");

    std::vector<Rational> pi = bd.pi;
    std::vector<Rational> vt(n);
    for (Vertex x = 0; x < n; ++x) vt[x] = bd.gamma[x] + bd.sigma[x];
    if (opt.fold_vertex_terms)
        for (std::size_t i = 0; i < pi.size(); ++i) {
            auto e = h.edge(i);
            pi[i] += vt[e[0]] + vt[e[1]];
        }
    res.smoothness = smoothness_check(h, r, pi, s.kappa);
    require_smooth(*res.smoothness, h, opt.regime);
    sw.lap("smoothness");

    CorrectionReport corr;
    auto wp = smooth_correction_dense(h, r, s.family, pi, s.kappa, opt.regime, opt.threads, &corr);
    res.correction = corr;
    sw.lap("smooth-correction");

    std::vector<Rational> vsum(s.family.size(), 0);
    if (!opt.fold_vertex_terms) {
        std::vector<Vertex> todo;
        for (Vertex x = 0; x < n; ++x)
            if (vt[x] != 0) todo.push_back(x);
        res.vertex_gadgets = todo.size();
        if (!todo.empty()) {
            GadgetContext ctx(h, r, res.delta, s.pre.X, opt.regime, s.family, opt.threads);
            int t = resolve_threads(opt.threads, todo.size());
            std::vector<std::vector<Rational>> acc(t);
            parallel_chunks(todo.size(), t, [&](int wk, std::size_t begin, std::size_t end) {
                acc[wk].assign(s.family.size(), 0);
                for (std::size_t q = begin; q < end; ++q) {
                    Vertex x = todo[q];
                    auto xi = vertex_gadget_dense(ctx, x);
                    for (std::size_t c = 0; c < xi.xi.size(); ++c)
                        if (xi.xi[c] != 0) acc[wk][c] += vt[x] * xi.xi[c];
                }
            });
            for (int wk = 0; wk < t; ++wk)
                for (std::size_t c = 0; c < vsum.size(); ++c) vsum[c] += acc[wk][c];
        }
        sw.lap("vertex-gadgets");
    }

    const Rational u = 1 / s.kappa;
    for (std::size_t c = 0; c < wp.size(); ++c) wp[c] = u - wp[c] - vsum[c] / s.kappa;
    res.certificate = verify(g, r, lift(s.family, wp, s.pre.removed));
    sw.lap("verify");
    return res;
}

PipelineResult decompose_auto(const Hypergraph& g, int r, const PipelineOptions& opt) {
    return g.is_graph() ? decompose_r32(g, r, opt) : decompose_hypergraph(g, r, opt);
}

nlohmann::json to_json(const PipelineResult& res) {
    nlohmann::json j;
    j["driver"] = res.driver;
    j["delta"] = to_string(res.delta);
    j["kappa"] = to_string(res.kappa);
    j["k_r"] = to_string(res.k_r);
    j["removed_cliques"] = res.removed;
    j["x_size"] = res.x_size;
    j["vertex_gadgets"] = res.vertex_gadgets;
    auto& hy = j["hypotheses"] = nlohmann::json::array();
    for (const auto& h : res.hypotheses) hy.push_back({{"name", h.name}, {"holds", h.holds}});
    if (res.smoothness) {
        const auto& s = *res.smoothness;
        j["smoothness"] = {{"per_edge_max", to_string(s.a1_max)}, {"per_vertex_max", to_string(s.a2_max)},
                           {"total", to_string(s.a3_total)}, {"per_edge_ok", s.a1},
                           {"per_vertex_ok", s.a2}, {"total_ok", s.a3}};
    }
    if (res.correction) {
        const auto& c = *res.correction;
        j["correction"] = {{"admissible", c.admissible}, {"corrected_edges", c.corrected_edges},
                           {"min_hosts", c.min_hosts}, {"min_light_hosts", c.min_core_hosts},
                           {"max_abs_weight", to_string(c.max_abs_weight)}, {"within_half_over_kappa", c.bound_ok}};
    }
    if (res.breakdown) {
        const auto& b = *res.breakdown;
        j["breakdown"] = {{"max_sigma_ratio", to_string(b.max_sigma_ratio)}, {"sigma_bound", b.sigma_bound},
                          {"pi_bound_violations", b.pi_bound_violations},
                          {"stated_hypotheses", b.stated_hypotheses}, {"observed_hypotheses", b.observed_hypotheses}};
    }
    j["certificate"] = to_json(res.certificate);
    return j;
}

double decompose_hypergraph_float(const Hypergraph& g, int r, int threads) {
    const int k = g.k();
    auto family = all_cliques(g, r, threads);
    const std::size_t m = g.edge_count();
    if (m == 0 || family.empty()) return 0;
    auto ke = edge_clique_counts(g, family);
    double kbar = 0;
    for (auto c : ke) kbar += static_cast<double>(c);
    kbar /= static_cast<double>(m);
    std::vector<double> values(family.size(), 1.0 / kbar);
    if (r > k) {
        auto coeffs = solve_alpha(r, k);
        BigInt L = 1;
        for (const auto& a : coeffs.alpha) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.get_den_mpz_t());
        std::vector<std::int64_t> num(k + 1);
        for (int j = 0; j <= k; ++j) num[j] = Rational(coeffs.alpha[j] * Rational(L)).get_num().get_si();
        const double Ld = L.get_d();
        int t = resolve_threads(threads, m);
        std::vector<std::vector<double>> acc(t);
        parallel_chunks(m, t, [&](int wk, std::size_t begin, std::size_t end) {
            detail::CountScratch scratch(family.size());
            acc[wk].assign(family.size(), 0.0);
            for (std::size_t i = begin; i < end; ++i) {
                double c = (kbar - static_cast<double>(ke[i])) / kbar;
                if (c == 0) continue;
                std::size_t h = detail::accumulate_hosts(g, family, g.edge(i), r, num, detail::AcceptAll{}, scratch);
                if (h == 0) {
                    scratch.discard();
                    continue;
                }
                scratch.flush(c / (static_cast<double>(h) * Ld), acc[wk]);
            }
        });
        for (int wk = 0; wk < t; ++wk)
            for (std::size_t c = 0; c < values.size(); ++c) values[c] += acc[wk][c];
    }
    return *std::min_element(values.begin(), values.end());
}

}  // namespace fracdecomp
