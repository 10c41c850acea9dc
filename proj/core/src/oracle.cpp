#include "fracdecomp/oracle.hpp"

#include <algorithm>

#include "combinatorics.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

CliqueFamily lp_family(const Hypergraph& g, int r, std::size_t cap) {
    if (r < 1 || static_cast<std::size_t>(r) > g.n()) return CliqueFamily(std::max(r, 1));
    try {
        return enumerate_cliques(g, r, {cap, 1});
    } catch (const CapExceeded&) {
        throw CapExceeded("LP oracle: more than " + std::to_string(cap) +
                          " clique variables; run the pipeline alone for this instance");
    }
}

// Edge rows touched by each clique.
std::vector<std::vector<std::size_t>> columns(const Hypergraph& g, const CliqueFamily& fam) {
    std::vector<std::vector<std::size_t>> cols(fam.size());
    for (std::size_t c = 0; c < fam.size(); ++c) {
        auto K = fam[c];
        std::vector<Vertex> kv(K.begin(), K.end());
        detail::for_each_subset(kv, g.k(), [&](const std::vector<Vertex>& e) {
            cols[c].push_back(g.edge_index(e));
            return true;
        });
    }
    return cols;
}

}  // namespace

LPResult lp_feasible(const Hypergraph& g, int r, const LPOptions& opt) {
    if (r < g.k()) throw InvalidArgument("r must be at least k");
    auto fam = lp_family(g, r, opt.cap);
    auto cols = columns(g, fam);
    const std::size_t m = g.edge_count(), N = fam.size();

    LPResult res;
    res.variables = N;
    // Artificial variable of row i has index N + i.
    std::vector<std::size_t> basis(m);
    std::vector<char> in_basis(N + m, 0);
    std::vector<std::vector<Rational>> binv(m, std::vector<Rational>(m, 0));
    std::vector<Rational> xb(m, 1), y(m), d(m);
    std::vector<std::size_t> nz;
    Rational tmp;
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = N + i;
        in_basis[N + i] = 1;
        binv[i][i] = 1;
    }
    // Crash start: an edge-disjoint clique packing, each clique basic in the row of its last edge,
    // so every row of [x_B | B^-1] starts lexicographically positive.
    std::vector<char> covered(m, 0);
    for (std::size_t c = 0; c < N; ++c) {
        const auto& col = cols[c];
        if (std::any_of(col.begin(), col.end(), [&](std::size_t e) { return covered[e]; })) continue;
        const std::size_t l = *std::max_element(col.begin(), col.end());
        for (auto e : col) {
            covered[e] = 1;
            if (e == l) continue;
            binv[e][l] = -1;
            xb[e] = 0;
        }
        in_basis[basis[l]] = 0;
        basis[l] = c;
        in_basis[c] = 1;
    }
    for (std::size_t j = 0; j < m; ++j) {
        y[j] = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= N) y[j] += binv[i][j];
    }
    Rational obj = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= N) obj += xb[i];

    while (obj != 0) {
        // Most negative reduced cost, lowest index on ties.
        std::size_t enter = N + m;
        Rational best_rc = 0, rc;
        for (std::size_t j = 0; j < N + m; ++j) {
            if (in_basis[j]) continue;
            if (j < N) {
                rc = 0;
                for (auto row : cols[j]) rc -= y[row];
            } else {
                rc = 1 - y[j - N];
            }
            if (rc < best_rc) {
                enter = j;
                best_rc = rc;
            }
        }
        if (enter == N + m) {
            res.feasible = false;
            res.dual_witness = y;
            if (!check_dual(g, r, y)) throw Error("LP oracle: dual witness failed verification");
            return res;
        }

        for (std::size_t i = 0; i < m; ++i) {
            d[i] = 0;
            if (enter < N)
                for (auto row : cols[enter]) d[i] += binv[i][row];
            else
                d[i] = binv[i][enter - N];
        }
        // Lexicographic ratio test: ties go to the smaller row of B^-1 / d.
        auto lex_less = [&](std::size_t a, std::size_t b) {
            for (std::size_t j = 0; j < m; ++j) {
                int c = cmp(binv[a][j] * d[b], binv[b][j] * d[a]);
                if (c != 0) return c < 0;
            }
            return false;
        };
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (d[i] <= 0) continue;
            Rational t = xb[i] / d[i];
            if (leave == m || t < best || (t == best && lex_less(i, leave))) {
                leave = i;
                best = t;
            }
        }
        if (leave == m) throw Error("LP oracle: unbounded phase-one direction");

        const Rational piv = d[leave];
        // y += (rc / pivot) * row of B^-1 before the pivot; the objective drops by |rc| * step.
        Rational f = best_rc / piv;
        for (std::size_t j = 0; j < m; ++j)
            if (binv[leave][j] != 0) y[j] += f * binv[leave][j];
        obj += best_rc * best;
        nz.clear();
        for (std::size_t j = 0; j < m; ++j)
            if (binv[leave][j] != 0) {
                binv[leave][j] /= piv;
                nz.push_back(j);
            }
        xb[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || d[i] == 0) continue;
            const Rational& f = d[i];
            for (auto j : nz) {
                mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), binv[leave][j].get_mpq_t());
                mpq_sub(binv[i][j].get_mpq_t(), binv[i][j].get_mpq_t(), tmp.get_mpq_t());
            }
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), xb[leave].get_mpq_t());
            mpq_sub(xb[i].get_mpq_t(), xb[i].get_mpq_t(), tmp.get_mpq_t());
        }
        in_basis[basis[leave]] = 0;
        in_basis[enter] = 1;
        basis[leave] = enter;
        ++res.iterations;
    }

    Weighting w(r);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < N && xb[i] != 0) w.set(fam.clique(basis[i]), xb[i]);
    if (!check_primal(g, r, w)) throw Error("LP oracle: primal witness failed verification");
    res.feasible = true;
    res.witness = std::move(w);
    return res;
}

bool check_primal(const Hypergraph& g, int r, const Weighting& w) {
    if (w.size() && w.r() != r) return false;
    for (const auto& [K, v] : w.entries())
        if (v < 0 || v > 1) return false;
    auto cov = edge_coverage(g, w);
    for (const auto& c : cov)
        if (c != 1) return false;
    return true;
}

bool check_dual(const Hypergraph& g, int r, const std::vector<Rational>& y) {
    if (y.size() != g.edge_count()) return false;
    Rational total = 0;
    for (const auto& v : y) total += v;
    if (total <= 0) return false;
    auto fam = r >= 1 && static_cast<std::size_t>(r) <= g.n() ? enumerate_cliques(g, r, {0, 1}) : CliqueFamily(1);
    auto cols = columns(g, fam);
    for (const auto& col : cols) {
        Rational s = 0;
        for (auto row : col) s += y[row];
        if (s > 0) return false;
    }
    return true;
}

nlohmann::json to_json(const Hypergraph& g, const LPResult& res) {
    nlohmann::json j;
    j["feasible"] = res.feasible;
    j["variables"] = res.variables;
    j["iterations"] = res.iterations;
    j["witness"] = res.witness ? to_json(*res.witness) : nlohmann::json(nullptr);
    if (res.dual_witness) {
        auto arr = nlohmann::json::array();
        for (std::size_t i = 0; i < res.dual_witness->size(); ++i) {
            const auto& v = (*res.dual_witness)[i];
            if (v == 0) continue;
            auto e = g.edge(i);
            arr.push_back({{"edge", std::vector<Vertex>(e.begin(), e.end())}, {"y", to_string(v)}});
        }
        j["dual_witness"] = arr;
    } else {
        j["dual_witness"] = nullptr;
    }
    return j;
}

}  // namespace fracdecomp
