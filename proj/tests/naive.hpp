#pragma once

// Brute-force reference implementations used as test oracles. Nothing here
// shares code with the library beyond the Hypergraph accessors.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/weighting.hpp"

namespace naive {

using fracdecomp::Clique;
using fracdecomp::Hypergraph;
using fracdecomp::Rational;
using fracdecomp::Vertex;

inline void subsets(const std::vector<Vertex>& pool, int size, const std::function<void(const Clique&)>& f) {
    if (size < 0 || static_cast<std::size_t>(size) > pool.size()) return;
    std::vector<int> pick(pool.size(), 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
        Clique c;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pick[i]) c.push_back(pool[i]);
        f(c);
    } while (std::next_permutation(pick.begin(), pick.end()));
}

inline std::vector<Vertex> all_vertices(const Hypergraph& g) {
    std::vector<Vertex> v(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) v[i] = static_cast<Vertex>(i);
    return v;
}

inline std::set<Clique> edge_set(const Hypergraph& g) {
    auto l = g.edge_list();
    return {l.begin(), l.end()};
}

inline bool is_clique(const std::set<Clique>& edges, int k, const Clique& c) {
    bool ok = true;
    subsets(c, k, [&](const Clique& e) { ok = ok && edges.count(e); });
    return ok;
}

// Lexicographic, like the library; subsets() visits in reverse-lex order so sort.
inline std::vector<Clique> cliques(const Hypergraph& g, int r) {
    auto edges = edge_set(g);
    std::vector<Clique> out;
    subsets(all_vertices(g), r, [&](const Clique& c) {
        if (is_clique(edges, g.k(), c)) out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains(const Clique& big, const Clique& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::size_t kappa(const Hypergraph& g, const Clique& S, int r) {
    std::size_t c = 0;
    for (const auto& K : cliques(g, r))
        if (contains(K, S)) ++c;
    return c;
}

inline std::vector<Rational> coverage(const Hypergraph& g, const fracdecomp::Weighting& w) {
    auto edges = g.edge_list();
    std::vector<Rational> out(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (const auto& [K, v] : w.entries())
            if (contains(K, edges[i])) out[i] += v;
    return out;
}

// max over edges |coverage(e) - target(e)|
inline Rational residual(const Hypergraph& g, const fracdecomp::Weighting& w,
                         const std::function<Rational(const Clique&)>& target) {
    auto edges = g.edge_list();
    auto cov = coverage(g, w);
    Rational worst = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Rational d = cov[i] - target(edges[i]);
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return worst;
}

// Coverage through the k-subsets of each weighted set. Sets that are not
// cliques are reported in bad.
inline std::map<Clique, Rational> coverage_by_subsets(const Hypergraph& g, const fracdecomp::Weighting& w,
                                                      std::size_t* bad = nullptr) {
    auto edges = edge_set(g);
    // Integer sums over the lcm of all denominators.
    fracdecomp::BigInt D = 1;
    for (const auto& [K, v] : w.entries()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), v.get_den_mpz_t());
    std::map<Clique, fracdecomp::BigInt> sums;
    for (const auto& e : edges) sums[e] = 0;
    for (const auto& [K, v] : w.entries()) {
        fracdecomp::BigInt x = D / v.get_den() * v.get_num();
        bool ok = true;
        subsets(K, g.k(), [&](const Clique& e) {
            auto it = sums.find(e);
            if (it == sums.end()) ok = false;
            else it->second += x;
        });
        if (!ok && bad) ++*bad;
    }
    std::map<Clique, Rational> out;
    for (const auto& [e, x] : sums) {
        Rational q(x, D);
        q.canonicalize();
        out[e] = q;
    }
    return out;
}

// Adjacency matrix of a graph.
inline std::vector<std::vector<char>> adjacency(const Hypergraph& g) {
    std::vector<std::vector<char>> a(g.n(), std::vector<char>(g.n(), 0));
    for (const auto& e : g.edge_list()) a[e[0]][e[1]] = a[e[1]][e[0]] = 1;
    return a;
}

// Number of r-cliques of a graph containing S (S must be a clique).
inline std::uint64_t cliques_containing(const std::vector<std::vector<char>>& a, const Clique& S, int r) {
    const int need = r - static_cast<int>(S.size());
    if (need < 0) return 0;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < a.size(); ++v) {
        bool ok = !std::count(S.begin(), S.end(), v);
        for (Vertex s : S) ok = ok && a[v][s];
        if (ok) pool.push_back(v);
    }
    std::uint64_t count = 0;
    std::vector<Vertex> cur;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == need) {
            ++count;
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (Vertex c : cur) ok = ok && a[pool[i]][c];
            if (!ok) continue;
            cur.push_back(pool[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return count;
}

inline std::uint64_t min_j_degree(const Hypergraph& g, int j) {
    auto edges = g.edge_list();
    std::uint64_t best = UINT64_MAX;
    subsets(all_vertices(g), j, [&](const Clique& S) {
        std::uint64_t d = 0;
        for (const auto& e : edges)
            if (contains(e, S)) ++d;
        best = std::min(best, d);
    });
    return best;
}

}  // namespace naive
