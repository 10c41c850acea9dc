#include "fracdecomp/generators.hpp"

#include <cstdio>
#include <random>

#include "combinatorics.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/io.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

std::vector<Vertex> iota_vertices(std::size_t n) {
    std::vector<Vertex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
    return v;
}

std::uint64_t colex(const std::vector<Vertex>& s) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) rank += binomial(s[i], static_cast<long>(i + 1)).get_ui();
    return rank;
}

// Uniform in [0, bound) by rejection, so the stream is fixed by mt19937_64 alone.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

}  // namespace

Hypergraph gen_complete(std::size_t n, int k) {
    if (k < 1 || n < static_cast<std::size_t>(k)) throw InvalidArgument("gen_complete needs n >= k >= 1");
    std::vector<Vertex> flat;
    detail::for_each_subset(iota_vertices(n), k, [&](const std::vector<Vertex>& e) {
        flat.insert(flat.end(), e.begin(), e.end());
        return true;
    });
    return Hypergraph::from_flat(n, k, std::move(flat));
}

Hypergraph gen_lower_bound_family(int r, int s) {
    if (r < 3 || s < 1) throw InvalidArgument("gen_lower_bound_family needs r >= 3, s >= 1");
    const std::size_t m = 2 * static_cast<std::size_t>(s) * (r + 1);
    const std::size_t classes = r - 1, n = classes * m;
    auto inner = [&](std::size_t a, std::size_t b) {
        std::size_t d = (b + m - a) % m;
        std::size_t off = std::min(d, m - d);
        return off == m / 2 || (off >= 1 && off <= static_cast<std::size_t>(2 * s - 1));
    };
    std::vector<Vertex> flat;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (u / m != v / m || inner(u % m, v % m)) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
    return Hypergraph::from_flat(n, 2, std::move(flat));
}

Hypergraph gen_random_min_degree(std::size_t n, int k, const Rational& delta, std::uint64_t seed) {
    if (delta <= 0 || delta >= 1) throw InvalidArgument("gen_random_min_degree needs 0 < delta < 1");
    if (k < 2 || n < static_cast<std::size_t>(k)) throw InvalidArgument("gen_random_min_degree needs n >= k >= 2");
    Rational bound = (1 - delta) * Rational(static_cast<unsigned long>(n));
    BigInt need = bound.get_num() / bound.get_den();
    if (need * bound.get_den() != bound.get_num()) need += 1;

    std::vector<std::vector<Vertex>> edges;
    detail::for_each_subset(iota_vertices(n), k, [&](const std::vector<Vertex>& e) {
        edges.push_back(e);
        return true;
    });
    std::vector<std::uint64_t> codeg(binomial(static_cast<long>(n), k - 1).get_ui(), n - k + 1);
    std::mt19937_64 rng(seed);
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[draw(rng, i)]);

    std::vector<char> keep(edges.size(), 1);
    std::vector<std::uint64_t> ranks(k);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        bool ok = true;
        for (int drop = 0; drop < k; ++drop) {
            std::vector<Vertex> s;
            for (int j = 0; j < k; ++j)
                if (j != drop) s.push_back(e[j]);
            ranks[drop] = colex(s);
            if (BigInt(static_cast<unsigned long>(codeg[ranks[drop]] - 1)) < need) ok = false;
        }
        if (!ok) continue;
        keep[i] = 0;
        for (auto rk : ranks) --codeg[rk];
    }
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (keep[i]) flat.insert(flat.end(), edges[i].begin(), edges[i].end());
    return Hypergraph::from_flat(n, k, std::move(flat));
}

Hypergraph gen_k4_minus_edge() {
    return Hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Hypergraph gen_complete_minus_matching(std::size_t n) {
    if (n % 2) throw InvalidArgument("gen_complete_minus_matching needs even n");
    std::vector<Vertex> flat;
    flat.reserve(n * (n - 2));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
    return Hypergraph::from_flat(n, 2, std::move(flat));
}

Hypergraph generate(const GenSpec& spec) {
    if (spec.family == "complete") return gen_complete(spec.n, spec.k);
    if (spec.family == "lower-bound") return gen_lower_bound_family(spec.r, spec.s);
    if (spec.family == "random") return gen_random_min_degree(spec.n, spec.k, spec.delta, spec.seed);
    if (spec.family == "k4-minus-edge") return gen_k4_minus_edge();
    if (spec.family == "complete-minus-matching") return gen_complete_minus_matching(spec.n);
    throw InvalidArgument("unknown generator family '" + spec.family + "'");
}

std::uint64_t edge_hash(const Hypergraph& g) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : save_text(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

nlohmann::json manifest(const GenSpec& spec, const Hypergraph& g) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(edge_hash(g)));
    return {{"family", spec.family},
            {"params", {{"n", spec.n}, {"k", spec.k}, {"r", spec.r}, {"s", spec.s}, {"delta", to_string(spec.delta)}}},
            {"seed", spec.seed},
            {"n", g.n()},
            {"k", g.k()},
            {"edges", g.edge_count()},
            {"edge_hash", hex}};
}

}  // namespace fracdecomp
