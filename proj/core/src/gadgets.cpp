#include "fracdecomp/gadgets.hpp"

#include <algorithm>

#include "clique_search.hpp"
#include "fracdecomp/errors.hpp"

namespace fracdecomp {

BigInt alpha_matrix_entry(int r, int k, int i, int j) {
    if (j < i) return 0;
    return binomial(k - i, j - i) * binomial(r - k + i, j);
}

GadgetCoefficients solve_alpha(int r, int k) {
    if (k < 2 || r <= k) throw InvalidArgument("solve_alpha needs r > k >= 2");
    GadgetCoefficients c{r, k, std::vector<Rational>(k + 1)};
    c.alpha[k] = Rational(1, 1) / Rational(alpha_matrix_entry(r, k, k, k));
    for (int i = k - 1; i >= 0; --i) {
        Rational s = 0;
        for (int j = i + 1; j <= k; ++j) s += Rational(alpha_matrix_entry(r, k, i, j)) * c.alpha[j];
        c.alpha[i] = -s / Rational(alpha_matrix_entry(r, k, i, i));
    }
    return c;
}

Rational alpha_bound(int r, int k, int i) {
    BigInt num = factorial(k - i);
    num <<= (k - i);
    return Rational(num) / Rational(binomial(r - k + i, i));
}

Weighting basic_edge_gadget(const Hypergraph& g, std::span<const Vertex> J_in, std::span<const Vertex> e_in,
                            const GadgetCoefficients& coeffs) {
    Clique J(J_in.begin(), J_in.end()), e(e_in.begin(), e_in.end());
    std::sort(J.begin(), J.end());
    std::sort(e.begin(), e.end());
    const int r = coeffs.r, k = coeffs.k;
    if (k != g.k()) throw InvalidArgument("coefficients built for a different uniformity");
    if (static_cast<int>(J.size()) != r + k) throw InvalidArgument("J must have k + r vertices");
    if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw InvalidArgument("J has repeated vertices");
    if (!is_clique(g, J)) throw InvalidArgument("J is not a clique");
    if (static_cast<int>(e.size()) != k || !std::includes(J.begin(), J.end(), e.begin(), e.end()))
        throw InvalidArgument("e must be an edge of J");
    Weighting w(r);
    detail::for_each_removal(J, e, r, [&](const Clique& K, std::size_t kept) { w.add(K, coeffs.alpha[kept]); });
    return w;
}

std::vector<std::int64_t> edge_phi_numerators(int r) {
    return {static_cast<std::int64_t>(r - 2) * (r - 1), -static_cast<std::int64_t>(r - 2), 2};
}

Weighting averaged_edge_gadget(const Hypergraph& g, std::span<const Vertex> e_in, int r, const CliqueFamily& H) {
    if (!g.is_graph()) throw InvalidArgument("averaged edge gadgets are defined for graphs");
    if (r < 3) throw InvalidArgument("averaged edge gadgets need r >= 3");
    Clique e(e_in.begin(), e_in.end());
    std::sort(e.begin(), e.end());
    if (e.size() != 2 || !g.has_edge(e)) throw InvalidArgument("e must be an edge");
    if (H.empty()) throw StageError("edge-gadget", "host family is empty");
    if (H.r() != r) throw InvalidArgument("host family has the wrong set size");
    auto num = edge_phi_numerators(r);
    std::map<Clique, std::int64_t> counts;
    for (std::size_t h = 0; h < H.size(); ++h) {
        auto A = H[h];
        if (detail::intersection_size(A, e) != 0) throw InvalidArgument("host set meets e");
        Clique J = detail::merge_sorted(A, e);
        if (!is_clique(g, J)) throw InvalidArgument("host set does not complete e to a clique");
        detail::for_each_removal(J, e, r, [&](const Clique& K, std::size_t kept) { counts[K] += num[kept]; });
    }
    Rational scale(1, 1);
    scale /= Rational(static_cast<long>(r) * (r - 1)) * Rational(static_cast<unsigned long>(H.size()));
    Weighting w(r);
    for (const auto& [K, c] : counts) w.add(K, scale * Rational(static_cast<long>(c)));
    return w;
}

const char* to_string(Regime r) { return r == Regime::strict ? "strict" : "relaxed"; }

Regime parse_regime(const std::string& s) {
    if (s == "strict") return Regime::strict;
    if (s == "relaxed") return Regime::relaxed;
    throw InvalidArgument("unknown regime '" + s + "' (expected strict or relaxed)");
}

}  // namespace fracdecomp
