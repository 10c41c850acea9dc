#include "fracdecomp/hypergraph.hpp"

#include <algorithm>
#include <limits>

#include "combinatorics.hpp"
#include "fracdecomp/errors.hpp"

namespace fracdecomp {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, int k, std::vector<Clique> edges) : n_(n), k_(k) {
    if (k < 2) throw InvalidArgument("uniformity must be at least 2");
    std::vector<Vertex> flat;
    flat.reserve(edges.size() * k);
    for (const auto& e : edges) {
        if (e.size() != static_cast<std::size_t>(k))
            throw InvalidArgument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
        flat.insert(flat.end(), e.begin(), e.end());
    }
    edges.clear();
    edges.shrink_to_fit();
    build(std::move(flat));
}

Hypergraph Hypergraph::from_flat(std::size_t n, int k, std::vector<Vertex> flat) {
    if (k < 2) throw InvalidArgument("uniformity must be at least 2");
    if (flat.size() % k) throw InvalidArgument("flat edge list length is not a multiple of k");
    Hypergraph g;
    g.n_ = n;
    g.k_ = k;
    g.build(std::move(flat));
    return g;
}

void Hypergraph::build(std::vector<Vertex> flat) {
    const std::size_t n = n_;
    const int k = k_;
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidArgument("too many vertices");
    const std::size_t m = flat.size() / k;
    for (std::size_t j = 0; j < m; ++j) {
        auto b = flat.begin() + j * k;
        std::sort(b, b + k);
        for (int i = 0; i < k; ++i) {
            if (b[i] >= n) throw InvalidArgument("vertex " + std::to_string(b[i]) + " out of range");
            if (i && b[i] == b[i - 1]) throw InvalidArgument("repeated vertex " + std::to_string(b[i]) + " in edge");
        }
    }
    auto tuple = [&](std::size_t j) { return std::span<const Vertex>(flat.data() + j * k, k); };
    std::vector<std::uint32_t> order(m);
    for (std::size_t j = 0; j < m; ++j) order[j] = static_cast<std::uint32_t>(j);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(tuple(a), tuple(b)); });
    for (std::size_t j = 1; j < m; ++j)
        if (std::ranges::equal(tuple(order[j]), tuple(order[j - 1]))) throw InvalidArgument("duplicate edge");
    flat_.resize(flat.size());
    for (std::size_t j = 0; j < m; ++j) std::copy_n(flat.begin() + order[j] * k, k, flat_.begin() + j * k);
    flat.clear();
    flat.shrink_to_fit();

    binom_.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (std::size_t m = 0; m <= n; ++m) {
        binom_[m][0] = 1;
        for (int i = 1; i <= k; ++i)
            binom_[m][i] = m == 0 ? 0 : binom_[m - 1][i - 1] + binom_[m - 1][i];
    }

    links_.assign(binom_[n][k - 1], VertexSet(n));
    std::vector<Vertex> sub(k - 1);
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        for (int drop = 0; drop < k; ++drop) {
            std::size_t w = 0;
            for (int t = 0; t < k; ++t)
                if (t != drop) sub[w++] = e[t];
            links_[colex_rank(sub)].set(e[drop]);
        }
    }
    if (k == 2) {
        degrees_.resize(n);
        for (std::size_t v = 0; v < n; ++v) degrees_[v] = links_[v].count();
    }
}

std::uint64_t Hypergraph::colex_rank(std::span<const Vertex> sorted) const noexcept {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom_[sorted[i]][i + 1];
    return r;
}

Clique Hypergraph::edge_clique(std::size_t i) const {
    auto e = edge(i);
    return Clique(e.begin(), e.end());
}

std::vector<Clique> Hypergraph::edge_list() const {
    std::vector<Clique> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) out.push_back(edge_clique(i));
    return out;
}

std::size_t Hypergraph::edge_index(std::span<const Vertex> sorted) const noexcept {
    if (sorted.size() != static_cast<std::size_t>(k_)) return npos;
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (lex_less(edge(mid), sorted)) lo = mid + 1;
        else hi = mid;
    }
    if (lo < edge_count() && std::equal(sorted.begin(), sorted.end(), edge(lo).begin())) return lo;
    return npos;
}

std::size_t Hypergraph::edge_index(Vertex a, Vertex b) const noexcept {
    if (a > b) std::swap(a, b);
    Vertex e[2] = {a, b};
    return edge_index(std::span<const Vertex>(e, 2));
}

const VertexSet& Hypergraph::link(std::span<const Vertex> sorted) const {
    if (sorted.size() != static_cast<std::size_t>(k_ - 1)) throw InvalidArgument("link needs a (k-1)-set");
    return links_[colex_rank(sorted)];
}

std::size_t Hypergraph::min_degree() const noexcept {
    if (k_ != 2 || n_ == 0) return 0;
    return *std::min_element(degrees_.begin(), degrees_.end());
}

namespace {

void check_subset(std::span<const Vertex> S, std::size_t n, int k) {
    if (S.size() >= static_cast<std::size_t>(k)) throw InvalidArgument("subset must have fewer than k vertices");
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] >= n) throw InvalidArgument("vertex " + std::to_string(S[i]) + " out of range");
        if (i && S[i] <= S[i - 1]) throw InvalidArgument("subset must be strictly increasing");
    }
}

std::vector<Vertex> complement_of(std::span<const Vertex> S, std::size_t n) {
    std::vector<Vertex> rest;
    rest.reserve(n - S.size());
    std::size_t j = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (j < S.size() && S[j] == v) { ++j; continue; }
        rest.push_back(v);
    }
    return rest;
}

}  // namespace

std::uint64_t Hypergraph::degree_of(std::span<const Vertex> S) const {
    check_subset(S, n_, k_);
    std::size_t extra = k_ - 1 - S.size();
    if (extra == 0) return link(S).count();
    auto rest = complement_of(S, n_);
    std::uint64_t total = 0;
    detail::for_each_subset(rest, extra, [&](const std::vector<Vertex>& add) {
        Clique T = detail::merge_sorted(S, add);
        total += links_[colex_rank(T)].count();
        return true;
    });
    // each edge through S is counted once per (k-1)-subset containing S
    return total / (k_ - S.size());
}

std::vector<Clique> Hypergraph::neighborhood(std::span<const Vertex> S) const {
    check_subset(S, n_, k_);
    std::vector<Clique> out;
    auto rest = complement_of(S, n_);
    detail::for_each_subset(rest, k_ - S.size(), [&](const std::vector<Vertex>& T) {
        if (has_edge(detail::merge_sorted(S, T))) out.push_back(T);
        return true;
    });
    return out;
}

std::vector<Clique> Hypergraph::neighborhood_complement(std::span<const Vertex> S) const {
    check_subset(S, n_, k_);
    std::vector<Clique> out;
    auto rest = complement_of(S, n_);
    if (k_ == 2 && S.size() == 1) {
        non_neighbors(S[0]).for_each([&](Vertex v) { out.push_back({v}); });
        return out;
    }
    detail::for_each_subset(rest, k_ - S.size(), [&](const std::vector<Vertex>& T) {
        if (!has_edge(detail::merge_sorted(S, T))) out.push_back(T);
        return true;
    });
    return out;
}

VertexSet Hypergraph::non_neighbors(Vertex x) const {
    if (k_ != 2) throw InvalidArgument("non_neighbors is defined for graphs");
    VertexSet s = VertexSet::full(n_);
    s.subtract(links_[x]);
    return s;
}

DegreeProfile Hypergraph::min_j_degree(int j) const {
    if (j < 1 || j > k_ - 1) throw InvalidArgument("j must lie in 1..k-1");
    DegreeProfile best;
    best.j = j;
    best.min_degree = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> all(n_);
    for (std::size_t v = 0; v < n_; ++v) all[v] = static_cast<Vertex>(v);
    detail::for_each_subset(all, j, [&](const std::vector<Vertex>& S) {
        auto d = degree_of(S);
        if (d < best.min_degree) {
            best.min_degree = d;
            best.arg_min = S;
        }
        return true;
    });
    if (best.arg_min.empty()) best.min_degree = 0;
    return best;
}

}  // namespace fracdecomp
