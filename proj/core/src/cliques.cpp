#include "fracdecomp/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "clique_search.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/parallel.hpp"

namespace fracdecomp {

namespace {

std::atomic<std::size_t> g_cap{0};

std::size_t cap_from_env() {
    if (const char* s = std::getenv("FRACDECOMP_CLIQUE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 100'000'000;
}

void check_sorted_subset(const Hypergraph& g, std::span<const Vertex> S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] >= g.n()) throw InvalidArgument("vertex " + std::to_string(S[i]) + " out of range");
        if (i && S[i] <= S[i - 1]) throw InvalidArgument("vertex set must be strictly increasing");
    }
}

Clique sorted_copy(std::span<const Vertex> S) {
    Clique c(S.begin(), S.end());
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace

std::size_t default_clique_cap() {
    std::size_t c = g_cap.load();
    if (c == 0) {
        c = cap_from_env();
        g_cap.store(c);
    }
    return c;
}

void set_default_clique_cap(std::size_t cap) { g_cap.store(cap); }

CliqueFamily::CliqueFamily(int r, std::vector<Vertex> flat) : r_(r), flat_(std::move(flat)) {
    if (r_ <= 0) throw InvalidArgument("clique size must be positive");
    if (flat_.size() % r_) throw InvalidArgument("flat clique storage has wrong length");
    build_index();
}

Clique CliqueFamily::clique(std::size_t i) const {
    auto c = (*this)[i];
    return Clique(c.begin(), c.end());
}

std::uint64_t CliqueFamily::hash(std::span<const Vertex> c) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (Vertex v : c) {
        h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
    }
    return h ^ (h >> 31);
}

void CliqueFamily::build_index() {
    std::size_t m = size();
    if (m >= 0xFFFFFFFFull) throw CapExceeded("clique family too large to index");
    std::size_t cap = 16;
    while (cap < 2 * m) cap <<= 1;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t h = hash((*this)[i]) & mask_;
        while (slots_[h]) h = (h + 1) & mask_;
        slots_[h] = static_cast<std::uint32_t>(i + 1);
    }
}

std::size_t CliqueFamily::find(std::span<const Vertex> sorted) const noexcept {
    if (slots_.empty() || sorted.size() != static_cast<std::size_t>(r_)) return npos;
    std::uint64_t h = hash(sorted) & mask_;
    while (auto s = slots_[h]) {
        auto c = (*this)[s - 1];
        if (std::equal(c.begin(), c.end(), sorted.begin())) return s - 1;
        h = (h + 1) & mask_;
    }
    return npos;
}

std::string CliqueFamily::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < size(); ++i) {
        auto c = (*this)[i];
        for (std::size_t t = 0; t < c.size(); ++t) out << (t ? " " : "") << c[t];
        out << '\n';
    }
    return out.str();
}

bool is_clique(const Hypergraph& g, std::span<const Vertex> sorted) {
    if (sorted.size() < static_cast<std::size_t>(g.k())) return true;
    Clique s(sorted.begin(), sorted.end());
    return detail::for_each_subset(s, g.k(), [&](const std::vector<Vertex>& e) { return g.has_edge(e); });
}

CliqueFamily enumerate_cliques(const Hypergraph& g, int r, const CliqueOptions& opt) {
    if (r < 1 || static_cast<std::size_t>(r) > g.n())
        throw InvalidArgument("clique size must satisfy 1 <= r <= n");
    const std::size_t cap = opt.cap ? opt.cap : default_clique_cap();
    const std::size_t n = g.n();
    detail::Extender ext(g);
    std::atomic<std::size_t> total{0};
    int threads = resolve_threads(opt.threads, n);
    std::vector<std::vector<Vertex>> parts(threads);
    parallel_chunks(n, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& out = parts[w];
        std::vector<Vertex> P;
        VertexSet all = VertexSet::full(n);
        for (std::size_t root = begin; root < end; ++root) {
            Vertex v = static_cast<Vertex>(root);
            VertexSet cand = all;
            ext.restrict_after_add(cand, {}, v);
            P.assign(1, v);
            ext.run(P, cand, r - 1, [&](const std::vector<Vertex>& K) {
                if (total.fetch_add(1) + 1 > cap)
                    throw CapExceeded("clique enumeration exceeded the cap of " + std::to_string(cap) +
                                      " (set FRACDECOMP_CLIQUE_CAP to raise it)");
                out.insert(out.end(), K.begin(), K.end());
            });
        }
    });
    std::vector<Vertex> flat;
    flat.reserve(total.load() * r);
    for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
    return CliqueFamily(r, std::move(flat));
}

BigInt count_cliques(const Hypergraph& g, int r, int threads) {
    if (r < 0) return 0;
    if (r < g.k()) return binomial(static_cast<long>(g.n()), r);
    if (static_cast<std::size_t>(r) > g.n()) return 0;
    const std::size_t n = g.n();
    detail::Extender ext(g);
    int t = resolve_threads(threads, n);
    std::vector<std::uint64_t> partial(t, 0);
    parallel_chunks(n, t, [&](std::size_t w, std::size_t begin, std::size_t end) {
        std::vector<Vertex> P;
        VertexSet all = VertexSet::full(n);
        for (std::size_t root = begin; root < end; ++root) {
            Vertex v = static_cast<Vertex>(root);
            VertexSet cand = all;
            ext.restrict_after_add(cand, {}, v);
            P.assign(1, v);
            partial[w] += ext.count(P, cand, r - 1);
        }
    });
    BigInt sum = 0;
    for (auto p : partial) sum += BigInt(static_cast<unsigned long>(p));
    return sum;
}

std::uint64_t extensions_u64(const Hypergraph& g, std::span<const Vertex> S_in, int r) {
    Clique S = sorted_copy(S_in);
    check_sorted_subset(g, S);
    if (static_cast<int>(S.size()) > r) throw InvalidArgument("|S| must not exceed r");
    if (!is_clique(g, S)) return 0;
    detail::Extender ext(g);
    VertexSet cand = ext.initial_candidates(S);
    return ext.count(S, cand, r - static_cast<int>(S.size()));
}

BigInt extensions(const Hypergraph& g, std::span<const Vertex> S, int r) {
    return BigInt(static_cast<unsigned long>(extensions_u64(g, S, r)));
}

std::vector<BigInt> count_cliques_by_intersection(const Hypergraph& g, int r, std::span<const Vertex> X_in) {
    Clique X = sorted_copy(X_in);
    check_sorted_subset(g, X);
    std::vector<BigInt> counts(r + 1, 0);
    if (r < 1) return counts;
    detail::Extender ext(g);
    VertexSet xs(g.n());
    for (Vertex x : X) xs.set(x);
    VertexSet outside = VertexSet::full(g.n());
    outside.subtract(xs);
    for (int t = 0; t <= r && t <= static_cast<int>(X.size()); ++t) {
        std::uint64_t total = 0;
        auto count_from = [&](const std::vector<Vertex>& Q) {
            Clique q = Q;
            VertexSet cand = ext.initial_candidates(q);
            cand &= outside;
            total += ext.count(q, cand, r - t);
        };
        std::vector<Vertex> P;
        ext.run(P, xs, t, count_from);
        counts[t] = BigInt(static_cast<unsigned long>(total));
    }
    return counts;
}

CliqueFamily restricted_family(const Hypergraph& g, int r, std::span<const Vertex> X_in, int t,
                               const CliqueOptions& opt) {
    Clique X = sorted_copy(X_in);
    check_sorted_subset(g, X);
    auto all = enumerate_cliques(g, r, opt);
    return all.filter([&](std::span<const Vertex> K) {
        return static_cast<int>(detail::intersection_size(K, X)) <= t;
    });
}

CliqueFamily host_sets(const Hypergraph& g, std::span<const Vertex> base_in, int r, const CliqueOptions& opt) {
    Clique base = sorted_copy(base_in);
    check_sorted_subset(g, base);
    if (r < 1) throw InvalidArgument("host size must be positive");
    const std::size_t cap = opt.cap ? opt.cap : default_clique_cap();
    std::vector<Vertex> flat;
    if (is_clique(g, base)) {
        detail::Extender ext(g);
        VertexSet cand = ext.initial_candidates(base);
        std::vector<Vertex> P = base;
        std::size_t found = 0;
        ext.run(P, cand, r, [&](const std::vector<Vertex>& J) {
            if (++found > cap) throw CapExceeded("host enumeration exceeded the clique cap");
            flat.insert(flat.end(), J.begin() + base.size(), J.end());
        });
    }
    return CliqueFamily(r, std::move(flat));
}

CliqueFamily extension_family_He(const Hypergraph& g, std::span<const Vertex> e, int r) {
    if (!g.is_graph()) throw InvalidArgument("H_e is defined for graphs");
    if (e.size() != 2 || !g.has_edge(sorted_copy(e))) throw InvalidArgument("e must be an edge");
    return host_sets(g, e, r);
}

WellDistributedReport well_distributed_check(const Hypergraph& g, int r, const CliqueFamily& family) {
    if (!g.is_graph()) throw InvalidArgument("well-distributedness is defined for graphs");
    WellDistributedReport rep;
    rep.k_r = count_cliques(g, r);
    rep.hosts.assign(g.edge_count(), 0);
    detail::Extender ext(g);
    parallel_chunks(g.edge_count(), 0, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<Vertex> P;
        Clique J;
        for (std::size_t i = begin; i < end; ++i) {
            auto e = g.edge(i);
            Clique base(e.begin(), e.end());
            VertexSet cand = ext.initial_candidates(base);
            P = base;
            std::uint64_t good = 0;
            ext.run(P, cand, r, [&](const std::vector<Vertex>& hostJ) {
                J = hostJ;
                std::sort(J.begin(), J.end());
                bool ok = true;
                detail::for_each_removal(J, base, r, [&](const Clique& K, std::size_t) {
                    if (ok && !family.contains(K)) ok = false;
                });
                good += ok;
            });
            rep.hosts[i] = good;
        }
    });
    rep.well_distributed = true;
    for (std::size_t i = 0; i < rep.hosts.size(); ++i) {
        if (rep.worst_edge == Hypergraph::npos || rep.hosts[i] < rep.hosts[rep.worst_edge]) rep.worst_edge = i;
        if (2 * BigInt(static_cast<unsigned long>(rep.hosts[i])) < rep.k_r) rep.well_distributed = false;
    }
    return rep;
}

}  // namespace fracdecomp
