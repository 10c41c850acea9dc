#pragma once

#include <span>
#include <string>
#include <vector>

#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"

namespace fracdecomp {

// Maximum number of cliques a single enumeration may materialise. Reads
// FRACDECOMP_CLIQUE_CAP on first use; defaults to 10^8.
std::size_t default_clique_cap();
void set_default_clique_cap(std::size_t cap);

struct CliqueOptions {
    std::size_t cap = 0;  // 0: default_clique_cap()
    int threads = 0;      // 0: default_threads()
};

// Set of r-cliques in lexicographic order, stored flat, with a hash index.
class CliqueFamily {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    CliqueFamily() = default;
    explicit CliqueFamily(int r) : r_(r) {}
    // `flat` holds size*r vertices; tuples must be sorted and lexicographically ordered.
    CliqueFamily(int r, std::vector<Vertex> flat);

    int r() const noexcept { return r_; }
    std::size_t size() const noexcept { return r_ ? flat_.size() / r_ : 0; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const Vertex> operator[](std::size_t i) const noexcept {
        return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
    }
    Clique clique(std::size_t i) const;
    const std::vector<Vertex>& flat() const noexcept { return flat_; }

    std::size_t find(std::span<const Vertex> sorted) const noexcept;
    bool contains(std::span<const Vertex> sorted) const noexcept { return find(sorted) != npos; }

    template <class Pred>
    CliqueFamily filter(Pred&& keep) const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (keep((*this)[i])) out.insert(out.end(), flat_.begin() + i * r_, flat_.begin() + (i + 1) * r_);
        return CliqueFamily(r_, std::move(out));
    }

    // One sorted tuple per line.
    std::string to_text() const;

    bool operator==(const CliqueFamily& o) const noexcept { return r_ == o.r_ && flat_ == o.flat_; }

private:
    void build_index();
    std::uint64_t hash(std::span<const Vertex> c) const noexcept;

    int r_ = 0;
    std::vector<Vertex> flat_;
    std::vector<std::uint32_t> slots_;  // index+1, 0 = empty
    std::uint64_t mask_ = 0;
};

// All r-cliques, lexicographic. Requires 1 <= r <= n. Throws CapExceeded.
CliqueFamily enumerate_cliques(const Hypergraph& g, int r, const CliqueOptions& opt = {});

// k_r: 0 for r < 0, binom(n, r) for 0 <= r < k, the enumerated count for r >= k.
BigInt count_cliques(const Hypergraph& g, int r, int threads = 0);

// True when every k-subset of the sorted set is an edge.
bool is_clique(const Hypergraph& g, std::span<const Vertex> sorted);

// κ_S^(r): number of r-cliques containing S. 0 if S is not a clique.
BigInt extensions(const Hypergraph& g, std::span<const Vertex> S, int r);
std::uint64_t extensions_u64(const Hypergraph& g, std::span<const Vertex> S, int r);

// counts[t] = |{K in K_r : |V(K) ∩ X| = t}| for t = 0..r, without enumerating K_r.
std::vector<BigInt> count_cliques_by_intersection(const Hypergraph& g, int r, std::span<const Vertex> X);

// {K in K_r : |V(K) ∩ X| <= t}.
CliqueFamily restricted_family(const Hypergraph& g, int r, std::span<const Vertex> X, int t,
                               const CliqueOptions& opt = {});

// r-sets A disjoint from `base` with A ∪ base a clique, lexicographic.
CliqueFamily host_sets(const Hypergraph& g, std::span<const Vertex> base, int r, const CliqueOptions& opt = {});

// H_e: r-sets A with G[A ∪ V(e)] complete on r+2 vertices.
CliqueFamily extension_family_He(const Hypergraph& g, std::span<const Vertex> e, int r);

struct WellDistributedReport {
    bool well_distributed = false;
    BigInt k_r;
    // hosts[i]: number of r-sets A disjoint from edge i with every r-subset of A ∪ e in the family.
    std::vector<std::uint64_t> hosts;
    std::size_t worst_edge = Hypergraph::npos;  // edge with the fewest hosts
};

// Graphs only. Verdict: every edge has at least k_r/2 hosts.
WellDistributedReport well_distributed_check(const Hypergraph& g, int r, const CliqueFamily& family);

}  // namespace fracdecomp
