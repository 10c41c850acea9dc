#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fracdecomp/types.hpp"
#include "fracdecomp/vertex_set.hpp"

namespace fracdecomp {

struct DegreeProfile {
    int j = 0;
    std::uint64_t min_degree = 0;
    Clique arg_min;  // lexicographically least minimiser
};

// k-uniform hypergraph on vertices 0..n-1. Immutable after construction.
// Edges are stored sorted (each tuple ascending, tuples lexicographic), and the link
// of every (k-1)-subset is kept as a bitset indexed by colex rank. For graphs the
// link of {v} is the adjacency of v.
class Hypergraph {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Hypergraph() = default;
    // Validates and canonicalises. Throws InvalidArgument on repeated vertices,
    // out-of-range ids, wrong arity or duplicate edges.
    Hypergraph(std::size_t n, int k, std::vector<Clique> edges);
    // Same validation; `flat` holds the edges back to back, k vertices each.
    static Hypergraph from_flat(std::size_t n, int k, std::vector<Vertex> flat);

    std::size_t n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    bool is_graph() const noexcept { return k_ == 2; }
    std::size_t edge_count() const noexcept { return k_ ? flat_.size() / k_ : 0; }

    std::span<const Vertex> edge(std::size_t i) const noexcept {
        return {flat_.data() + i * k_, static_cast<std::size_t>(k_)};
    }
    Clique edge_clique(std::size_t i) const;
    std::vector<Clique> edge_list() const;

    // Index of a sorted k-tuple in the canonical edge order, or npos.
    std::size_t edge_index(std::span<const Vertex> sorted) const noexcept;
    bool has_edge(std::span<const Vertex> sorted) const noexcept { return edge_index(sorted) != npos; }
    std::size_t edge_index(Vertex a, Vertex b) const noexcept;  // graphs, any order

    // Vertices v with sorted ∪ {v} an edge; sorted has size k-1.
    const VertexSet& link(std::span<const Vertex> sorted) const;
    const VertexSet& adjacency(Vertex v) const { return links_[v]; }
    bool adjacent(Vertex a, Vertex b) const noexcept { return links_[a].test(b); }

    // Graph degree d(v).
    std::size_t degree(Vertex v) const noexcept { return degrees_[v]; }
    std::size_t min_degree() const noexcept;

    // Number of edges containing S, |S| <= k-1.
    std::uint64_t degree_of(std::span<const Vertex> sorted) const;

    // N(S): (k-|S|)-sets T disjoint from S with S ∪ T an edge.
    std::vector<Clique> neighborhood(std::span<const Vertex> S) const;
    // N^c(S): (k-|S|)-subsets of V \ S not in N(S). For graphs with |S| = 1 the
    // set also contains the vertex itself, so |N(x)| + |N^c(x)| = n.
    std::vector<Clique> neighborhood_complement(std::span<const Vertex> S) const;
    // Graph non-neighbourhood N^c(x), including x.
    VertexSet non_neighbors(Vertex x) const;

    // δ_j(G); 1 <= j <= k-1.
    DegreeProfile min_j_degree(int j) const;

    std::uint64_t colex_rank(std::span<const Vertex> sorted) const noexcept;

    bool operator==(const Hypergraph& o) const noexcept {
        return n_ == o.n_ && k_ == o.k_ && flat_ == o.flat_;
    }

private:
    void build(std::vector<Vertex> flat);

    std::size_t n_ = 0;
    int k_ = 0;
    std::vector<Vertex> flat_;
    std::vector<VertexSet> links_;
    std::vector<std::size_t> degrees_;
    // binom_[m][i] = C(m, i) for i <= k.
    std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace fracdecomp
