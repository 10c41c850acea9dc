#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "combinatorics.hpp"
#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/vertex_set.hpp"

namespace fracdecomp::detail {

// Ordered extension of a partial clique P. The candidate set always holds exactly the
// vertices v (above the last chosen one) such that P ∪ {v} is a clique. Adding v
// intersects it with link(U ∪ {v}) for every (k-2)-subset U of P.
class Extender {
public:
    explicit Extender(const Hypergraph& g) : g_(g), k_(g.k()) {}

    // Vertices v outside S with S ∪ {v} a clique. S must itself be a clique.
    VertexSet initial_candidates(std::span<const Vertex> S) const {
        VertexSet cand = VertexSet::full(g_.n());
        for (Vertex s : S) cand.reset(s);
        if (S.size() + 1 >= static_cast<std::size_t>(k_)) {
            Clique sorted(S.begin(), S.end());
            std::sort(sorted.begin(), sorted.end());
            for_each_subset(sorted, k_ - 1, [&](const std::vector<Vertex>& W) {
                cand &= g_.link(W);
                return true;
            });
        }
        return cand;
    }

    // cand holds valid one-vertex extensions of P; v was just appended to P.
    void restrict_after_add(VertexSet& cand, std::span<const Vertex> P_before, Vertex v) const {
        cand.keep_above(v);
        if (k_ == 2) {
            cand &= g_.adjacency(v);
            return;
        }
        if (P_before.size() + 2 < static_cast<std::size_t>(k_)) return;
        Clique before(P_before.begin(), P_before.end());
        std::sort(before.begin(), before.end());
        Clique key(k_ - 1);
        for_each_subset(before, k_ - 2, [&](const std::vector<Vertex>& U) {
            std::size_t w = 0;
            bool placed = false;
            for (Vertex u : U) {
                if (!placed && v < u) { key[w++] = v; placed = true; }
                key[w++] = u;
            }
            if (!placed) key[w++] = v;
            cand &= g_.link(key);
            return true;
        });
    }

    // Calls leaf(P) for each way of adding `remaining` vertices from cand in
    // increasing order. P is restored on return. leaf may return false to stop.
    template <class Leaf>
    bool run(std::vector<Vertex>& P, const VertexSet& cand, int remaining, Leaf&& leaf) const {
        if (remaining == 0) return call(leaf, P);
        std::vector<VertexSet> levels(remaining, VertexSet(g_.n()));
        return step(P, cand, remaining, levels, leaf);
    }

    // Number of completions, counted with popcount at the last level.
    std::uint64_t count(std::vector<Vertex>& P, const VertexSet& cand, int remaining) const {
        if (remaining == 0) return 1;
        if (remaining == 1) return cand.count();
        std::vector<VertexSet> levels(remaining, VertexSet(g_.n()));
        return count_step(P, cand, remaining, levels);
    }

private:
    template <class Leaf>
    static bool call(Leaf& leaf, const std::vector<Vertex>& P) {
        if constexpr (std::is_same_v<decltype(leaf(P)), bool>) return leaf(P);
        else {
            leaf(P);
            return true;
        }
    }

    template <class Leaf>
    bool step(std::vector<Vertex>& P, const VertexSet& cand, int remaining, std::vector<VertexSet>& levels,
              Leaf& leaf) const {
        bool go = true;
        VertexSet& next = levels[remaining - 1];
        cand.for_each([&](Vertex v) {
            if (!go) return;
            P.push_back(v);
            if (remaining == 1) {
                go = call(leaf, P);
            } else {
                next = cand;
                restrict_after_add(next, std::span<const Vertex>(P.data(), P.size() - 1), v);
                if (next.count() + 1 >= static_cast<std::size_t>(remaining)) go = step(P, next, remaining - 1, levels, leaf);
            }
            P.pop_back();
        });
        return go;
    }

    std::uint64_t count_step(std::vector<Vertex>& P, const VertexSet& cand, int remaining,
                             std::vector<VertexSet>& levels) const {
        std::uint64_t total = 0;
        VertexSet& next = levels[remaining - 1];
        cand.for_each([&](Vertex v) {
            next = cand;
            restrict_after_add(next, P, v);
            if (remaining == 2) {
                total += next.count();
            } else {
                P.push_back(v);
                total += count_step(P, next, remaining - 1, levels);
                P.pop_back();
            }
        });
        return total;
    }

    const Hypergraph& g_;
    int k_;
};

// Calls f(K, kept) for each r-subset K of the sorted set J obtained by removing
// exactly |J| - r vertices; `kept` counts how many vertices of `base` survive.
// base must be a sorted subset of J.
template <class F>
void for_each_removal(std::span<const Vertex> J, std::span<const Vertex> base, std::size_t r, F&& f) {
    const std::size_t b = J.size() - r;
    std::vector<std::size_t> pos(J.size());
    for (std::size_t i = 0; i < J.size(); ++i) pos[i] = i;
    std::vector<char> in_base(J.size(), 0);
    for (std::size_t i = 0, j = 0; i < J.size() && j < base.size(); ++i)
        if (J[i] == base[j]) { in_base[i] = 1; ++j; }
    Clique K(r);
    for_each_subset(pos, b, [&](const std::vector<std::size_t>& drop) {
        std::size_t w = 0, d = 0, removed_base = 0;
        for (std::size_t i = 0; i < J.size(); ++i) {
            if (d < drop.size() && drop[d] == i) {
                removed_base += in_base[i];
                ++d;
                continue;
            }
            K[w++] = J[i];
        }
        f(static_cast<const Clique&>(K), base.size() - removed_base);
        return true;
    });
}

}  // namespace fracdecomp::detail
