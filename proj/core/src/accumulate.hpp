#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "clique_search.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/types.hpp"

namespace fracdecomp::detail {

// Integer coefficients per clique index, flushed into an exact accumulator with a
// common rational scale.
class CountScratch {
public:
    explicit CountScratch(std::size_t m) : counts_(m, 0), marked_(m, 0) {}

    void add(std::size_t idx, std::int64_t c) {
        if (!marked_[idx]) {
            marked_[idx] = 1;
            touched_.push_back(static_cast<std::uint32_t>(idx));
        }
        counts_[idx] += c;
    }

    template <class Acc, class Scale>
    void flush(const Scale& scale, std::vector<Acc>& acc) {
        for (auto idx : touched_) {
            if (counts_[idx] != 0) acc[idx] += scale * Acc(static_cast<long>(counts_[idx]));
            counts_[idx] = 0;
            marked_[idx] = 0;
        }
        touched_.clear();
    }

    // acc[idx] += a * count, without rational arithmetic.
    void flush(const BigInt& a, std::vector<BigInt>& acc) {
        for (auto idx : touched_) {
            const std::int64_t c = counts_[idx];
            if (c > 0) mpz_addmul_ui(acc[idx].get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(c));
            else if (c < 0) mpz_submul_ui(acc[idx].get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-c));
            counts_[idx] = 0;
            marked_[idx] = 0;
        }
        touched_.clear();
    }

    void discard() {
        for (auto idx : touched_) {
            counts_[idx] = 0;
            marked_[idx] = 0;
        }
        touched_.clear();
    }

    // Moves the pending counts into other, leaving this scratch empty.
    void move_into(CountScratch& other) {
        for (auto idx : touched_) {
            if (counts_[idx] != 0) other.add(idx, counts_[idx]);
            counts_[idx] = 0;
            marked_[idx] = 0;
        }
        touched_.clear();
    }

    std::int64_t mass() const {
        std::int64_t m = 0;
        for (auto idx : touched_) m += counts_[idx] < 0 ? -counts_[idx] : counts_[idx];
        return m;
    }

    std::int64_t at(std::size_t idx) const { return counts_[idx]; }
    const std::vector<std::uint32_t>& touched() const { return touched_; }

private:
    std::vector<std::int64_t> counts_;
    std::vector<char> marked_;
    std::vector<std::uint32_t> touched_;
};

// Merges per-edge counts while the scale repeats; converts to Acc only when it changes.
template <class Acc, class Scale>
class ScaledSum {
public:
    ScaledSum(std::size_t m, std::vector<Acc>& acc) : group_(m), acc_(acc) {}

    void take(CountScratch& s, const Scale& scale) {
        std::int64_t mass = s.mass();
        if (open_ && (scale != scale_ || mass_ > limit - mass)) finish();
        scale_ = scale;
        open_ = true;
        mass_ += mass;
        s.move_into(group_);
    }

    void finish() {
        if (open_) group_.flush(scale_, acc_);
        open_ = false;
        mass_ = 0;
    }

private:
    static constexpr std::int64_t limit = std::int64_t{1} << 62;
    CountScratch group_;
    std::vector<Acc>& acc_;
    Scale scale_{};
    bool open_ = false;
    std::int64_t mass_ = 0;
};

struct SubClique {
    std::size_t index;
    std::size_t kept;  // vertices of the base kept in K
};

// Enumerates hosts A (r-sets disjoint from base with A ∪ base a clique). For each,
// the r-subsets K of J = A ∪ base are located in `family`; accept(J, subs) decides
// whether the host is used, and if so coeff[kept] is added to every K. Returns the
// number of accepted hosts.
template <class Accept>
std::size_t accumulate_hosts(const Hypergraph& g, const CliqueFamily& family, std::span<const Vertex> base, int r,
                             std::span<const std::int64_t> coeff, Accept&& accept, CountScratch& scratch) {
    Clique b(base.begin(), base.end());
    if (!is_clique(g, b)) return 0;
    const std::size_t jn = b.size() + static_cast<std::size_t>(r);
    // Positions of J kept in each r-subset, in the order for_each_removal visits them.
    std::vector<std::vector<std::uint32_t>> keeps;
    {
        std::vector<std::size_t> pos(jn);
        for (std::size_t i = 0; i < jn; ++i) pos[i] = i;
        for_each_subset(pos, static_cast<int>(b.size()), [&](const std::vector<std::size_t>& drop) {
            std::vector<std::uint32_t> keep;
            for (std::size_t i = 0, d = 0; i < jn; ++i) {
                if (d < drop.size() && drop[d] == i) ++d;
                else keep.push_back(static_cast<std::uint32_t>(i));
            }
            keeps.push_back(std::move(keep));
            return true;
        });
    }
    Extender ext(g);
    VertexSet cand = ext.initial_candidates(b);
    std::vector<Vertex> P = b;
    std::vector<SubClique> subs;
    Clique J(jn), K(r);
    std::vector<char> in_base(jn);
    std::size_t accepted = 0;
    ext.run(P, cand, r, [&](const std::vector<Vertex>& host) {
        const Vertex* a = host.data() + b.size();
        for (std::size_t i = 0, j = 0, w = 0; w < jn; ++w) {
            bool from_base = j < b.size() && (i == static_cast<std::size_t>(r) || b[j] < a[i]);
            J[w] = from_base ? b[j++] : a[i++];
            in_base[w] = from_base;
        }
        subs.clear();
        for (const auto& keep : keeps) {
            std::size_t kept = 0;
            for (std::size_t t = 0; t < keep.size(); ++t) {
                K[t] = J[keep[t]];
                kept += in_base[keep[t]];
            }
            std::size_t idx = family.find(K);
            if (idx == CliqueFamily::npos) throw std::logic_error("sub-clique missing from clique family");
            subs.push_back({idx, kept});
        }
        if (!accept(static_cast<const Clique&>(J), static_cast<const std::vector<SubClique>&>(subs))) return;
        ++accepted;
        for (const auto& s : subs)
            if (coeff[s.kept] != 0) scratch.add(s.index, coeff[s.kept]);
    });
    return accepted;
}

struct AcceptAll {
    bool operator()(const Clique&, const std::vector<SubClique>&) const { return true; }
};

}  // namespace fracdecomp::detail
