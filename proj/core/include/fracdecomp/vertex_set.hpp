#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fracdecomp/types.hpp"

namespace fracdecomp {

// Fixed-universe bitset over vertices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(std::size_t n);

    std::size_t universe() const noexcept { return n_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }
    std::uint64_t* data() noexcept { return words_.data(); }

    bool test(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() noexcept;

    std::size_t count() const noexcept;
    bool empty() const noexcept;

    VertexSet& operator&=(const VertexSet& o) noexcept;
    VertexSet& operator|=(const VertexSet& o) noexcept;
    // Remove every element of o.
    VertexSet& subtract(const VertexSet& o) noexcept;
    // Keep only elements strictly greater than v.
    void keep_above(Vertex v) noexcept;

    std::vector<Vertex> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// popcount(a & b) without materialising the intersection.
std::size_t intersection_count(const VertexSet& a, const VertexSet& b) noexcept;

}  // namespace fracdecomp
