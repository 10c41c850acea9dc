#include "fracdecomp/vertex_set.hpp"

namespace fracdecomp {

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (n % 64) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

void VertexSet::clear() noexcept {
    for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

void VertexSet::keep_above(Vertex v) noexcept {
    std::size_t w = v >> 6;
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
    if (w < words_.size()) {
        unsigned b = v & 63;
        words_[w] &= b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t intersection_count(const VertexSet& a, const VertexSet& b) noexcept {
    std::size_t c = 0;
    const auto* x = a.data();
    const auto* y = b.data();
    for (std::size_t i = 0; i < a.word_count(); ++i) c += std::popcount(x[i] & y[i]);
    return c;
}

}  // namespace fracdecomp
