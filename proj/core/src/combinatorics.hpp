#pragma once

#include <span>
#include <vector>

#include "fracdecomp/types.hpp"

namespace fracdecomp::detail {

// Calls f(subset) for every m-subset of `items`, in lexicographic order of positions.
// Returns false from f to stop early. `subset` is reused between calls.
template <class T, class F>
bool for_each_subset(std::span<const T> items, std::size_t m, F&& f) {
    const std::size_t n = items.size();
    if (m > n) return true;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    std::vector<T> subset(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) subset[i] = items[idx[i]];
        if (!f(static_cast<const std::vector<T>&>(subset))) return false;
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class T, class F>
bool for_each_subset(const std::vector<T>& items, std::size_t m, F&& f) {
    return for_each_subset(std::span<const T>(items), m, std::forward<F>(f));
}

// Sorted union of two sorted ranges.
inline Clique merge_sorted(std::span<const Vertex> a, std::span<const Vertex> b) {
    Clique out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) out.push_back(a[i++]);
        else out.push_back(b[j++]);
    }
    return out;
}

inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

}  // namespace fracdecomp::detail
