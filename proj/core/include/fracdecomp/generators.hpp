#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"

namespace fracdecomp {

// K_n^(k).
Hypergraph gen_complete(std::size_t n, int k);

// r-1 classes of size m = 2s(r+1), complete between classes, and a (4s-1)-regular
// circulant inside each class (offsets ±1..±(2s-1) and m/2). Every K_r uses an
// intra-class edge. Requires r >= 3, s >= 1.
Hypergraph gen_lower_bound_family(int r, int s);

// Deletes edges of K_n^(k) in seeded random order, skipping any deletion that would
// push δ_{k-1} below ceil((1-delta)n). Requires 0 < delta < 1.
Hypergraph gen_random_min_degree(std::size_t n, int k, const Rational& delta, std::uint64_t seed);

// Vertices 0..3, every pair except {2,3}.
Hypergraph gen_k4_minus_edge();

// K_n minus the matching {0,1},{2,3},...; n even.
Hypergraph gen_complete_minus_matching(std::size_t n);

struct GenSpec {
    std::string family;  // complete | lower-bound | random | k4-minus-edge | complete-minus-matching
    std::size_t n = 0;
    int k = 2;
    int r = 3;
    int s = 1;
    Rational delta = 0;
    std::uint64_t seed = 0;
};

Hypergraph generate(const GenSpec& spec);

// FNV-1a 64 over the text serialisation.
std::uint64_t edge_hash(const Hypergraph& g);

// {"family", "params", "seed", "n", "k", "edges", "edge_hash"}.
nlohmann::json manifest(const GenSpec& spec, const Hypergraph& g);

}  // namespace fracdecomp
