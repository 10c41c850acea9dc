#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fracdecomp {

using Vertex = std::uint32_t;

// Sorted ascending, no repeats.
using Clique = std::vector<Vertex>;

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(long n, long k);

// Falling factorial (n)_k.
BigInt falling(long n, long k);

BigInt factorial(long n);

}  // namespace fracdecomp
