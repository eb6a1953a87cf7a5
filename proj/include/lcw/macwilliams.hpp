#pragma once

#include "lcw/linear_code.hpp"

namespace lcw {

// Distribution of the dual code: B_j = q^-k sum_i A_i K_j(i), with K_j the
// Krawtchouk polynomials for (n, q). Only nonzero A_i cost anything, so
// sparse inputs of length 2^16 are cheap.
// Throws InexactTransform when some B_j is not an integer or the result is
// not a valid distribution; BadParams when counts.size() != n + 1.
WeightDistribution macwilliams(const WeightDistribution& wd);

// K_j(x) for j = 0..n at a single point x.
std::vector<BigInt> krawtchouk_column(std::size_t n, std::uint64_t q, std::size_t x);

}  // namespace lcw
