#pragma once

#include <cstdint>
#include <vector>

#include "lcw/linear_code.hpp"
#include "lcw/polynomial.hpp"

namespace lcw {

inline constexpr std::uint64_t kDefaultTutteBudget = std::uint64_t{1} << 20;

// counts[s][r]: number of column subsets of size s and rank r, over all 2^n
// subsets including the empty set and E.
struct SubsetRankTally {
  std::size_t n = 0;
  std::size_t rank = 0;  // rk(E)
  std::vector<std::vector<std::uint64_t>> counts;
};

// Depth-first walk of the subset lattice with an incremental echelon basis.
// Throws BudgetExceeded when 2^n > budget.
SubsetRankTally subset_rank_tally(const LinearCode& code,
                                  std::uint64_t budget = kDefaultTutteBudget);

// T(x, y) = sum_A (x-1)^(r - rk A) (y-1)^(|A| - rk A)
Bivariate tutte_from_tally(const SubsetRankTally& t);
Bivariate tutte_polynomial(const LinearCode& code, std::uint64_t budget = kDefaultTutteBudget);

// W(x, y) = y^(n-k) (x-y)^k T((x+(q-1)y)/(x-y), x/y), returned as the
// coefficients of x^(n-w) y^w. Throws InexactDivision if a monomial of T
// would leave a negative power of (x-y) or y.
WeightDistribution wd_from_tutte(const Bivariate& tutte, std::size_t n, std::size_t k,
                                 std::uint64_t q);
WeightDistribution wd_via_tutte(const LinearCode& code, std::uint64_t budget = kDefaultTutteBudget);

// chi(t) = sum_A (-1)^|A| t^(r - rk A), constant term first.
Univariate characteristic_from_tally(const SubsetRankTally& t);
Univariate characteristic_polynomial(const LinearCode& code,
                                     std::uint64_t budget = kDefaultTutteBudget);
// (-1)^r T(1 - t, 0)
Univariate characteristic_from_tutte(const Bivariate& tutte, std::size_t rank);

}  // namespace lcw
