#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcw/linear_code.hpp"
#include "lcw/polynomial.hpp"

namespace lcw {

struct NonzeroDistribution {
  std::vector<std::size_t> weights;
  std::vector<BigInt> counts;

  friend bool operator==(const NonzeroDistribution&, const NonzeroDistribution&) = default;
};

// Entries with A_i != 0, order preserved.
NonzeroDistribution nonzero(const WeightDistribution& wd);

// One failure of a_i^2 >= a_{i-1} a_{i+1}; defect = a_i^2 - a_{i-1} a_{i+1} < 0.
struct Witness {
  std::size_t index = 0;
  BigInt prev, mid, next, defect;
};

struct GapReport {
  std::vector<std::size_t> violations;  // ascending, in [1, t-1]
  std::size_t gap_count = 0;
  bool log_concave = true;
  bool unimodal = true;
  std::size_t peak_index = 0;  // first index of the maximum
  std::vector<Witness> witnesses;
};

// Exact comparisons only. Equality is not a gap.
GapReport gap_report(std::span<const BigInt> counts);
inline GapReport gap_report(const NonzeroDistribution& nzd) { return gap_report(nzd.counts); }

// Non-decreasing then non-increasing; plateaus allowed.
bool is_unimodal(std::span<const BigInt> counts);

struct RealRootCheck {
  std::size_t degree = 0;
  std::size_t real_roots = 0;       // with multiplicity
  std::size_t distinct_real_roots = 0;
  bool all_real = true;
};

inline constexpr std::size_t kDefaultNewtonDegreeBudget = 160;

// P(x) = sum_i C(t, i) a_i x^i for the sequence a_0..a_t.
Univariate newton_polynomial(std::span<const BigInt> counts);

// Distinct real roots of a squarefree polynomial by a Sturm sequence built
// from primitive pseudo-remainders.
std::size_t sturm_distinct_real_roots(const Univariate& squarefree);

// Real roots with multiplicity: Sturm counts over the factors
// g_{i-1} / g_i of the repeated-gcd chain g_i = gcd(g_{i-1}, g_{i-1}').
std::size_t real_root_count(const Univariate& p, std::size_t* distinct = nullptr);

// Throws BudgetExceeded when deg P > degree_budget.
RealRootCheck newton_real_rooted(std::span<const BigInt> counts,
                                 std::size_t degree_budget = kDefaultNewtonDegreeBudget);
inline RealRootCheck newton_real_rooted(const NonzeroDistribution& nzd,
                                        std::size_t degree_budget = kDefaultNewtonDegreeBudget) {
  return newton_real_rooted(nzd.counts, degree_budget);
}

}  // namespace lcw
