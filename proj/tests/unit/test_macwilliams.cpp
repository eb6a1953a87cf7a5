#include <gtest/gtest.h>

#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/macwilliams.hpp"
#include "oracles.hpp"

using namespace lcw;

TEST(MacWilliams, SimplexToHamming) {
  EXPECT_EQ(macwilliams(wd_simplex(3, 2)).counts, oracle::counts({1, 0, 0, 7, 7, 0, 0, 1}));
}

TEST(MacWilliams, FullSpaceToZeroCode) {
  const auto d = macwilliams(wd_full_space(6, 2));
  EXPECT_EQ(d.k, 0u);
  EXPECT_EQ(d.counts, oracle::counts({1, 0, 0, 0, 0, 0, 0}));
}

TEST(MacWilliams, InvolutionHammingQ) {
  const auto wd = wd_hamming_q(2, 5);
  EXPECT_EQ(macwilliams(macwilliams(wd)), wd);
}

// Krawtchouk route against explicit expansion of W(x + (q-1)y, x - y).
TEST(MacWilliams, MatchesSubstitution) {
  std::vector<WeightDistribution> cases = {
      wd_hamming_binary(4), wd_ext_hamming_binary(5), wd_rm2(5),  wd_golay23(),
      wd_hamming_q(2, 7),   wd_hrm2(3, 3),            wd_prm2(2, 3), wd_mds(8, 5, 7),
      wd_simplex(3, 4),     wd_full_space(9, 5)};
  for (const auto& wd : cases) {
    const auto expect = oracle::macwilliams_by_substitution(wd);
    ASSERT_FALSE(expect.empty());
    EXPECT_EQ(macwilliams(wd).counts, expect);
  }
}

TEST(MacWilliams, KrawtchoukColumnAtZero) {
  // K_j(0) = C(n, j) (q-1)^j
  const auto col = krawtchouk_column(6, 3, 0);
  for (std::size_t j = 0; j <= 6; ++j) EXPECT_EQ(col[j], binomial(6, j) * ipow(2, j));
}

TEST(MacWilliams, BruteOfDualAgrees) {
  oracle::Rng rng{41};
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = Field::make(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + rng.below(10);
      const std::size_t kmax = std::min<std::size_t>(n - 1, q == 2 ? 8 : 6);
      const std::size_t k = 1 + rng.below(kmax);
      const auto c = random_code(f, n, k, rng.next());
      const auto d = c.dual();
      if (ipow(static_cast<std::int64_t>(q), d.dimension()) > 1 << 20) continue;
      ASSERT_EQ(macwilliams(brute_weight_distribution(c)), brute_weight_distribution(d))
          << q << " " << n << " " << k;
    }
  }
}

TEST(MacWilliams, DualityForAllSmallM) {
  for (int m = 2; m <= 16; ++m) {
    ASSERT_EQ(macwilliams(wd_simplex(m, 2)), wd_hamming_binary(m)) << m;
    ASSERT_EQ(macwilliams(wd_rm1(m)), wd_ext_hamming_binary(m)) << m;
  }
}

TEST(MacWilliams, InvolutionOnFamilies) {
  std::vector<WeightDistribution> cases = {wd_even(10),           wd_golay24(),
                                           wd_hamming_binary(6),  wd_rm2(6),
                                           wd_hrm2(2, 5),         wd_prm2(3, 2),
                                           wd_hamming_q(3, 3),    wd_mds(10, 6, 11)};
  for (const auto& wd : cases) ASSERT_EQ(macwilliams(macwilliams(wd)), wd);
}

TEST(MacWilliams, RejectsNonCodeInput) {
  // B_1 = (4 + 3 * 2) / 4
  WeightDistribution wd{2, 4, 2, oracle::counts({1, 3, 0, 0, 0})};
  try {
    macwilliams(wd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactTransform);
  }
  WeightDistribution bad{2, 3, 1, oracle::counts({1, 1})};
  EXPECT_THROW(macwilliams(bad), Error);
}
