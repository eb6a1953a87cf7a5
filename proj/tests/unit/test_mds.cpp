#include <gtest/gtest.h>

#include "../mds_lemmas.hpp"
#include "lcw/analysis.hpp"
#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/mds.hpp"

using namespace lcw;

namespace {

Rational frac(long a, long b) {
  Rational r{BigInt(a), BigInt(b)};
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Mds, WeightMatchesDistribution) {
  for (std::int64_t n : {5, 8, 12}) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto wd = wd_mds(n, k, 7);
      for (std::int64_t w = 0; w <= n; ++w) ASSERT_EQ(mds_weight(n, k, 7, w), wd.counts[w]);
    }
  }
}

TEST(Mds, F) {
  for (std::int64_t w : {1, 4, 9}) EXPECT_EQ(mds_f(0, w, 5), 1);
  EXPECT_EQ(mds_f(1, 6, 7), frac(2, 7));
  EXPECT_EQ(mds_f(1, 8, 7), 0);
  EXPECT_EQ(mds_f(2, 5, 3), frac(1, 3));
}

TEST(Mds, G) {
  for (std::int64_t q : {4, 5, 7, 9, 16}) {
    EXPECT_EQ(mds_g(1, 4, q), frac((q - 3) * (q - 3), q * q - 4 * q + 6)) << q;
  }
  const auto g = mds_g(2, 6, 7);
  EXPECT_EQ(g, mds_f(2, 6, 7) * mds_f(2, 6, 7) / (mds_f(1, 5, 7) * mds_f(3, 7, 7)));
  EXPECT_GT(g, 1);
  // f(1, 5, 4) = 1 - 4/4
  try {
    mds_g(2, 6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
  try {
    mds_g(1, 6, 5);  // f(2, 7, 5) = 1 - 6/5 + 15/25 > 0, f(0, 5, 5) = 1
    mds_g(2, 5, 5);  // f(1, 4, 5) > 0
  } catch (const Error&) {
    FAIL();
  }
  // f(1, q + 1, q) = 0 in the denominator.
  try {
    mds_g(2, 7, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Mds, RatioG) {
  const auto wd = wd_mds(5, 3, 7);
  Rational expect(wd.counts[4] * wd.counts[4], wd.counts[3] * wd.counts[5]);
  expect.canonicalize();
  EXPECT_EQ(mds_ratio_G(1, 5, 3, 7), expect);
  EXPECT_THROW(mds_ratio_G(0, 5, 3, 7), Error);
  EXPECT_THROW(mds_ratio_G(2, 5, 3, 7), Error);
}

// G(1, 5, q) >= 1 exactly when 6q^2 - 44q + 66 >= 0.
TEST(Mds, RatioAgreesWithQuadraticSign) {
  const auto t = mds_q0(5, 3);
  for (std::int64_t q = 4; q <= 40; ++q) {
    EXPECT_EQ(mds_ratio_G(1, 5, 3, q) >= 1, t.eval(q) >= 0) << q;
  }
}

TEST(Mds, Threshold53) {
  const auto t = mds_q0(5, 3);
  EXPECT_EQ(t.m, 4);
  EXPECT_EQ(t.c2, 6);
  EXPECT_EQ(t.c1, -44);
  EXPECT_EQ(t.c0, 66);
  EXPECT_EQ(t.scale, 1);
  EXPECT_TRUE(t.real_roots);
  EXPECT_EQ(t.larger.lo, 5);
  EXPECT_EQ(t.larger.hi, 6);
  EXPECT_EQ(t.q_min_integer, 6);
  EXPECT_EQ(t.discriminant, 352);
  EXPECT_EQ(t.discriminant, t.closed_form_discriminant);
}

TEST(Mds, Threshold129) {
  const auto t = mds_q0(12, 9);
  EXPECT_EQ(t.c2, 13);
  EXPECT_EQ(t.c1, -209);
  EXPECT_EQ(t.c0, 418);
  EXPECT_EQ(t.larger.lo, 13);
  EXPECT_EQ(t.larger.hi, 14);
  EXPECT_EQ(t.q_min_integer, 14);
}

TEST(Mds, ThresholdProperties) {
  for (std::int64_t k = 3; k <= 30; ++k) {
    for (std::int64_t n = k + 1; n <= 60; ++n) {
      const auto t = mds_q0(n, k);
      ASSERT_EQ(t.discriminant, t.closed_form_discriminant * t.scale * t.scale);
      ASSERT_GT(t.discriminant, 0);
      ASSERT_TRUE(t.real_roots);
      ASSERT_GE(t.eval(t.q_min_integer), 0);
      ASSERT_LT(t.eval(t.q_min_integer - 1), 0);
      ASSERT_LE(t.larger.lo, t.larger.hi);
      ASSERT_LE(t.larger.hi - t.larger.lo, 1);
    }
  }
  EXPECT_THROW(mds_q0(5, 2), Error);
  EXPECT_THROW(mds_q0(4, 5), Error);
}

TEST(Mds, Verdicts) {
  EXPECT_EQ(mds_verdict(5, 3, 7).status, VerdictStatus::LogConcave);
  EXPECT_EQ(mds_verdict(5, 3, 5).status, VerdictStatus::NotLogConcave);
  const auto v = mds_verdict(11, 9, 17);
  EXPECT_EQ(v.status, VerdictStatus::LogConcave);
  EXPECT_EQ(v.method, VerdictMethod::Direct);
  EXPECT_EQ(mds_verdict(9, 7, 8).status, VerdictStatus::NotLogConcave);
  EXPECT_EQ(mds_verdict(10, 8, 9).status, VerdictStatus::LogConcave);
  const auto h = mds_verdict(6, 4, 5);
  EXPECT_EQ(h.status, VerdictStatus::NotLogConcave);
  bool hamming_note = false;
  for (const auto& note : h.notes) hamming_note |= note.find("Hamming") != std::string::npos;
  EXPECT_TRUE(hamming_note);
}

// Direct mode always agrees with the gap report of the enumerator.
TEST(Mds, DirectAgreesWithGapReport) {
  for (std::int64_t q : {3, 4, 5, 7, 8, 9}) {
    for (std::int64_t k = 1; k <= 8; ++k) {
      for (std::int64_t n = k; n <= q + 1; ++n) {
        const auto v = mds_verdict(n, k, q);
        const auto r = gap_report(nonzero(wd_mds(n, k, q)));
        ASSERT_EQ(v.direct.gap_count, r.gap_count);
        if (v.method == VerdictMethod::Direct) {
          ASSERT_EQ(v.status == VerdictStatus::LogConcave, r.log_concave) << n << k << q;
        }
      }
    }
  }
}

TEST(Mds, LemmaSample) {
  const auto t = mds_lemmas::run();
  EXPECT_GT(t.total_checked(), 1000u);
  for (const auto& name : {"f_positive", "f_recurrence", "f_even_below", "f_odd_above",
                           "G_identity", "G_factorization", "g_even_above_one", "g_odd_shift_w",
                           "g_odd_shift_both", "G_chain"}) {
    EXPECT_GT(t.checked.count(name) ? t.checked.at(name) : 0, 0u) << name;
  }
  for (const auto& f : t.first_failures) ADD_FAILURE() << f;
  EXPECT_EQ(t.total_failed(), 0u);
}
