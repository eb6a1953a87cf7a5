#pragma once

// Sampled checks of the f / g / G inequalities for MDS enumerators. Shared by
// the unit tests and the acceptance runner.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/mds.hpp"

namespace mds_lemmas {

struct Tally {
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> failed;
  std::vector<std::string> first_failures;

  void record(const std::string& name, bool ok, const std::string& where) {
    ++checked[name];
    if (!ok) {
      ++failed[name];
      if (first_failures.size() < 10) first_failures.push_back(name + " at " + where);
    }
  }
  std::size_t total_failed() const {
    std::size_t s = 0;
    for (const auto& [k, v] : failed) s += v;
    return s;
  }
  std::size_t total_checked() const {
    std::size_t s = 0;
    for (const auto& [k, v] : checked) s += v;
    return s;
  }
};

inline const std::vector<std::int64_t>& sample_q() {
  static const std::vector<std::int64_t> qs = {4, 5, 7, 8, 9, 11, 13, 16};
  return qs;
}

// 3 <= k <= 9, k < n <= 14, n <= q + 1: the range where the lemmas' own
// hypotheses (w <= q + 1, d >= 2) hold.
template <class F>
void for_each_sample(F&& fn) {
  for (std::int64_t q : sample_q())
    for (std::int64_t k = 3; k <= 9; ++k)
      for (std::int64_t n = k + 1; n <= 14 && n <= q + 1; ++n) fn(n, k, q);
}

inline Tally run() {
  using lcw::Rational;
  Tally t;
  for_each_sample([&](std::int64_t n, std::int64_t k, std::int64_t q) {
    const std::int64_t d = n - k + 1;
    const auto wd = lcw::wd_mds(n, k, q);
    Rational shrink(lcw::BigInt(static_cast<long>(q - 1)), lcw::BigInt(static_cast<long>(q)));
    shrink.canonicalize();
    const std::string at =
        "(n,k,q)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q) + ")";
    for (std::int64_t s = 0; s <= k - 1; ++s) {
      const std::int64_t w = d + s;
      const std::string where = at + " s=" + std::to_string(s) + " w=" + std::to_string(w);
      const auto f = lcw::mds_f(s, w, q);
      if (s == 1 && w == q + 1) {
        t.record("f_exception_zero", f == 0, where);
      } else {
        t.record("f_positive", f > 0, where);
      }
      if (w + 1 <= n) {
        const auto next = lcw::mds_f(s + 1, w + 1, q);
        Rational tail(lcw::binomial(w - 1, s + 1), lcw::ipow(q, s + 1));
        tail.canonicalize();
        const Rational rec = shrink * f + ((s + 1) % 2 ? -tail : tail);
        t.record("f_recurrence", next == rec, where);
        if (s % 2 == 0) {
          t.record("f_even_below", next < shrink * f, where);
        } else {
          t.record("f_odd_above", next > shrink * f, where);
        }
      }
      if (w <= d || w >= n) continue;
      // d < w < n from here on.
      const auto G = lcw::mds_ratio_G(s, n, k, q);
      t.record("G_identity",
               G * Rational(wd.counts[w - 1] * wd.counts[w + 1]) ==
                   Rational(wd.counts[w] * wd.counts[w]),
               where);
      const auto g = lcw::mds_g(s, w, q);
      Rational factor(lcw::BigInt(static_cast<long>((w + 1) * (n - w + 1))),
                      lcw::BigInt(static_cast<long>(w * (n - w))));
      factor.canonicalize();
      t.record("G_factorization", G == factor * g, where);
      if (s % 2 == 0) {
        t.record("g_even_above_one", g > 1, where);
        continue;
      }
      if (w + 2 <= n) {
        t.record("g_odd_shift_w", lcw::mds_g(s, w + 1, q) / g < 1, where);
      }
      if (w + 3 <= n) {
        t.record("g_odd_shift_both", lcw::mds_g(s + 2, w + 2, q) / g > 1, where);
      }
      if (2 * k <= n + 6 && s <= k - 4) {
        t.record("G_chain", lcw::mds_ratio_G(s + 2, n, k, q) > G, where);
      }
    }
  });
  return t;
}

}  // namespace mds_lemmas
