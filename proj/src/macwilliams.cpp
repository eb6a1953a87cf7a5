#include "lcw/macwilliams.hpp"

#include <string>

#include "lcw/error.hpp"

namespace lcw {

std::vector<BigInt> krawtchouk_column(std::size_t n, std::uint64_t q, std::size_t x) {
  std::vector<BigInt> k(n + 1);
  k[0] = 1;
  if (n == 0) return k;
  // (j+1) K_{j+1} = [(n-j)(q-1) + j - q x] K_j - (q-1)(n-j+1) K_{j-1}
  const bool small = n < (1u << 24) && q < (1u << 24);
  const BigInt qq = from_u64(q);
  const BigInt q1 = qq - 1;
  const BigInt xx = from_u64(x);
  BigInt a, b;
  for (std::size_t j = 0; j < n; ++j) {
    auto* out = k[j + 1].get_mpz_t();
    if (small) {
      const auto nj = static_cast<long>(n - j), jj = static_cast<long>(j);
      const auto qs = static_cast<long>(q), xs = static_cast<long>(x);
      mpz_mul_si(out, k[j].get_mpz_t(), nj * (qs - 1) + jj - qs * xs);
      if (j > 0) {
        mpz_submul_ui(out, k[j - 1].get_mpz_t(),
                      static_cast<unsigned long>((qs - 1) * (nj + 1)));
      }
    } else {
      a = q1 * from_u64(n - j) + from_u64(j) - qq * xx;
      a *= k[j];
      if (j > 0) {
        b = q1 * from_u64(n - j + 1);
        b *= k[j - 1];
        a -= b;
      }
      mpz_set(out, a.get_mpz_t());
    }
    mpz_divexact_ui(out, out, static_cast<unsigned long>(j + 1));
  }
  return k;
}

WeightDistribution macwilliams(const WeightDistribution& wd) {
  const std::size_t n = wd.n;
  if (wd.counts.size() != n + 1) {
    bad_params("distribution has " + std::to_string(wd.counts.size()) +
               " counts, expected n + 1 = " + std::to_string(n + 1));
  }
  if (wd.k > n || wd.q < 2) bad_params("distribution needs q >= 2 and k <= n");

  // Columns are generated on the fly with two rolling values, so no K_j(i)
  // table is ever stored.
  std::vector<BigInt> acc(n + 1, BigInt(0));
  const bool small = n < (1u << 24) && wd.q < (1u << 24);
  BigInt prev, cur, next;
  auto roll = [&](std::size_t i) {
    const auto* a = wd.counts[i].get_mpz_t();
    if (!small) {
      const auto col = krawtchouk_column(n, wd.q, i);
      for (std::size_t j = 0; j <= n; ++j) mpz_addmul(acc[j].get_mpz_t(), a, col[j].get_mpz_t());
      return;
    }
    const auto qs = static_cast<long>(wd.q), xs = static_cast<long>(i);
    prev = 0;
    cur = 1;
    mpz_add(acc[0].get_mpz_t(), acc[0].get_mpz_t(), a);
    for (std::size_t j = 0; j < n; ++j) {
      const auto nj = static_cast<long>(n - j), jj = static_cast<long>(j);
      mpz_mul_si(next.get_mpz_t(), cur.get_mpz_t(), nj * (qs - 1) + jj - qs * xs);
      if (j > 0) {
        mpz_submul_ui(next.get_mpz_t(), prev.get_mpz_t(),
                      static_cast<unsigned long>((qs - 1) * (nj + 1)));
      }
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j + 1));
      mpz_addmul(acc[j + 1].get_mpz_t(), a, next.get_mpz_t());
      mpz_swap(prev.get_mpz_t(), cur.get_mpz_t());
      mpz_swap(cur.get_mpz_t(), next.get_mpz_t());
    }
  };

  if (wd.q != 2 || !small) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (mpz_sgn(wd.counts[i].get_mpz_t()) != 0) roll(i);
    }
  } else {
    // Binary: K_j(x) is the z^j coefficient of (1 - z^2)^x (1 + z)^(n - 2x) for
    // x <= n - x, and K_j(n - x) = (-1)^j K_j(x), so mirrored columns share work.
    constexpr std::size_t kShortTail = 16;
    BigInt even, odd, c, t;
    for (std::size_t x = 0; 2 * x <= n; ++x) {
      const BigInt& ax = wd.counts[x];
      const BigInt zero;
      const BigInt& ay = 2 * x == n ? zero : wd.counts[n - x];
      if (mpz_sgn(ax.get_mpz_t()) == 0 && mpz_sgn(ay.get_mpz_t()) == 0) continue;
      const std::size_t tail = n - 2 * x;
      if (x > 0 && tail > kShortTail) {
        if (mpz_sgn(ax.get_mpz_t()) != 0) roll(x);
        if (mpz_sgn(ay.get_mpz_t()) != 0) roll(n - x);
        continue;
      }
      mpz_add(even.get_mpz_t(), ax.get_mpz_t(), ay.get_mpz_t());
      mpz_sub(odd.get_mpz_t(), ax.get_mpz_t(), ay.get_mpz_t());
      if (x == 0) {
        // C(n, j) = C(n, n - j)
        c = 1;
        for (std::size_t j = 0; 2 * j <= n; ++j) {
          mpz_addmul(acc[j].get_mpz_t(), (j % 2 ? odd : even).get_mpz_t(), c.get_mpz_t());
          if (2 * j != n) {
            mpz_addmul(acc[n - j].get_mpz_t(), ((n - j) % 2 ? odd : even).get_mpz_t(),
                       c.get_mpz_t());
          }
          next_binomial(c, static_cast<std::int64_t>(n), static_cast<std::int64_t>(j));
        }
        continue;
      }
      std::vector<unsigned long> tb(tail + 1, 1);
      for (std::size_t s = 1; s <= tail; ++s) tb[s] = tb[s - 1] * (tail - s + 1) / s;
      auto spread = [&](std::size_t i) {
        for (std::size_t s = 0; s <= tail; ++s) {
          const std::size_t j = 2 * i + s;
          const auto* coef = (j % 2 ? odd : even).get_mpz_t();
          const auto* v = c.get_mpz_t();
          if (tb[s] != 1) {
            mpz_mul_ui(t.get_mpz_t(), v, tb[s]);
            v = t.get_mpz_t();
          }
          if (i % 2) {
            mpz_submul(acc[j].get_mpz_t(), coef, v);
          } else {
            mpz_addmul(acc[j].get_mpz_t(), coef, v);
          }
        }
      };
      // C(x, i) = C(x, x - i)
      c = 1;
      for (std::size_t i = 0; 2 * i <= x; ++i) {
        spread(i);
        if (2 * i != x) spread(x - i);
        next_binomial(c, static_cast<std::int64_t>(x), static_cast<std::int64_t>(i));
      }
    }
  }

  const BigInt size = ipow(from_u64(wd.q), wd.k);
  const bool shift = mpz_popcount(size.get_mpz_t()) == 1;
  const auto bits = mpz_scan1(size.get_mpz_t(), 0);
  WeightDistribution out;
  out.q = wd.q;
  out.n = n;
  out.k = n - wd.k;
  for (std::size_t j = 0; j <= n; ++j) {
    auto* v = acc[j].get_mpz_t();
    const bool ok = shift ? mpz_divisible_2exp_p(v, bits) != 0
                          : mpz_divisible_p(v, size.get_mpz_t()) != 0;
    if (!ok) {
      throw Error(ErrorCode::InexactTransform,
                  "coefficient of weight " + std::to_string(j) + " is not divisible by q^k");
    }
    if (shift) {
      mpz_tdiv_q_2exp(v, v, bits);
    } else {
      mpz_divexact(v, v, size.get_mpz_t());
    }
  }
  out.counts = std::move(acc);
  if (!out.valid()) {
    throw Error(ErrorCode::InexactTransform,
                "transform is not a weight distribution of dimension n - k");
  }
  return out;
}

}  // namespace lcw
