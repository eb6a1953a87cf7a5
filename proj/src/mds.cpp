#include "lcw/mds.hpp"

#include <string>

#include "lcw/error.hpp"
#include "lcw/families.hpp"

namespace lcw {
namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// Largest integer a with a <= (-c1 + sign * sqrt(D)) / (2 c2), c2 > 0, D >= 0.
BigInt floor_root(const BigInt& c2, const BigInt& c1, const BigInt& D, int sign) {
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
  BigInt num = -c1 + sign * s;
  BigInt den = 2 * c2;
  BigInt a;
  mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // a <= root  <=>  2 c2 a + c1 <= sign * sqrt(D)
  auto le = [&](const BigInt& x) {
    const BigInt t = 2 * c2 * x + c1;
    if (sign > 0) return t <= 0 || t * t <= D;
    return t <= 0 && t * t >= D;
  };
  while (!le(a)) --a;
  while (le(a + 1)) ++a;
  return a;
}

RootInterval interval_from_floor(const BigInt& a, const ThresholdResult& t) {
  if (t.eval(a) == 0) return {a, a};
  return {a, a + 1};
}

}  // namespace

BigInt mds_weight(std::int64_t n, std::int64_t k, std::int64_t q, std::int64_t w) {
  if (k < 1 || k > n || q < 2) bad_params("mds: need 1 <= k <= n and q >= 2");
  if (w < 0 || w > n) return 0;
  if (w == 0) return 1;
  const std::int64_t d = n - k + 1;
  if (w < d) return 0;
  BigInt s = 0;
  for (std::int64_t j = 0; j <= w - d; ++j) {
    BigInt t = binomial(w - 1, j) * ipow(q, static_cast<std::uint64_t>(w - d - j));
    if (j % 2) t = -t;
    s += t;
  }
  return binomial(n, w) * big(q - 1) * s;
}

Rational mds_f(std::int64_t s, std::int64_t w, std::int64_t q) {
  if (s < 0 || w < 1 || q < 2) bad_params("mds_f: need s >= 0, w >= 1, q >= 2");
  Rational r = 0;
  for (std::int64_t j = 0; j <= s; ++j) {
    Rational t(binomial(w - 1, j), ipow(q, static_cast<std::uint64_t>(j)));
    t.canonicalize();
    if (j % 2) t = -t;
    r += t;
  }
  return r;
}

Rational mds_g(std::int64_t s, std::int64_t w, std::int64_t q) {
  if (s < 1 || w < 2 || q < 2) bad_params("mds_g: need s >= 1, w >= 2, q >= 2");
  const Rational a = mds_f(s - 1, w - 1, q);
  const Rational b = mds_f(s + 1, w + 1, q);
  if (a == 0 || b == 0) {
    throw Error(ErrorCode::ZeroDenominator,
                "mds_g(" + std::to_string(s) + ", " + std::to_string(w) + ", " +
                    std::to_string(q) + "): vanishing f in the denominator");
  }
  const Rational f = mds_f(s, w, q);
  return f * f / (a * b);
}

Rational mds_ratio_G(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t q) {
  if (k < 1 || k > n || q < 2) bad_params("mds_ratio_G: need 1 <= k <= n and q >= 2");
  const std::int64_t d = n - k + 1;
  const std::int64_t w = d + s;
  if (!(d < w && w < n)) bad_params("mds_ratio_G: need d < w < n");
  const BigInt lo = mds_weight(n, k, q, w - 1);
  const BigInt hi = mds_weight(n, k, q, w + 1);
  if (lo == 0 || hi == 0) {
    throw Error(ErrorCode::ZeroDenominator, "mds_ratio_G: A_{w-1} A_{w+1} = 0");
  }
  const BigInt a = mds_weight(n, k, q, w);
  Rational r(a * a, lo * hi);
  r.canonicalize();
  return r;
}

ThresholdResult mds_q0(std::int64_t n, std::int64_t k) {
  if (k < 3 || k > n) bad_params("mds_q0: need 3 <= k <= n");
  ThresholdResult t;
  t.n = n;
  t.k = k;
  t.m = n - k + 2;
  const BigInt K = big(k), M = big(t.m);
  const BigInt half_num = K * M * M * M - K * M * M;
  BigInt c2 = M + K - 1;
  BigInt c1 = -(K * M * M - 2 * K + 2);
  BigInt c0;
  if (mpz_even_p(half_num.get_mpz_t())) {
    c0 = half_num / 2 - K * M + M + K - 1;
  } else {
    t.scale = 2;
    c2 *= 2;
    c1 *= 2;
    c0 = half_num - 2 * (K * M - M - K + 1);
  }
  t.c2 = c2;
  t.c1 = c1;
  t.c0 = c0;
  t.discriminant = c1 * c1 - 4 * c2 * c0;
  t.closed_form_discriminant = M * (K - 2) * (M - 2) * (K * M * M - 2 * K + 2);
  t.real_roots = t.discriminant >= 0;
  t.roots_coincide = t.discriminant == 0;
  if (t.real_roots) {
    t.larger = interval_from_floor(floor_root(c2, c1, t.discriminant, +1), t);
    t.smaller = interval_from_floor(floor_root(c2, c1, t.discriminant, -1), t);
    t.q_min_integer = t.larger.exact() ? t.larger.lo : t.larger.hi;
  }
  return t;
}

const char* to_string(VerdictStatus s) noexcept {
  return s == VerdictStatus::LogConcave ? "log_concave" : "not_log_concave";
}

const char* to_string(VerdictMethod m) noexcept {
  return m == VerdictMethod::Theorem ? "theorem" : "direct";
}

MdsVerdict mds_verdict(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (k < 1 || k > n || q < 2) bad_params("mds_verdict: need 1 <= k <= n and q >= 2");
  MdsVerdict v;
  v.n = n;
  v.k = k;
  v.q = q;

  const auto wd = wd_mds(n, k, q);
  v.direct_nonzero = nonzero(wd);
  v.direct = gap_report(v.direct_nonzero);
  for (const auto& c : v.direct_nonzero.counts) {
    if (c < 0) v.negative_counts = true;
  }
  const std::string code = "[" + std::to_string(n) + "," + std::to_string(k) + "," +
                           std::to_string(n - k + 1) + "]_" + std::to_string(q);

  if (k >= 3 && 2 * k <= n + 6) {
    v.method = VerdictMethod::Theorem;
    v.threshold = mds_q0(n, k);
    const auto& t = *v.threshold;
    const BigInt Q = big(q);
    const bool right_of_vertex = 2 * t.c2 * Q + t.c1 >= 0;
    const bool nonneg = t.eval(Q) >= 0;
    if (nonneg && right_of_vertex) {
      v.status = VerdictStatus::LogConcave;
      v.notes.push_back("q = " + std::to_string(q) + " >= q0(" + std::to_string(n) + "," +
                        std::to_string(k) + "); least admissible integer q is " +
                        t.q_min_integer.get_str());
    } else {
      v.status = VerdictStatus::NotLogConcave;
      if (nonneg) {
        v.notes.push_back("q = " + std::to_string(q) +
                          " is at or below the smaller root q0' of the threshold quadratic");
      } else {
        v.notes.push_back("q = " + std::to_string(q) +
                          " lies between the roots of the threshold quadratic; q0 is in (" +
                          t.larger.lo.get_str() + ", " + t.larger.hi.get_str() + ")");
      }
      v.notes.push_back(std::string("direct computation: ") +
                        (v.direct.log_concave ? "log-concave" : "not log-concave") + " with " +
                        std::to_string(v.direct.gap_count) + " gap(s)");
    }
  } else {
    v.method = VerdictMethod::Direct;
    v.status = v.direct.log_concave ? VerdictStatus::LogConcave : VerdictStatus::NotLogConcave;
  }

  if (n == q + 1 && k == q - 1) {
    v.notes.push_back("the " + code + " MDS code is a Hamming code");
  }
  if (n > q + 1) {
    v.notes.push_back("no MDS code " + code +
                      " is known for n > q + 1; the enumerator is evaluated formally");
  }
  if (v.negative_counts) {
    v.notes.push_back("the enumerator has negative coefficients, so no such code exists");
  }
  return v;
}

}  // namespace lcw
