#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcw/analysis.hpp"
#include "lcw/bigint.hpp"

namespace lcw {

// A_w of the [n, k] MDS enumerator over GF(q); 0 < w < d gives 0.
BigInt mds_weight(std::int64_t n, std::int64_t k, std::int64_t q, std::int64_t w);

// f(s, w, q) = sum_{j=0}^{s} (-1)^j C(w-1, j) q^-j
Rational mds_f(std::int64_t s, std::int64_t w, std::int64_t q);
// g = f(s,w)^2 / (f(s-1,w-1) f(s+1,w+1)); ZeroDenominator if either factor is 0.
Rational mds_g(std::int64_t s, std::int64_t w, std::int64_t q);
// G = A_w^2 / (A_{w-1} A_{w+1}) with w = n - k + 1 + s, d < w < n.
Rational mds_ratio_G(std::int64_t s, std::int64_t n, std::int64_t k, std::int64_t q);

// Integer interval [lo, hi] containing a root; lo == hi means the root is
// that integer.
struct RootInterval {
  BigInt lo, hi;
  bool exact() const { return lo == hi; }
};

struct ThresholdResult {
  std::int64_t n = 0, k = 0, m = 0;
  int scale = 1;  // 2 when the quadratic was doubled to clear the /2
  BigInt c2, c1, c0;
  BigInt discriminant;  // c1^2 - 4 c2 c0 of the stored quadratic
  bool real_roots = false;
  bool roots_coincide = false;
  RootInterval smaller, larger;
  // ceil(larger root): the quadratic is >= 0 at every integer from here on.
  BigInt q_min_integer;
  // m (k-2) (m-2) (k m^2 - 2k + 2), before scaling.
  BigInt closed_form_discriminant;

  BigInt eval(const BigInt& q) const { return (c2 * q + c1) * q + c0; }
};

// Needs 3 <= k <= n.
ThresholdResult mds_q0(std::int64_t n, std::int64_t k);

enum class VerdictStatus { LogConcave, NotLogConcave };
enum class VerdictMethod { Theorem, Direct };

const char* to_string(VerdictStatus s) noexcept;
const char* to_string(VerdictMethod m) noexcept;

struct MdsVerdict {
  std::int64_t n = 0, k = 0, q = 0;
  VerdictStatus status = VerdictStatus::LogConcave;
  VerdictMethod method = VerdictMethod::Direct;
  std::vector<std::string> notes;
  std::optional<ThresholdResult> threshold;  // set in theorem mode
  // Always computed from the enumerator.
  NonzeroDistribution direct_nonzero;
  GapReport direct;
  bool negative_counts = false;
};

// Theorem mode when 3 <= k and 2k <= n + 6; otherwise direct.
MdsVerdict mds_verdict(std::int64_t n, std::int64_t k, std::int64_t q);

}  // namespace lcw
