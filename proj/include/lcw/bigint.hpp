#pragma once

// Thin helpers over GMP's C++ interface. All counting in the library goes
// through mpz_class / mpq_class; nothing is ever rounded.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lcw/error.hpp"

namespace lcw {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// C(n, i) -> C(n, i + 1) in place; zero once i reaches n.
inline void next_binomial(BigInt& c, std::int64_t n, std::int64_t i) {
  if (i >= n) {
    c = 0;
    return;
  }
  mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - i));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
}

// C(n, 0), ..., C(n, upto), each from the previous one.
inline std::vector<BigInt> binomial_row(std::int64_t n, std::int64_t upto) {
  std::vector<BigInt> row;
  if (n < 0 || upto < 0) return row;
  upto = upto < n ? upto : n;
  row.resize(static_cast<std::size_t>(upto) + 1);
  row[0] = 1;
  for (std::int64_t i = 0; i < upto; ++i) {
    auto& next = row[static_cast<std::size_t>(i) + 1];
    mpz_mul_ui(next.get_mpz_t(), row[static_cast<std::size_t>(i)].get_mpz_t(),
               static_cast<unsigned long>(n - i));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return row;
}

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

inline BigInt ipow(std::int64_t base, std::uint64_t exp) {
  return ipow(BigInt(static_cast<long>(base)), exp);
}

// num / den, throwing InexactDivision when den does not divide num.
inline BigInt exact_div(const BigInt& num, const BigInt& den,
                        const char* where) {
  if (den == 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InexactDivision,
                std::string("inexact division in ") + where);
  }
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::Parse, "not a decimal integer: '" + s + "'");
  }
  return r;
}

// Saturating conversion for error payloads.
inline std::uint64_t saturate_u64(const BigInt& v) {
  if (v < 0) return 0;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return UINT64_MAX;
  BigInt hi = v >> 32;
  BigInt lo = v - (hi << 32);
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) |
         static_cast<std::uint64_t>(lo.get_ui());
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r = static_cast<unsigned long>(v >> 32);
  r <<= 32;
  r += static_cast<unsigned long>(v & 0xffffffffu);
  return r;
}

}  // namespace lcw
