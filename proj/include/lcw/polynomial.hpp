#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcw/bigint.hpp"

namespace lcw {

// Dense integer polynomial, constant term first, no trailing zeros.
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<BigInt> coeffs);

  static Univariate constant(const BigInt& c);
  // c * x^deg
  static Univariate monomial(const BigInt& c, std::size_t deg);
  // (a + b x)^e
  static Univariate linear_power(const BigInt& a, const BigInt& b, std::size_t e);

  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const BigInt& lead() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  Univariate derivative() const;
  // Positive gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  Univariate primitive() const;
  BigInt eval(const BigInt& x) const;
  int sign_at(const BigInt& x) const { return sgn(eval(x)); }
  // Sign as x -> +inf / -inf.
  int sign_pos_inf() const;
  int sign_neg_inf() const;

  Univariate operator-() const;
  friend Univariate operator+(const Univariate& a, const Univariate& b);
  friend Univariate operator-(const Univariate& a, const Univariate& b);
  friend Univariate operator*(const Univariate& a, const Univariate& b);
  friend Univariate operator*(const BigInt& s, const Univariate& a);
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
Univariate pseudo_remainder(const Univariate& a, const Univariate& b);
// a / b; throws InexactDivision unless b divides a over the integers.
Univariate exact_quotient(const Univariate& a, const Univariate& b);
// Primitive gcd with positive leading coefficient (zero if both are zero).
Univariate primitive_gcd(Univariate a, Univariate b);

// Sparse integer polynomial in x, y; key (i, j) is x^i y^j. Zero
// coefficients are never stored.
class Bivariate {
 public:
  using Key = std::pair<unsigned, unsigned>;

  void add_term(unsigned i, unsigned j, const BigInt& c);
  BigInt coeff(unsigned i, unsigned j) const;
  const std::map<Key, BigInt>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  unsigned degree_x() const;
  unsigned degree_y() const;
  BigInt eval(const BigInt& x, const BigInt& y) const;

  friend Bivariate operator+(const Bivariate& a, const Bivariate& b);
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.t_ == b.t_; }

  std::string to_string() const;

 private:
  std::map<Key, BigInt> t_;
};

}  // namespace lcw
