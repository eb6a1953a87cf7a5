#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace lcw {

// Field elements are integers in [0, q). The base-p digits of the value are
// the coefficients of the polynomial representative, constant term in the
// least significant digit.
using Element = std::uint32_t;

enum class FieldOp { Add, Sub, Mul, Div, Inv, Pow };

inline constexpr std::uint64_t kDefaultFieldBound = 1u << 16;

// GF(q) for a prime power q = p^e. Immutable after construction; all tables
// are built up front, so a shared Field can be read from any thread.
class Field {
 public:
  // Smallest monic irreducible modulus in lexicographic order of
  // (c_0, c_1, ..., c_{e-1}). Throws NotPrimePower or TooLarge.
  static std::shared_ptr<const Field> make(std::uint64_t q,
                                           std::uint64_t bound = kDefaultFieldBound);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  // Coefficients c_0..c_e of the modulus, constant first; c_e = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_slow(a, b);
  }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  // Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  // Negative exponents invert first; 0^0 = 1.
  Element pow(Element a, std::int64_t exponent) const;

  Element apply(FieldOp op, Element a, std::int64_t b) const;

  bool contains(std::int64_t v) const noexcept { return v >= 0 && v < q_; }

  // Polynomial product of two digit vectors reduced by the modulus. Used for
  // building tables and as a table-free reference in tests.
  Element mul_reference(Element a, Element b) const;

 private:
  Field() = default;
  Element add_slow(Element a, Element b) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_table_;
  std::vector<Element> mul_table_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Prime-power decomposition of q. Returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& e);

// Whether the monic polynomial with the given coefficients (constant first,
// last coefficient 1) is irreducible over GF(p). Trial division by every
// monic polynomial of degree <= e/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace lcw
