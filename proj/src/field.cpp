#include "lcw/field.hpp"

#include <string>

#include "lcw/error.hpp"

namespace lcw {
namespace {

constexpr std::uint32_t kFullTableMax = 256;

std::vector<std::uint32_t> to_digits(Element v, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

Element from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Element v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Remainder of `num` modulo monic `den` over GF(p), coefficients constant
// first. Returns true when the remainder is zero.
bool divides(const std::vector<std::uint32_t>& den, std::vector<std::uint32_t> num,
             std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t top = num.size() - 1; top >= dd; --top) {
    const std::uint32_t c = num[top];
    if (c != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        const std::size_t idx = top - dd + i;
        num[idx] = static_cast<std::uint32_t>(
            (num[idx] + static_cast<std::uint64_t>(p - c) * den[i]) % p);
      }
    }
    if (top == 0) break;
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& e) {
  if (q < 2) return false;
  std::uint64_t n = q;
  std::uint64_t f = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f = d;
      break;
    }
  }
  if (f == 0) f = n;
  e = 0;
  while (n % f == 0) {
    n /= f;
    ++e;
  }
  p = f;
  return n == 1;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> cand(d + 1);
    cand[d] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (divides(cand, poly, p)) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint64_t q, std::uint64_t bound) {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  if (!prime_power(q, p, e)) {
    throw Error(ErrorCode::NotPrimePower,
                "q = " + std::to_string(q) + " is not a prime power");
  }
  if (q > bound) {
    throw Error(ErrorCode::TooLarge, "q = " + std::to_string(q) +
                                         " exceeds the field table bound " +
                                         std::to_string(bound));
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = static_cast<std::uint32_t>(p);
  f->e_ = e;
  f->q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    f->modulus_ = {0, 1};
  } else {
    // Candidate t encodes (c_0, ..., c_{e-1}) with c_0 most significant, so
    // increasing t is the lexicographic order.
    std::vector<std::uint32_t> cand(e + 1);
    cand[e] = 1;
    bool found = false;
    for (std::uint64_t t = 0; t < q && !found; ++t) {
      std::uint64_t v = t;
      for (std::uint32_t i = e; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (cand[0] != 0 && is_irreducible(cand, f->p_)) found = true;
    }
    f->modulus_ = cand;
  }

  f->neg_.resize(q);
  for (Element a = 0; a < q; ++a) {
    auto d = to_digits(a, f->p_, e);
    for (auto& c : d) c = (f->p_ - c) % f->p_;
    f->neg_[a] = from_digits(d, f->p_);
  }

  // Primitive element and exp/log tables.
  const auto factors = prime_factors(q - 1);
  auto slow_pow = [&](Element a, std::uint64_t n) {
    Element r = 1;
    while (n) {
      if (n & 1) r = f->mul_reference(r, a);
      a = f->mul_reference(a, a);
      n >>= 1;
    }
    return r;
  };
  Element gen = 1;
  for (Element g = (q == 2 ? 1 : 2); g < q; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  f->exp_.resize(q - 1);
  f->log_.assign(q, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    f->exp_[i] = x;
    f->log_[x] = i;
    x = f->mul_reference(x, gen);
  }
  f->inv_.assign(q, 0);
  for (Element a = 1; a < q; ++a) {
    const std::uint32_t l = f->log_[a];
    f->inv_[a] = f->exp_[l == 0 ? 0 : (q - 1 - l)];
  }

  if (q <= kFullTableMax) {
    f->add_table_.resize(q * q);
    f->mul_table_.resize(q * q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        f->add_table_[a * q + b] = f->add_slow(a, b);
        Element m = 0;
        if (a != 0 && b != 0) {
          std::uint32_t s = f->log_[a] + f->log_[b];
          if (s >= q - 1) s -= static_cast<std::uint32_t>(q - 1);
          m = f->exp_[s];
        }
        f->mul_table_[a * q + b] = m;
      }
    }
  }
  return f;
}

Element Field::add_slow(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % p_;
  Element r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Element Field::mul_reference(Element a, Element b) const {
  if (e_ == 1) {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  const auto da = to_digits(a, p_, e_);
  const auto db = to_digits(b, p_, e_);
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  // Reduce with the monic modulus.
  for (std::size_t top = prod.size() - 1; top >= e_; --top) {
    const std::uint32_t c = prod[top];
    if (c != 0) {
      for (std::uint32_t i = 0; i <= e_; ++i) {
        const std::size_t idx = top - e_ + i;
        prod[idx] = static_cast<std::uint32_t>(
            (prod[idx] + static_cast<std::uint64_t>(p_ - c) * modulus_[i]) % p_);
      }
    }
  }
  prod.resize(e_);
  return from_digits(prod, p_);
}

Element Field::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Element Field::pow(Element a, std::int64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) {
    if (exponent < 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    return 0;
  }
  const std::int64_t order = static_cast<std::int64_t>(q_) - 1;
  std::int64_t r = exponent % order;
  if (r < 0) r += order;
  const std::uint64_t l = static_cast<std::uint64_t>(log_[a]) *
                          static_cast<std::uint64_t>(r) % static_cast<std::uint64_t>(order);
  return exp_[l];
}

Element Field::apply(FieldOp op, Element a, std::int64_t b) const {
  auto elem = [&](std::int64_t v) {
    if (!contains(v)) {
      throw Error(ErrorCode::BadParams, "operand " + std::to_string(v) +
                                            " outside GF(" + std::to_string(q_) + ")");
    }
    return static_cast<Element>(v);
  };
  const Element x = elem(a);
  switch (op) {
    case FieldOp::Add: return add(x, elem(b));
    case FieldOp::Sub: return sub(x, elem(b));
    case FieldOp::Mul: return mul(x, elem(b));
    case FieldOp::Div: {
      const Element y = elem(b);
      if (y == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
      return div(x, y);
    }
    case FieldOp::Inv: return inv(x);
    case FieldOp::Pow: return pow(x, b);
  }
  throw Error(ErrorCode::BadParams, "unknown field operation");
}

}  // namespace lcw
