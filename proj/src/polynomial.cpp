#include "lcw/polynomial.hpp"

#include <sstream>

#include "lcw/error.hpp"

namespace lcw {

Univariate::Univariate(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void Univariate::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Univariate Univariate::constant(const BigInt& c) { return Univariate({c}); }

Univariate Univariate::monomial(const BigInt& c, std::size_t deg) {
  std::vector<BigInt> v(deg + 1, BigInt(0));
  v[deg] = c;
  return Univariate(std::move(v));
}

Univariate Univariate::linear_power(const BigInt& a, const BigInt& b, std::size_t e) {
  std::vector<BigInt> v(e + 1);
  for (std::size_t i = 0; i <= e; ++i) {
    v[i] = binomial(static_cast<std::int64_t>(e), static_cast<std::int64_t>(i)) *
           ipow(a, e - i) * ipow(b, i);
  }
  return Univariate(std::move(v));
}

Univariate Univariate::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Univariate(std::move(v));
}

BigInt Univariate::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Univariate Univariate::primitive() const {
  const BigInt g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  }
  return Univariate(std::move(v));
}

BigInt Univariate::eval(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

int Univariate::sign_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int Univariate::sign_neg_inf() const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return (c_.size() - 1) % 2 ? -s : s;
}

Univariate Univariate::operator-() const {
  std::vector<BigInt> v(c_);
  for (auto& c : v) c = -c;
  return Univariate(std::move(v));
}

Univariate operator+(const Univariate& a, const Univariate& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Univariate(std::move(v));
}

Univariate operator-(const Univariate& a, const Univariate& b) { return a + (-b); }

Univariate operator*(const Univariate& a, const Univariate& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Univariate(std::move(v));
}

Univariate operator*(const BigInt& s, const Univariate& a) {
  std::vector<BigInt> v(a.c_);
  for (auto& c : v) c *= s;
  return Univariate(std::move(v));
}

std::string Univariate::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

Univariate pseudo_remainder(const Univariate& a, const Univariate& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  if (r.size() < bc.size()) return a;
  long steps = static_cast<long>(r.size()) - static_cast<long>(db);
  std::size_t top = r.size() - 1;
  // Each step: r = lb * r - r_top * x^(top-db) * b. Steps where the top
  // coefficient is already zero still scale by lb so the total power is
  // deg a - deg b + 1.
  for (; steps > 0; --steps, --top) {
    const BigInt t = r[top];
    for (std::size_t i = 0; i < top; ++i) r[i] *= lb;
    if (t != 0) {
      for (std::size_t i = 0; i < db; ++i) {
        mpz_submul(r[top - db + i].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
      }
    }
    r[top] = 0;
  }
  return Univariate(std::move(r));
}

Univariate exact_quotient(const Univariate& a, const Univariate& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw Error(ErrorCode::InexactDivision, "polynomial quotient is not exact");
  }
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db, BigInt(0));
  for (std::size_t top = r.size() - 1;; --top) {
    if (r[top] != 0) {
      BigInt t = exact_div(r[top], bc.back(), "polynomial quotient");
      q[top - db] = t;
      for (std::size_t i = 0; i <= db; ++i) {
        mpz_submul(r[top - db + i].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
      }
    }
    if (top == db) break;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) throw Error(ErrorCode::InexactDivision, "polynomial quotient is not exact");
  }
  return Univariate(std::move(q));
}

Univariate primitive_gcd(Univariate a, Univariate b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Univariate r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lead() < 0) a = -a;
  return a;
}

void Bivariate::add_term(unsigned i, unsigned j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt Bivariate::coeff(unsigned i, unsigned j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? BigInt(0) : it->second;
}

unsigned Bivariate::degree_x() const {
  unsigned d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

unsigned Bivariate::degree_y() const {
  unsigned d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

BigInt Bivariate::eval(const BigInt& x, const BigInt& y) const {
  BigInt r = 0;
  for (const auto& [k, v] : t_) r += v * ipow(x, k.first) * ipow(y, k.second);
  return r;
}

Bivariate operator+(const Bivariate& a, const Bivariate& b) {
  Bivariate r = a;
  for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, v);
  return r;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  Bivariate r;
  for (const auto& [ka, va] : a.t_) {
    for (const auto& [kb, vb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  }
  return r;
}

std::string Bivariate::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto [i, j] = it->first;
    const BigInt& c = it->second;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = i == 0 && j == 0;
    if (bare || mag != 1) out << mag.get_str();
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    if (j >= 1) out << 'y';
    if (j >= 2) out << '^' << j;
  }
  return out.str();
}

}  // namespace lcw
