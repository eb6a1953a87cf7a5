#include "lcw/tutte.hpp"

#include <string>

#include "lcw/error.hpp"

namespace lcw {
namespace {

struct Walker {
  const Field& f;
  std::size_t n, k;
  std::vector<std::vector<Element>> cols;
  std::vector<std::vector<Element>> basis;  // echelon rows, basis[i][pivot[i]] = 1
  std::vector<std::size_t> pivot;
  std::vector<std::vector<std::uint64_t>>& counts;

  // Reduces `v` against the basis; true if something is left.
  bool reduce(std::vector<Element>& v) const {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Element c = v[pivot[b]];
      if (c == 0) continue;
      const Element nc = f.neg(c);
      for (std::size_t i = 0; i < k; ++i) v[i] = f.add(v[i], f.mul(nc, basis[b][i]));
    }
    for (Element x : v) {
      if (x) return true;
    }
    return false;
  }

  void walk(std::size_t idx, std::size_t size) {
    if (idx == n) {
      ++counts[size][basis.size()];
      return;
    }
    walk(idx + 1, size);
    std::vector<Element> v = cols[idx];
    if (reduce(v)) {
      std::size_t p = 0;
      while (v[p] == 0) ++p;
      const Element s = f.inv(v[p]);
      for (auto& x : v) x = f.mul(x, s);
      basis.push_back(std::move(v));
      pivot.push_back(p);
      walk(idx + 1, size + 1);
      basis.pop_back();
      pivot.pop_back();
    } else {
      walk(idx + 1, size + 1);
    }
  }
};

}  // namespace

SubsetRankTally subset_rank_tally(const LinearCode& code, std::uint64_t budget) {
  const std::size_t n = code.length(), k = code.dimension();
  if (n >= 64 || (std::uint64_t{1} << n) > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "subset walk needs 2^" + std::to_string(n) + " subsets, budget is " +
                    std::to_string(budget),
                n >= 64 ? UINT64_MAX : (std::uint64_t{1} << n));
  }
  SubsetRankTally t;
  t.n = n;
  t.rank = k;  // generator rows are independent
  t.counts.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  Walker w{code.field(), n, k, {}, {}, {}, t.counts};
  w.cols.assign(n, std::vector<Element>(k));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) w.cols[j][i] = code.generator().at(i, j);
  }
  w.walk(0, 0);
  return t;
}

Bivariate tutte_from_tally(const SubsetRankTally& t) {
  Bivariate T;
  for (std::size_t s = 0; s <= t.n; ++s) {
    for (std::size_t r = 0; r < t.counts[s].size(); ++r) {
      const std::uint64_t c = t.counts[s][r];
      if (c == 0) continue;
      const std::size_t a = t.rank - r, b = s - r;
      // c (x-1)^a (y-1)^b
      for (std::size_t i = 0; i <= a; ++i) {
        const BigInt ci = binomial(static_cast<std::int64_t>(a), static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j <= b; ++j) {
          BigInt v = from_u64(c) * ci *
                     binomial(static_cast<std::int64_t>(b), static_cast<std::int64_t>(j));
          if ((a - i + b - j) % 2) v = -v;
          T.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), v);
        }
      }
    }
  }
  return T;
}

Bivariate tutte_polynomial(const LinearCode& code, std::uint64_t budget) {
  return tutte_from_tally(subset_rank_tally(code, budget));
}

WeightDistribution wd_from_tutte(const Bivariate& tutte, std::size_t n, std::size_t k,
                                 std::uint64_t q) {
  // Dehomogenize at x = 1: each monomial X^i Y^j of T contributes
  // t_ij (1 + (q-1) y)^i (1 - y)^(k-i) y^(n-k-j).
  Univariate w;
  const BigInt q1 = from_u64(q) - 1;
  for (const auto& [key, c] : tutte.terms()) {
    const auto [i, j] = key;
    if (i > k || j > n - k) {
      throw Error(ErrorCode::InexactDivision,
                  "Tutte monomial x^" + std::to_string(i) + " y^" + std::to_string(j) +
                      " exceeds rank/nullity (" + std::to_string(k) + ", " +
                      std::to_string(n - k) + ")");
    }
    Univariate term = Univariate::linear_power(1, q1, i) * Univariate::linear_power(1, -1, k - i);
    term = c * (term * Univariate::monomial(1, n - k - j));
    w = w + term;
  }
  WeightDistribution wd;
  wd.q = q;
  wd.n = n;
  wd.k = k;
  wd.counts.resize(n + 1);
  if (w.degree() > static_cast<long>(n)) {
    throw Error(ErrorCode::InexactDivision, "Tutte evaluation has degree above n");
  }
  for (std::size_t i = 0; i <= n; ++i) wd.counts[i] = w.coeff(i);
  return wd;
}

WeightDistribution wd_via_tutte(const LinearCode& code, std::uint64_t budget) {
  return wd_from_tutte(tutte_polynomial(code, budget), code.length(), code.dimension(),
                       code.field().q());
}

Univariate characteristic_from_tally(const SubsetRankTally& t) {
  std::vector<BigInt> c(t.rank + 1, BigInt(0));
  for (std::size_t s = 0; s <= t.n; ++s) {
    for (std::size_t r = 0; r < t.counts[s].size(); ++r) {
      const BigInt v = from_u64(t.counts[s][r]);
      if (s % 2) {
        c[t.rank - r] -= v;
      } else {
        c[t.rank - r] += v;
      }
    }
  }
  return Univariate(std::move(c));
}

Univariate characteristic_polynomial(const LinearCode& code, std::uint64_t budget) {
  return characteristic_from_tally(subset_rank_tally(code, budget));
}

Univariate characteristic_from_tutte(const Bivariate& tutte, std::size_t rank) {
  Univariate out;
  for (const auto& [key, c] : tutte.terms()) {
    if (key.second != 0) continue;
    out = out + c * Univariate::linear_power(1, -1, key.first);
  }
  return rank % 2 ? -out : out;
}

}  // namespace lcw
