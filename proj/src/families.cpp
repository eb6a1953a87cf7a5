#include "lcw/families.hpp"

#include <array>
#include <bit>
#include <string>

#include "lcw/error.hpp"

namespace lcw {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 15> kNames{{
    {Family::FullSpace, "full_space"},
    {Family::Even, "even"},
    {Family::Simplex, "simplex"},
    {Family::Rm1, "rm1"},
    {Family::Golay23, "golay23"},
    {Family::Golay24, "golay24"},
    {Family::Hamming2, "hamming2"},
    {Family::ExtHamming2, "ext_hamming2"},
    {Family::HammingQ, "hamming_q"},
    {Family::Rm2, "rm2"},
    {Family::Hrm2, "hrm2"},
    {Family::Prm2, "prm2"},
    {Family::Mds, "mds"},
    {Family::Rm, "rm"},
    {Family::RsMds, "rs_mds"},
}};

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// b^e, saturating just above kMaxFamilyLength * b so length checks still fire.
std::int64_t ipow64(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > kMaxFamilyLength) return kMaxFamilyLength * b + 1;
    r *= b;
  }
  return r;
}

void check_length(std::int64_t n, const char* what) {
  if (n > kMaxFamilyLength) {
    bad_params(std::string(what) + ": length " + std::to_string(n) + " exceeds " +
               std::to_string(kMaxFamilyLength));
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) bad_params(what);
}

void require_prime_power(std::int64_t q) {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  if (q < 2 || !prime_power(static_cast<std::uint64_t>(q), p, e)) {
    bad_params("q = " + std::to_string(q) + " is not a prime power");
  }
}

WeightDistribution blank(std::int64_t q, std::int64_t n, std::int64_t k) {
  WeightDistribution wd;
  wd.q = static_cast<std::uint64_t>(q);
  wd.n = static_cast<std::size_t>(n);
  wd.k = static_cast<std::size_t>(k);
  wd.counts.assign(wd.n + 1, BigInt(0));
  return wd;
}

// Sum and A_0 check; wd_mds may produce negative counts for parameters
// where no code exists, so it skips the sign check.
WeightDistribution finish(WeightDistribution wd, const char* family,
                          bool allow_negative = false) {
  const bool ok = allow_negative
                      ? wd.counts[0] == 1 && wd.total() == ipow(from_u64(wd.q), wd.k)
                      : wd.valid();
  if (!ok) {
    throw Error(ErrorCode::InexactDivision,
                std::string(family) + ": closed form does not sum to q^k");
  }
  return wd;
}

// prod_{i=lo}^{hi} (q^i - 1); 1 when empty.
BigInt prod_qi_minus_1(std::int64_t q, std::int64_t lo, std::int64_t hi) {
  BigInt r = 1;
  for (std::int64_t i = lo; i <= hi; ++i) r *= ipow(q, static_cast<std::uint64_t>(i)) - 1;
  return r;
}

// prod_{i=1}^{l} (q^{2i} - 1).
BigInt prod_q2i_minus_1(std::int64_t q, std::int64_t l) {
  BigInt r = 1;
  for (std::int64_t i = 1; i <= l; ++i) r *= ipow(q, static_cast<std::uint64_t>(2 * i)) - 1;
  return r;
}

std::int64_t get(const std::optional<std::int64_t>& v, const char* name, Family f) {
  if (!v) {
    bad_params("family " + std::string(family_name(f)) + " needs parameter --" + name);
  }
  return *v;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  bad_params("unknown family '" + std::string(name) + "'");
}

WeightDistribution wd_full_space(std::int64_t n, std::int64_t q) {
  require(n >= 1, "full_space: n must be >= 1");
  require(q >= 2, "full_space: q must be >= 2");
  check_length(n, "full_space");
  auto wd = blank(q, n, n);
  for (std::int64_t i = 0; i <= n; ++i) {
    wd.counts[i] = binomial(n, i) * ipow(q - 1, static_cast<std::uint64_t>(i));
  }
  return finish(std::move(wd), "full_space");
}

WeightDistribution wd_even(std::int64_t n) {
  require(n >= 2, "even: n must be >= 2");
  check_length(n, "even");
  auto wd = blank(2, n, n - 1);
  for (std::int64_t i = 0; i <= n; i += 2) wd.counts[i] = binomial(n, i);
  return finish(std::move(wd), "even");
}

WeightDistribution wd_simplex(std::int64_t m, std::int64_t q) {
  require(m >= 2, "simplex: m must be >= 2");
  require_prime_power(q);
  const std::int64_t qm = ipow64(q, m);
  check_length(qm, "simplex");
  const std::int64_t n = (qm - 1) / (q - 1);
  auto wd = blank(q, n, m);
  wd.counts[0] = 1;
  wd.counts[qm / q] = big(qm - 1);
  return finish(std::move(wd), "simplex");
}

WeightDistribution wd_rm1(std::int64_t m) {
  require(m >= 1, "rm1: m must be >= 1");
  const std::int64_t n = ipow64(2, m);
  check_length(n, "rm1");
  auto wd = blank(2, n, m + 1);
  wd.counts[0] = 1;
  wd.counts[n] = 1;
  wd.counts[n / 2] = big(2 * n - 2);
  return finish(std::move(wd), "rm1");
}

WeightDistribution wd_golay23() {
  auto wd = blank(2, 23, 12);
  const std::pair<int, int> table[] = {{0, 1},     {7, 253},   {8, 506},  {11, 1288},
                                       {12, 1288}, {15, 506},  {16, 253}, {23, 1}};
  for (auto [w, a] : table) wd.counts[w] = a;
  return finish(std::move(wd), "golay23");
}

WeightDistribution wd_golay24() {
  auto wd = blank(2, 24, 12);
  const std::pair<int, int> table[] = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  for (auto [w, a] : table) wd.counts[w] = a;
  return finish(std::move(wd), "golay24");
}

namespace {

// dst = (c + t) / den, checked.
void exact_sum_div(BigInt& dst, const BigInt& c, const BigInt& t, unsigned long den,
                   const char* where) {
  mpz_add(dst.get_mpz_t(), c.get_mpz_t(), t.get_mpz_t());
  if (mpz_divisible_ui_p(dst.get_mpz_t(), den) == 0) {
    throw Error(ErrorCode::InexactDivision, std::string("inexact division in ") + where);
  }
  mpz_divexact_ui(dst.get_mpz_t(), dst.get_mpz_t(), den);
}

}  // namespace

WeightDistribution wd_hamming_binary(std::int64_t m) {
  require(m >= 2, "hamming2: m must be >= 2");
  const std::int64_t n = ipow64(2, m) - 1;
  check_length(n, "hamming2");
  auto wd = blank(2, n, n - m);
  // Binomials roll forward in place; the upper half mirrors, A_i = A_{n-i}.
  const std::int64_t half = (n - 1) / 2;
  const auto den = static_cast<unsigned long>(n + 1);
  BigInt cn = 1, ch = 1, t;
  for (std::int64_t j = 0; j <= half; ++j) {
    mpz_mul_ui(t.get_mpz_t(), ch.get_mpz_t(), static_cast<unsigned long>(n));
    if (((j + 1) / 2) % 2) mpz_neg(t.get_mpz_t(), t.get_mpz_t());
    exact_sum_div(wd.counts[j], cn, t, den, "hamming2");
    wd.counts[n - j] = wd.counts[j];
    next_binomial(cn, n, j);
    if (j % 2) next_binomial(ch, half, j / 2);
  }
  return finish(std::move(wd), "hamming2");
}

WeightDistribution wd_ext_hamming_binary(std::int64_t m) {
  require(m >= 2, "ext_hamming2: m must be >= 2");
  const std::int64_t n = ipow64(2, m);
  check_length(n, "ext_hamming2");
  auto wd = blank(2, n, n - m - 1);
  const auto den = static_cast<unsigned long>(n);
  BigInt cn = 1, ch = 1, t;
  for (std::int64_t i = 0; 4 * i <= n; ++i) {
    mpz_mul_ui(t.get_mpz_t(), ch.get_mpz_t(), static_cast<unsigned long>(n - 1));
    if (i % 2) mpz_neg(t.get_mpz_t(), t.get_mpz_t());
    exact_sum_div(wd.counts[2 * i], cn, t, den, "ext_hamming2");
    wd.counts[n - 2 * i] = wd.counts[2 * i];
    next_binomial(cn, n, 2 * i);
    next_binomial(cn, n, 2 * i + 1);
    next_binomial(ch, n / 2, i);
  }
  return finish(std::move(wd), "ext_hamming2");
}

WeightDistribution wd_hamming_q(std::int64_t m, std::int64_t q) {
  require(m >= 2, "hamming_q: m must be >= 2");
  require_prime_power(q);
  const std::int64_t qm = ipow64(q, m);
  check_length(qm, "hamming_q");
  const std::int64_t n = (qm - 1) / (q - 1);
  const std::int64_t qm1 = qm / q;
  auto wd = blank(q, n, n - m);
  const BigInt den = big(qm);
  const BigInt qm_minus_1 = big(qm - 1);
  for (std::int64_t w = 0; w <= n; ++w) {
    BigInt s = 0;
    const std::int64_t jlo = std::max<std::int64_t>(0, w - (n - qm1));
    const std::int64_t jhi = std::min(w, qm1);
    for (std::int64_t j = jlo; j <= jhi; ++j) {
      const std::int64_t i = w - j;
      BigInt t = binomial(n - qm1, i) * binomial(qm1, j) * ipow(q - 1, static_cast<std::uint64_t>(i));
      if (j % 2) t = -t;
      s += t;
    }
    const BigInt num =
        ipow(q - 1, static_cast<std::uint64_t>(w)) * binomial(n, w) + qm_minus_1 * s;
    wd.counts[w] = exact_div(num, den, "hamming_q");
  }
  return finish(std::move(wd), "hamming_q");
}

WeightDistribution wd_rm2(std::int64_t m) {
  require(m >= 2, "rm2: m must be >= 2");
  const std::int64_t n = ipow64(2, m);
  check_length(n, "rm2");
  auto wd = blank(2, n, 1 + m + m * (m - 1) / 2);
  wd.counts[0] = 1;
  wd.counts[n] = 1;
  BigInt mid = big(n - 1);
  for (std::int64_t l = 1; l <= (m - 1) / 2; ++l) {
    mid += exact_div(ipow(2, static_cast<std::uint64_t>(l * l + l)) * prod_qi_minus_1(2, m - 2 * l, m),
                     prod_q2i_minus_1(2, l), "rm2");
  }
  wd.counts[n / 2] += 2 * mid;
  for (std::int64_t j = 1; j <= m / 2; ++j) {
    const BigInt a =
        exact_div(ipow(2, static_cast<std::uint64_t>(j * j + j)) * prod_qi_minus_1(2, m - 2 * j + 1, m),
                  prod_q2i_minus_1(2, j), "rm2");
    const std::int64_t off = ipow64(2, m - j - 1);
    wd.counts[n / 2 + off] += a;
    wd.counts[n / 2 - off] += a;
  }
  return finish(std::move(wd), "rm2");
}

WeightDistribution wd_hrm2(std::int64_t q, std::int64_t m) {
  require(m >= 2, "hrm2: m must be >= 2");
  require_prime_power(q);
  const std::int64_t n = ipow64(q, m);
  check_length(n, "hrm2");
  auto wd = blank(q, n, m * (m + 1) / 2);
  wd.counts[0] = 1;
  const std::int64_t centre = n - n / q;
  BigInt mid = big(n - 1);
  for (std::int64_t l = 1; l <= (m - 1) / 2; ++l) {
    mid += exact_div(ipow(q, static_cast<std::uint64_t>(l * l + l)) * prod_qi_minus_1(q, m - 2 * l, m),
                     prod_q2i_minus_1(q, l), "hrm2");
  }
  wd.counts[centre] += mid;
  for (std::int64_t j = 1; j <= m / 2; ++j) {
    for (int tau : {1, -1}) {
      const BigInt num = ipow(q, static_cast<std::uint64_t>(j * j)) *
                         (ipow(q, static_cast<std::uint64_t>(j)) + tau) *
                         prod_qi_minus_1(q, m - 2 * j + 1, m);
      const BigInt a = exact_div(num, 2 * prod_q2i_minus_1(q, j), "hrm2");
      const std::int64_t w = centre - tau * ipow64(q, m - j - 1) * (q - 1);
      wd.counts[w] += a;
    }
  }
  return finish(std::move(wd), "hrm2");
}

// Product limits run to m + 1 in both sums; with the upper limit m the
// counts do not sum to q^C(m+2,2).
WeightDistribution wd_prm2(std::int64_t q, std::int64_t m) {
  require(m >= 2, "prm2: m must be >= 2");
  require_prime_power(q);
  const std::int64_t qm = ipow64(q, m);
  check_length(qm * q, "prm2");
  const std::int64_t n = (qm * q - 1) / (q - 1);
  auto wd = blank(q, n, (m + 1) * (m + 2) / 2);
  wd.counts[0] = 1;
  BigInt mid = big(qm * q - 1);
  for (std::int64_t l = 1; l <= m / 2; ++l) {
    mid += exact_div(ipow(q, static_cast<std::uint64_t>(l * l + l)) *
                         prod_qi_minus_1(q, m - 2 * l + 1, m + 1),
                     prod_q2i_minus_1(q, l), "prm2");
  }
  wd.counts[qm] += mid;
  for (std::int64_t j = 1; j <= (m + 1) / 2; ++j) {
    for (int tau : {1, -1}) {
      const BigInt num = ipow(q, static_cast<std::uint64_t>(j * j)) *
                         (ipow(q, static_cast<std::uint64_t>(j)) + tau) *
                         prod_qi_minus_1(q, m - 2 * j + 2, m + 1);
      const BigInt a = exact_div(num, 2 * prod_q2i_minus_1(q, j), "prm2");
      wd.counts[qm - tau * ipow64(q, m - j)] += a;
    }
  }
  return finish(std::move(wd), "prm2");
}

WeightDistribution wd_mds(std::int64_t n, std::int64_t k, std::int64_t q) {
  require(k >= 1 && k <= n, "mds: need 1 <= k <= n");
  require(q >= 2, "mds: q must be >= 2");
  check_length(n, "mds");
  auto wd = blank(q, n, k);
  const std::int64_t d = n - k + 1;
  wd.counts[0] = 1;
  for (std::int64_t w = d; w <= n; ++w) {
    BigInt s = 0;
    for (std::int64_t j = 0; j <= w - d; ++j) {
      BigInt t = binomial(w - 1, j) * ipow(q, static_cast<std::uint64_t>(w - d - j));
      if (j % 2) t = -t;
      s += t;
    }
    wd.counts[w] = binomial(n, w) * big(q - 1) * s;
  }
  return finish(std::move(wd), "mds", true);
}

WeightDistribution family_distribution(const FamilySpec& spec) {
  const auto& p = spec.params;
  const Family f = spec.family;
  switch (f) {
    case Family::FullSpace: return wd_full_space(get(p.n, "n", f), p.q.value_or(2));
    case Family::Even: return wd_even(get(p.n, "n", f));
    case Family::Simplex: return wd_simplex(get(p.m, "m", f), p.q.value_or(2));
    case Family::Rm1: return wd_rm1(get(p.m, "m", f));
    case Family::Golay23: return wd_golay23();
    case Family::Golay24: return wd_golay24();
    case Family::Hamming2: return wd_hamming_binary(get(p.m, "m", f));
    case Family::ExtHamming2: return wd_ext_hamming_binary(get(p.m, "m", f));
    case Family::HammingQ: return wd_hamming_q(get(p.m, "m", f), get(p.q, "q", f));
    case Family::Rm2: return wd_rm2(get(p.m, "m", f));
    case Family::Hrm2: return wd_hrm2(get(p.q, "q", f), get(p.m, "m", f));
    case Family::Prm2: return wd_prm2(get(p.q, "q", f), get(p.m, "m", f));
    case Family::Mds:
    case Family::RsMds:
      return wd_mds(get(p.n, "n", f), get(p.k, "k", f), get(p.q, "q", f));
    case Family::Rm: {
      const auto r = get(p.r, "r", f);
      if (r == 1) return wd_rm1(get(p.m, "m", f));
      if (r == 2) return wd_rm2(get(p.m, "m", f));
      bad_params("rm: closed form only for r = 1 or r = 2");
    }
  }
  bad_params("unknown family");
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<std::vector<Element>> projective_points(const Field& f, std::size_t dim) {
  const std::uint64_t q = f.q();
  std::vector<std::vector<Element>> pts;
  // Leading zeros, a 1, then the free coordinates as a base-q counter.
  for (std::size_t lead = dim; lead-- > 0;) {
    const std::size_t free = dim - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<Element> v(dim, 0);
      v[lead] = 1;
      std::uint64_t x = t;
      for (std::size_t i = dim; i-- > lead + 1;) {
        v[i] = static_cast<Element>(x % q);
        x /= q;
      }
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

namespace {

GeneratorMatrix from_columns(FieldPtr field, const std::vector<std::vector<Element>>& cols,
                             std::size_t k) {
  GeneratorMatrix g(std::move(field), k, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) g.at(i, j) = cols[j][i];
  }
  return g;
}

GeneratorMatrix simplex_gen(std::int64_t m, std::int64_t q) {
  require(m >= 2, "simplex: m must be >= 2");
  require_prime_power(q);
  check_length(ipow64(q, m), "simplex");
  auto field = Field::make(static_cast<std::uint64_t>(q));
  const auto pts = projective_points(*field, static_cast<std::size_t>(m));
  return from_columns(field, pts, static_cast<std::size_t>(m));
}

GeneratorMatrix rm_gen(std::int64_t r, std::int64_t m) {
  require(m >= 1 && m <= 20, "rm: m must be in 1..20");
  require(r >= 0 && r <= m, "rm: need 0 <= r <= m");
  auto field = Field::make(2);
  const std::size_t n = std::size_t{1} << m;
  // Monomials as variable bit masks, by degree then by mask value.
  std::vector<std::uint32_t> monos;
  for (std::int64_t deg = 0; deg <= r; ++deg) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) == deg) monos.push_back(mask);
    }
  }
  GeneratorMatrix g(field, monos.size(), n);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      g.at(i, x) = ((x & monos[i]) == monos[i]) ? 1 : 0;
    }
  }
  return g;
}

// Rows x_i x_j (i <= j) evaluated at `pts`.
GeneratorMatrix quadratic_gen(FieldPtr field, const std::vector<std::vector<Element>>& pts,
                              std::size_t vars) {
  const Field& f = *field;
  std::vector<std::pair<std::size_t, std::size_t>> monos;
  for (std::size_t i = 0; i < vars; ++i) {
    for (std::size_t j = i; j < vars; ++j) monos.emplace_back(i, j);
  }
  GeneratorMatrix g(field, monos.size(), pts.size());
  for (std::size_t r = 0; r < monos.size(); ++r) {
    for (std::size_t c = 0; c < pts.size(); ++c) {
      g.at(r, c) = f.mul(pts[c][monos[r].first], pts[c][monos[r].second]);
    }
  }
  return g;
}

GeneratorMatrix hrm2_gen(std::int64_t q, std::int64_t m) {
  require(m >= 2, "hrm2: m must be >= 2");
  require_prime_power(q);
  const std::int64_t n = ipow64(q, m);
  check_length(n, "hrm2");
  auto field = Field::make(static_cast<std::uint64_t>(q));
  // Affine points in base-q order, first coordinate most significant.
  std::vector<std::vector<Element>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t) {
    std::vector<Element> v(static_cast<std::size_t>(m));
    std::int64_t x = t;
    for (std::int64_t i = m; i-- > 0;) {
      v[i] = static_cast<Element>(x % q);
      x /= q;
    }
    pts.push_back(std::move(v));
  }
  return quadratic_gen(field, pts, static_cast<std::size_t>(m));
}

GeneratorMatrix prm2_gen(std::int64_t q, std::int64_t m) {
  require(m >= 2, "prm2: m must be >= 2");
  require_prime_power(q);
  check_length(ipow64(q, m + 1), "prm2");
  auto field = Field::make(static_cast<std::uint64_t>(q));
  const auto pts = projective_points(*field, static_cast<std::size_t>(m + 1));
  return quadratic_gen(field, pts, static_cast<std::size_t>(m + 1));
}

GeneratorMatrix rs_gen(std::int64_t n, std::int64_t k, std::int64_t q) {
  require_prime_power(q);
  require(k >= 1 && k <= n, "rs_mds: need 1 <= k <= n");
  if (n == q + 2 && q % 2 == 0 && (k == 3 || k == q - 1)) {
    // Conic plus nucleus in PG(2, q), q even; k = q - 1 is its dual.
    if (k == q - 1 && k != 3) return LinearCode(rs_gen(n, 3, q)).dual().generator();
    GeneratorMatrix g = rs_gen(q + 1, 3, q);
    GeneratorMatrix h(g.field_ptr(), 3, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(q); ++j) h.at(i, j) = g.at(i, j);
    h.at(1, n - 1) = 1;
    return h;
  }
  require(n <= q + 1, "rs_mds: need n <= q + 1, or n = q + 2 with q even and k in {3, q - 1}");
  auto field = Field::make(static_cast<std::uint64_t>(q));
  GeneratorMatrix g(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  const std::int64_t affine = std::min(n, q);
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = 0; j < affine; ++j) {
      g.at(i, j) = field->pow(static_cast<Element>(j), i);
    }
  }
  if (n == q + 1) g.at(k - 1, n - 1) = 1;
  return g;
}

GeneratorMatrix golay23_gen() {
  auto field = Field::make(2);
  // g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
  const int taps[] = {0, 2, 4, 5, 6, 10, 11};
  GeneratorMatrix g(field, 12, 23);
  for (std::size_t i = 0; i < 12; ++i) {
    for (int t : taps) g.at(i, i + t) = 1;
  }
  return g;
}

GeneratorMatrix golay24_gen() {
  const auto g23 = golay23_gen();
  GeneratorMatrix g(g23.field_ptr(), 12, 24);
  for (std::size_t i = 0; i < 12; ++i) {
    Element parity = 0;
    for (std::size_t j = 0; j < 23; ++j) {
      g.at(i, j) = g23.at(i, j);
      parity ^= g23.at(i, j);
    }
    g.at(i, 23) = parity;
  }
  return g;
}

}  // namespace

GeneratorMatrix family_generator(const FamilySpec& spec) {
  const auto& p = spec.params;
  const Family f = spec.family;
  switch (f) {
    case Family::FullSpace: {
      const auto n = get(p.n, "n", f);
      const auto q = p.q.value_or(2);
      require(n >= 1, "full_space: n must be >= 1");
      require_prime_power(q);
      check_length(n, "full_space");
      GeneratorMatrix g(Field::make(static_cast<std::uint64_t>(q)), n, n);
      for (std::int64_t i = 0; i < n; ++i) g.at(i, i) = 1;
      return g;
    }
    case Family::Even: {
      const auto n = get(p.n, "n", f);
      require(n >= 2, "even: n must be >= 2");
      check_length(n, "even");
      GeneratorMatrix g(Field::make(2), n - 1, n);
      for (std::int64_t i = 0; i + 1 < n; ++i) {
        g.at(i, i) = 1;
        g.at(i, n - 1) = 1;
      }
      return g;
    }
    case Family::Simplex: return simplex_gen(get(p.m, "m", f), p.q.value_or(2));
    case Family::Rm1: return rm_gen(1, get(p.m, "m", f));
    case Family::Rm2: return rm_gen(2, get(p.m, "m", f));
    case Family::Rm: return rm_gen(get(p.r, "r", f), get(p.m, "m", f));
    case Family::Golay23: return golay23_gen();
    case Family::Golay24: return golay24_gen();
    case Family::Hamming2:
      return LinearCode(simplex_gen(get(p.m, "m", f), 2)).dual().generator();
    case Family::HammingQ:
      return LinearCode(simplex_gen(get(p.m, "m", f), get(p.q, "q", f))).dual().generator();
    case Family::ExtHamming2: {
      const auto m = get(p.m, "m", f);
      require(m >= 2, "ext_hamming2: m must be >= 2");
      return LinearCode(rm_gen(1, m)).dual().generator();
    }
    case Family::Hrm2: return hrm2_gen(get(p.q, "q", f), get(p.m, "m", f));
    case Family::Prm2: return prm2_gen(get(p.q, "q", f), get(p.m, "m", f));
    case Family::Mds:
    case Family::RsMds:
      return rs_gen(get(p.n, "n", f), get(p.k, "k", f), get(p.q, "q", f));
  }
  bad_params("unknown family");
}

}  // namespace lcw
