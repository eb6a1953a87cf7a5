#include "lcw/analysis.hpp"

#include <string>

#include "lcw/error.hpp"

namespace lcw {

NonzeroDistribution nonzero(const WeightDistribution& wd) {
  NonzeroDistribution out;
  for (std::size_t i = 0; i < wd.counts.size(); ++i) {
    if (wd.counts[i] != 0) {
      out.weights.push_back(i);
      out.counts.push_back(wd.counts[i]);
    }
  }
  return out;
}

bool is_unimodal(std::span<const BigInt> a) {
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  return i >= a.size();
}

GapReport gap_report(std::span<const BigInt> a) {
  GapReport r;
  BigInt sq, prod;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    sq = a[i] * a[i];
    prod = a[i - 1] * a[i + 1];
    if (sq < prod) {
      r.violations.push_back(i);
      r.witnesses.push_back({i, a[i - 1], a[i], a[i + 1], sq - prod});
    }
  }
  r.gap_count = r.violations.size();
  r.log_concave = r.gap_count == 0;
  r.unimodal = is_unimodal(a);
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[r.peak_index]) r.peak_index = i;
  }
  return r;
}

Univariate newton_polynomial(std::span<const BigInt> a) {
  if (a.empty()) return {};
  const auto t = static_cast<std::int64_t>(a.size() - 1);
  std::vector<BigInt> c(a.size());
  for (std::int64_t i = 0; i <= t; ++i) c[i] = binomial(t, i) * a[i];
  return Univariate(std::move(c));
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_distinct_real_roots(const Univariate& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Univariate> seq;
  seq.push_back(p.primitive());
  seq.push_back(p.derivative().primitive());
  while (seq.back().degree() > 0) {
    const Univariate& a = seq[seq.size() - 2];
    const Univariate& b = seq.back();
    Univariate r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; undo that sign and negate.
    const long delta = a.degree() - b.degree();
    const bool flip = sgn(b.lead()) < 0 && (delta + 1) % 2 == 1;
    r = r.primitive();
    seq.push_back(flip ? r : -r);
  }
  std::vector<int> lo, hi;
  for (const auto& s : seq) {
    lo.push_back(s.sign_neg_inf());
    hi.push_back(s.sign_pos_inf());
  }
  return static_cast<std::size_t>(sign_changes(lo) - sign_changes(hi));
}

std::size_t real_root_count(const Univariate& p, std::size_t* distinct) {
  std::size_t total = 0;
  Univariate g = p.primitive();
  std::size_t first = 0;
  bool first_set = false;
  while (g.degree() > 0) {
    Univariate next = primitive_gcd(g, g.derivative());
    const Univariate h = exact_quotient(g, next.is_zero() ? Univariate::constant(1) : next);
    const std::size_t c = sturm_distinct_real_roots(h);
    if (!first_set) {
      first = c;
      first_set = true;
    }
    total += c;
    g = std::move(next);
  }
  if (distinct) *distinct = first;
  return total;
}

RealRootCheck newton_real_rooted(std::span<const BigInt> counts, std::size_t degree_budget) {
  RealRootCheck r;
  const Univariate p = newton_polynomial(counts);
  r.degree = p.degree() > 0 ? static_cast<std::size_t>(p.degree()) : 0;
  if (r.degree > degree_budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "Newton polynomial degree " + std::to_string(r.degree) + " exceeds budget " +
                    std::to_string(degree_budget),
                r.degree);
  }
  if (r.degree == 0) return r;
  r.real_roots = real_root_count(p, &r.distinct_real_roots);
  r.all_real = r.real_roots == r.degree;
  return r;
}

}  // namespace lcw
