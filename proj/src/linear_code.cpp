#include "lcw/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "lcw/error.hpp"

namespace lcw {

GeneratorMatrix::GeneratorMatrix(FieldPtr field, std::size_t k, std::size_t n)
    : field_(std::move(field)), k_(k), n_(n), entries_(k * n, 0) {}

GeneratorMatrix::GeneratorMatrix(FieldPtr field, std::size_t k, std::size_t n,
                                 std::vector<Element> entries)
    : field_(std::move(field)), k_(k), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != k * n) {
    bad_params("generator has " + std::to_string(entries_.size()) +
               " entries, expected " + std::to_string(k * n));
  }
  for (Element v : entries_) {
    if (!field_->contains(v)) {
      bad_params("entry " + std::to_string(v) + " outside GF(" +
                 std::to_string(field_->q()) + ")");
    }
  }
}

std::vector<std::size_t> row_reduce(GeneratorMatrix& m) {
  const Field& f = m.field();
  const std::size_t k = m.rows(), n = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    std::size_t sel = r;
    while (sel < k && m.at(sel, c) == 0) ++sel;
    if (sel == k) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    const Element s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < n; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r) continue;
      const Element t = m.at(i, c);
      if (t == 0) continue;
      const Element nt = f.neg(t);
      for (std::size_t j = c; j < n; ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(nt, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

LinearCode::LinearCode(const GeneratorMatrix& gen) : gen_(gen) {
  pivots_ = row_reduce(gen_);
  if (pivots_.size() != gen_.rows()) {
    throw Error(ErrorCode::RankDeficient,
                "generator rows are dependent: rank " + std::to_string(pivots_.size()) +
                    " < " + std::to_string(gen_.rows()),
                pivots_.size());
  }
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) {
  return LinearCode(GeneratorMatrix(std::move(field), 0, n), {});
}

LinearCode LinearCode::dual() const {
  const Field& f = field();
  const std::size_t n = length(), k = dimension();
  if (k == n) return zero(field_ptr(), n);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots_) is_pivot[p] = true;

  GeneratorMatrix h(field_ptr(), n - k, n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    h.at(r, j) = 1;
    for (std::size_t i = 0; i < k; ++i) h.at(r, pivots_[i]) = f.neg(gen_.at(i, j));
    ++r;
  }
  return LinearCode(h);
}

bool LinearCode::contains(std::span<const Element> word) const {
  if (word.size() != length()) return false;
  const Field& f = field();
  std::vector<Element> w(word.begin(), word.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Element c = w[pivots_[i]];
    if (c == 0) continue;
    const Element nc = f.neg(c);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(nc, gen_.at(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Element v) { return v == 0; });
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

bool WeightDistribution::valid() const {
  if (counts.size() != n + 1 || k > n) return false;
  if (counts[0] != 1) return false;
  for (const auto& c : counts) {
    if (c < 0) return false;
  }
  return total() == ipow(BigInt(static_cast<unsigned long>(q)), k);
}

LinearCode random_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) bad_params("random_code: need k <= n");
  std::uint64_t state = seed;
  auto next = [&state] {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  const std::uint32_t q = field->q();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GeneratorMatrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = static_cast<Element>(next() % q);
    }
    GeneratorMatrix r = g;
    if (row_reduce(r).size() == k) return LinearCode(g);
  }
  bad_params("random_code: no full-rank matrix found");
}

namespace {

using Hist = std::vector<std::uint64_t>;

unsigned pick_workers(unsigned requested, std::uint64_t parts) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, parts));
}

// Runs job(part, hist) for part in [0, parts) over `workers` threads with a
// static round-robin split, then sums the per-thread histograms.
template <class Job>
Hist run_parts(std::uint64_t parts, unsigned workers, std::size_t n, Job job) {
  std::vector<Hist> local(workers, Hist(n + 1, 0));
  auto body = [&](unsigned t) {
    for (std::uint64_t p = t; p < parts; p += workers) job(p, local[t]);
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  Hist out(n + 1, 0);
  for (const auto& h : local) {
    for (std::size_t i = 0; i <= n; ++i) out[i] += h[i];
  }
  return out;
}

// q = 2, n <= 64: rows as bit masks, Gray-code walk over the low rows, one
// part per assignment of the top `split` rows.
Hist binary_gray(const LinearCode& code, unsigned workers) {
  const std::size_t n = code.length(), k = code.dimension();
  std::vector<std::uint64_t> rows(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (code.generator().at(i, j)) rows[i] |= std::uint64_t{1} << j;
    }
  }
  const std::size_t split = std::min<std::size_t>(k, 6);
  const std::size_t low = k - split;
  const std::uint64_t parts = std::uint64_t{1} << split;
  return run_parts(parts, pick_workers(workers, parts), n, [&](std::uint64_t p, Hist& h) {
    std::uint64_t word = 0;
    for (std::size_t b = 0; b < split; ++b) {
      if ((p >> b) & 1) word ^= rows[low + b];
    }
    ++h[std::popcount(word)];
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t g = 1; g < steps; ++g) {
      word ^= rows[std::countr_zero(g)];
      ++h[std::popcount(word)];
    }
  });
}

// Generic q: depth-first over rows 0..k-2 with partial sums, then all q
// multiples of the last row at once from a histogram of cancelling
// coefficients.
Hist generic_odometer(const LinearCode& code, unsigned workers) {
  const Field& f = code.field();
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint32_t q = f.q();
  const auto& g = code.generator();

  std::vector<std::size_t> last_nz;
  std::vector<Element> last_neg_inv;
  for (std::size_t j = 0; j < n; ++j) {
    const Element r = g.at(k - 1, j);
    if (r != 0) {
      last_nz.push_back(j);
      last_neg_inv.push_back(f.neg(f.inv(r)));
    }
  }
  const std::size_t nz = last_nz.size();

  auto leaf = [&](const std::vector<Element>& s, std::vector<std::uint32_t>& hits,
                  std::vector<Element>& touched, Hist& h) {
    std::size_t base = 0;
    std::size_t t = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (t < nz && last_nz[t] == j) {
        const Element c = f.mul(s[j], last_neg_inv[t]);
        if (hits[c]++ == 0) touched.push_back(c);
        ++t;
      } else if (s[j] != 0) {
        ++base;
      }
    }
    // Multipliers with no cancelling position.
    h[base + nz] += q - touched.size();
    for (Element c : touched) {
      h[base + nz - hits[c]] += 1;
      hits[c] = 0;
    }
    touched.clear();
  };

  if (k == 1) {
    Hist h(n + 1, 0);
    std::vector<std::uint32_t> hits(q, 0);
    std::vector<Element> touched;
    leaf(std::vector<Element>(n, 0), hits, touched, h);
    return h;
  }

  return run_parts(q, pick_workers(workers, q), n, [&](std::uint64_t c0, Hist& h) {
    std::vector<std::vector<Element>> partial(k - 1, std::vector<Element>(n, 0));
    for (std::size_t j = 0; j < n; ++j) partial[0][j] = f.mul(static_cast<Element>(c0), g.at(0, j));
    std::vector<std::uint32_t> hits(q, 0);
    std::vector<Element> touched;
    // Odometer over coefficients of rows 1..k-2.
    std::vector<Element> coef(k - 1, 0);
    auto refill = [&](std::size_t from) {
      for (std::size_t i = from; i < k - 1; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          partial[i][j] = f.add(partial[i - 1][j], f.mul(coef[i], g.at(i, j)));
        }
      }
    };
    refill(1);
    while (true) {
      leaf(partial[k - 2], hits, touched, h);
      std::size_t i = k - 2;
      while (i >= 1) {
        if (++coef[i] < q) break;
        coef[i] = 0;
        --i;
      }
      if (i == 0) break;
      refill(i);
    }
  });
}

}  // namespace

WeightDistribution brute_weight_distribution(const LinearCode& code, std::uint64_t budget,
                                             unsigned workers) {
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint32_t q = code.field().q();
  const BigInt need = ipow(BigInt(static_cast<unsigned long>(q)), k);
  if (need > from_u64(budget)) {
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration needs " + to_decimal(need) + " codewords, budget is " +
                    std::to_string(budget),
                saturate_u64(need));
  }

  WeightDistribution wd;
  wd.q = q;
  wd.n = n;
  wd.k = k;
  Hist h;
  if (k == 0) {
    h.assign(n + 1, 0);
    h[0] = 1;
  } else if (q == 2 && n <= 64) {
    h = binary_gray(code, workers);
  } else {
    h = generic_odometer(code, workers);
  }
  wd.counts.reserve(n + 1);
  for (auto c : h) wd.counts.push_back(from_u64(c));
  return wd;
}

}  // namespace lcw
