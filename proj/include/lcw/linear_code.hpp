#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcw/bigint.hpp"
#include "lcw/field.hpp"

namespace lcw {

// k x n matrix over GF(q), row-major.
class GeneratorMatrix {
 public:
  GeneratorMatrix(FieldPtr field, std::size_t k, std::size_t n);
  GeneratorMatrix(FieldPtr field, std::size_t k, std::size_t n,
                  std::vector<Element> entries);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return k_; }
  std::size_t cols() const noexcept { return n_; }

  Element at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  Element& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  std::span<const Element> row(std::size_t r) const {
    return {entries_.data() + r * n_, n_};
  }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.field_->q() == b.field_->q() && a.k_ == b.k_ && a.n_ == b.n_ &&
           a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Element> entries_;
};

// A linear code held by a generator in reduced row-echelon form. The zero
// code (dimension 0) is representable so that dual() is total.
class LinearCode {
 public:
  // Row-reduces `gen`; throws RankDeficient(actual rank) if its rows are
  // linearly dependent.
  explicit LinearCode(const GeneratorMatrix& gen);

  static LinearCode zero(FieldPtr field, std::size_t n);

  const GeneratorMatrix& generator() const noexcept { return gen_; }
  const Field& field() const noexcept { return gen_.field(); }
  const FieldPtr& field_ptr() const noexcept { return gen_.field_ptr(); }
  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  LinearCode dual() const;

  // Whether `word` (length n) lies in the row space.
  bool contains(std::span<const Element> word) const;

 private:
  LinearCode(GeneratorMatrix gen, std::vector<std::size_t> pivots)
      : gen_(std::move(gen)), pivots_(std::move(pivots)) {}

  GeneratorMatrix gen_;
  std::vector<std::size_t> pivots_;
};

// Row-reduces in place and returns the pivot columns. Rows past the rank are
// left zero.
std::vector<std::size_t> row_reduce(GeneratorMatrix& m);

struct WeightDistribution {
  std::uint64_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<BigInt> counts;  // counts[i] = A_i, size n + 1

  BigInt total() const;
  // Checks counts.size() == n + 1, nonnegativity, A_0 = 1 and sum = q^k.
  bool valid() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Random full-rank k x n code from a fixed seed (splitmix64), so the
// result is identical on every platform.
LinearCode random_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultBruteBudget = 1ull << 28;

// Exact distribution by enumerating all q^k codewords. Throws BudgetExceeded
// when q^k > budget. `workers` = 0 picks the hardware concurrency; the result
// does not depend on the worker count.
WeightDistribution brute_weight_distribution(const LinearCode& code,
                                             std::uint64_t budget = kDefaultBruteBudget,
                                             unsigned workers = 0);

}  // namespace lcw
