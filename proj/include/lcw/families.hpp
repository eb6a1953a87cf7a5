#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lcw/linear_code.hpp"

namespace lcw {

enum class Family {
  FullSpace,
  Even,
  Simplex,
  Rm1,
  Golay23,
  Golay24,
  Hamming2,
  ExtHamming2,
  HammingQ,
  Rm2,
  Hrm2,
  Prm2,
  Mds,
  Rm,     // rm(r, m); closed form only for r in {1, 2}
  RsMds,  // Vandermonde construction; closed form is that of Mds
};

struct FamilyParams {
  std::optional<std::int64_t> n{}, k{}, m{}, q{}, r{};
};

struct FamilySpec {
  Family family = Family::FullSpace;
  FamilyParams params;
};

// Lower-case identifiers as used on the command line ("hamming_q", "rs_mds").
std::string_view family_name(Family f) noexcept;
// Throws BadParams for an unknown name.
Family parse_family(std::string_view name);

// Longest code any closed form will produce.
inline constexpr std::int64_t kMaxFamilyLength = std::int64_t{1} << 20;

WeightDistribution wd_full_space(std::int64_t n, std::int64_t q);
WeightDistribution wd_even(std::int64_t n);
WeightDistribution wd_simplex(std::int64_t m, std::int64_t q);
WeightDistribution wd_rm1(std::int64_t m);
WeightDistribution wd_golay23();
WeightDistribution wd_golay24();
WeightDistribution wd_hamming_binary(std::int64_t m);
WeightDistribution wd_ext_hamming_binary(std::int64_t m);
WeightDistribution wd_hamming_q(std::int64_t m, std::int64_t q);
WeightDistribution wd_rm2(std::int64_t m);
// Weights follow q^m - q^(m-1) - tau q^(m-j-1) (q-1).
WeightDistribution wd_hrm2(std::int64_t q, std::int64_t m);
WeightDistribution wd_prm2(std::int64_t q, std::int64_t m);
// The unique MDS enumerator for (n, k, q); existence is not checked.
WeightDistribution wd_mds(std::int64_t n, std::int64_t k, std::int64_t q);

// Closed-form distribution for any family. Missing or invalid parameters
// throw BadParams naming the parameter.
WeightDistribution family_distribution(const FamilySpec& spec);

// A generator matrix for the family, for the enumeration oracle.
GeneratorMatrix family_generator(const FamilySpec& spec);

// Normalized projective points of PG(dim-1, q) (first nonzero coordinate 1),
// lexicographic by coordinate sequence. Each point is `dim` elements.
std::vector<std::vector<Element>> projective_points(const Field& f, std::size_t dim);

}  // namespace lcw
