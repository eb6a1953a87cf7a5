#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcw {

struct VerifyRow {
  std::string suite;
  std::string subject;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerifyOptions {
  std::optional<std::pair<std::int64_t, std::int64_t>> m_range;  // inclusive
  std::vector<std::int64_t> q_values;                             // empty = suite default
};

// Suites: hamming, ext_hamming, rm2, hrm_prm, mds, hamming_q, tutte, all.
// Throws BadParams for an unknown suite or out-of-range flags.
std::vector<VerifyRow> run_verify(const std::string& suite, const VerifyOptions& opts = {});

std::string verify_table(const std::vector<VerifyRow>& rows);
std::string verify_json(const std::vector<VerifyRow>& rows);

// "3..14" or "7"; throws BadParams.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);
// "2,3,5" or "2..5"; throws BadParams.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace lcw
