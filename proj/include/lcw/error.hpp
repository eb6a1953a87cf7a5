#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcw {

enum class ErrorCode {
  NotPrimePower,
  TooLarge,
  DivisionByZero,
  RankDeficient,
  BudgetExceeded,
  BadParams,
  InexactDivision,
  InexactTransform,
  ZeroDenominator,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library. `detail` carries the numeric payload
// of the error where there is one (actual rank for RankDeficient, required
// work for BudgetExceeded, saturated at UINT64_MAX).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::uint64_t detail = 0)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::uint64_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::uint64_t detail_;
};

[[noreturn]] inline void bad_params(const std::string& what) {
  throw Error(ErrorCode::BadParams, what);
}

}  // namespace lcw
