#include "lcw/error.hpp"

namespace lcw {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::InexactTransform: return "InexactTransform";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace lcw
