#pragma once

#include <iosfwd>
#include <string>

#include "lcw/linear_code.hpp"

namespace lcw {

// Text format: first line "q n k", then k lines of n integers in [0, q).
// Lines whose first non-blank character is '#' are skipped.
GeneratorMatrix parse_matrix(std::istream& in,
                             std::uint64_t field_bound = kDefaultFieldBound);
GeneratorMatrix parse_matrix(const std::string& text,
                             std::uint64_t field_bound = kDefaultFieldBound);

std::string format_matrix(const GeneratorMatrix& m);

}  // namespace lcw
