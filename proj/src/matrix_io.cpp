#include "lcw/matrix_io.hpp"

#include <istream>
#include <sstream>

#include "lcw/error.hpp"

namespace lcw {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::Parse, "matrix: " + what);
}

// Next non-comment, non-blank line; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

GeneratorMatrix parse_matrix(std::istream& in, std::uint64_t field_bound) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) parse_error("missing header line 'q n k'");

  long long q = 0, n = 0, k = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> q >> n >> k) || (hs >> extra)) {
      parse_error("line " + std::to_string(lineno) + ": expected 'q n k'");
    }
  }
  if (q < 2 || n < 1 || k < 1 || k > n) {
    parse_error("header needs q >= 2 and 1 <= k <= n");
  }
  auto field = Field::make(static_cast<std::uint64_t>(q), field_bound);

  std::vector<Element> entries;
  entries.reserve(static_cast<std::size_t>(k * n));
  for (long long r = 0; r < k; ++r) {
    if (!next_line(in, line, lineno)) {
      parse_error("expected " + std::to_string(k) + " rows, found " + std::to_string(r));
    }
    std::istringstream rs(line);
    long long v = 0;
    long long count = 0;
    while (rs >> v) {
      if (v < 0 || v >= q) {
        parse_error("line " + std::to_string(lineno) + ": entry " + std::to_string(v) +
                    " outside [0, " + std::to_string(q) + ")");
      }
      entries.push_back(static_cast<Element>(v));
      ++count;
    }
    if (!rs.eof()) parse_error("line " + std::to_string(lineno) + ": non-integer token");
    if (count != n) {
      parse_error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                  " entries, found " + std::to_string(count));
    }
  }
  if (next_line(in, line, lineno)) {
    parse_error("line " + std::to_string(lineno) + ": trailing data after " +
                std::to_string(k) + " rows");
  }
  return GeneratorMatrix(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n),
                         std::move(entries));
}

GeneratorMatrix parse_matrix(const std::string& text, std::uint64_t field_bound) {
  std::istringstream in(text);
  return parse_matrix(in, field_bound);
}

std::string format_matrix(const GeneratorMatrix& m) {
  std::ostringstream out;
  out << m.field().q() << ' ' << m.cols() << ' ' << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lcw
