#include "lcw/verify.hpp"

#include <charconv>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lcw/analysis.hpp"
#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/mds.hpp"
#include "lcw/serialize.hpp"
#include "lcw/tutte.hpp"

namespace lcw {
namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) bad_params("not an integer list or range: '" + whole + "'");
  return v;
}

std::string tuple(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::pair<std::int64_t, std::int64_t> m_range(const VerifyOptions& o, std::int64_t lo,
                                              std::int64_t hi) {
  return o.m_range.value_or(std::make_pair(lo, hi));
}

void row(std::vector<VerifyRow>& rows, const char* suite, std::string subject,
         std::string expected, std::string observed, bool pass) {
  rows.push_back({suite, std::move(subject), std::move(expected), std::move(observed), pass});
}

void exact_gaps(std::vector<VerifyRow>& rows, const char* suite, const std::string& subject,
                const WeightDistribution& wd, std::size_t expected) {
  const auto g = gap_report(nonzero(wd)).gap_count;
  row(rows, suite, subject, "gaps=" + std::to_string(expected), "gaps=" + std::to_string(g),
      g == expected);
}

void suite_hamming(std::vector<VerifyRow>& rows, const VerifyOptions& o) {
  const auto [lo, hi] = m_range(o, 3, 14);
  for (auto m = lo; m <= hi; ++m) {
    exact_gaps(rows, "hamming", "H_m m=" + std::to_string(m), wd_hamming_binary(m), m == 4 ? 2 : 0);
  }
}

void suite_ext_hamming(std::vector<VerifyRow>& rows, const VerifyOptions& o) {
  const auto [lo, hi] = m_range(o, 3, 14);
  for (auto m = lo; m <= hi; ++m) {
    exact_gaps(rows, "ext_hamming", "ext H_m m=" + std::to_string(m), wd_ext_hamming_binary(m), 0);
  }
}

void suite_rm2(std::vector<VerifyRow>& rows, const VerifyOptions& o) {
  const auto [lo, hi] = m_range(o, 2, 14);
  for (auto m = lo; m <= hi; ++m) {
    exact_gaps(rows, "rm2", "RM(2,m) m=" + std::to_string(m), wd_rm2(m), 0);
  }
}

void suite_hrm_prm(std::vector<VerifyRow>& rows, const VerifyOptions& o) {
  const auto [lo, hi] = m_range(o, 2, 7);
  const std::vector<std::int64_t> qs =
      o.q_values.empty() ? std::vector<std::int64_t>{2, 3, 4, 5} : o.q_values;
  for (auto q : qs) {
    for (auto m = lo; m <= hi; ++m) {
      const auto h = gap_report(nonzero(wd_hrm2(q, m))).gap_count;
      const bool h_zero = m % 2 == 1;
      row(rows, "hrm_prm", "HRM q=" + std::to_string(q) + " m=" + std::to_string(m),
          h_zero ? "gaps=0" : "gaps<=1", "gaps=" + std::to_string(h), h_zero ? h == 0 : h <= 1);
      const auto p = gap_report(nonzero(wd_prm2(q, m))).gap_count;
      const bool p_zero = m % 2 == 0;
      row(rows, "hrm_prm", "PRM q=" + std::to_string(q) + " m=" + std::to_string(m),
          p_zero ? "gaps=0" : "gaps<=1", "gaps=" + std::to_string(p), p_zero ? p == 0 : p <= 1);
    }
  }
}

std::string interval_text(const RootInterval& r) {
  if (r.exact()) return "= " + r.lo.get_str();
  return "(" + r.lo.get_str() + ", " + r.hi.get_str() + ")";
}

void verdict_row(std::vector<VerifyRow>& rows, const char* suite, std::int64_t n, std::int64_t k,
                 std::int64_t q, bool expect_lc) {
  const auto v = mds_verdict(n, k, q);
  const std::string want = expect_lc ? "log_concave" : "not_log_concave";
  const std::string direct = v.direct.log_concave ? "log_concave" : "not_log_concave";
  row(rows, suite, "direct " + tuple({n, k, q}), want, direct, direct == want);
  if (v.method == VerdictMethod::Theorem) {
    const std::string thm = to_string(v.status);
    row(rows, suite, "theorem " + tuple({n, k, q}), want, thm, thm == want);
  }
}

void suite_mds(std::vector<VerifyRow>& rows, const VerifyOptions&) {
  struct Q0 {
    std::int64_t n, k;
    const char* quad;
    std::int64_t lo;
  };
  for (const Q0& c : {Q0{5, 3, "6q^2 - 44q + 66", 5}, Q0{12, 9, "13q^2 - 209q + 418", 13}}) {
    const auto t = mds_q0(c.n, c.k);
    const std::string s = tuple({c.n, c.k});
    row(rows, "mds", "q0" + s + " quadratic", c.quad, quadratic_string(t),
        quadratic_string(t) == c.quad);
    const std::string want = "(" + std::to_string(c.lo) + ", " + std::to_string(c.lo + 1) + ")";
    const std::string got = t.real_roots ? interval_text(t.larger) : "complex";
    row(rows, "mds", "q0" + s + " larger root", want, got, got == want);
  }
  for (std::int64_t q : {4, 5}) verdict_row(rows, "mds", 5, 3, q, false);
  for (std::int64_t q : {7, 8, 9, 11, 13}) verdict_row(rows, "mds", 5, 3, q, true);
  for (std::int64_t q : {16, 17, 19}) {
    verdict_row(rows, "mds", 12, 9, q, true);
    verdict_row(rows, "mds", 11, 9, q, true);
  }
  verdict_row(rows, "mds", 6, 4, 5, false);
}

void suite_hamming_q(std::vector<VerifyRow>& rows, const VerifyOptions& o) {
  const std::vector<std::int64_t> qs =
      o.q_values.empty() ? std::vector<std::int64_t>{3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}
                         : o.q_values;
  for (auto q : qs) {
    const auto wd = wd_hamming_q(2, q);
    const auto g = gap_report(nonzero(wd));
    const bool want_lc = q >= 9;
    const std::string want = want_lc ? "log_concave" : "not_log_concave";
    const std::string got = g.log_concave ? "log_concave" : "not_log_concave";
    row(rows, "hamming_q", "H_{2," + std::to_string(q) + "} = " + tuple({q + 1, q - 1, q}), want,
        got + " gaps=" + std::to_string(g.gap_count), want_lc == g.log_concave);
  }
}

void tutte_rows(std::vector<VerifyRow>& rows, const std::string& name, const LinearCode& code) {
  const auto tally = subset_rank_tally(code);
  const auto T = tutte_from_tally(tally);
  const auto via = wd_from_tutte(T, code.length(), code.dimension(), code.field().q());
  const auto brute = brute_weight_distribution(code);
  row(rows, "tutte", name + " weight enumerator", "brute force", via == brute ? "equal" : "differs",
      via == brute);
  const auto chi_sum = characteristic_from_tally(tally);
  const auto chi_t = characteristic_from_tutte(T, tally.rank);
  row(rows, "tutte", name + " characteristic", chi_sum.to_string("t"), chi_t.to_string("t"),
      chi_sum == chi_t);
  std::vector<BigInt> mags;
  for (const auto& c : chi_sum.coeffs()) mags.push_back(abs(c));
  const auto g = gap_report(mags);
  row(rows, "tutte", name + " |chi| log-concave", "gaps=0", "gaps=" + std::to_string(g.gap_count),
      g.log_concave);
}

void suite_tutte(std::vector<VerifyRow>& rows, const VerifyOptions&) {
  auto gf2 = Field::make(2);
  auto code = [](Family f, FamilyParams p) { return LinearCode(family_generator({f, p})); };
  tutte_rows(rows, "even [4,3]", code(Family::Even, {.n = 4}));
  tutte_rows(rows, "repetition [3,1]", LinearCode(GeneratorMatrix(gf2, 1, 3, {1, 1, 1})));
  tutte_rows(rows, "H_3", code(Family::Hamming2, {.m = 3}));
  tutte_rows(rows, "rs_mds(5,3,5)", code(Family::RsMds, {.n = 5, .k = 3, .q = 5}));
  tutte_rows(rows, "rm(1,3)", code(Family::Rm, {.m = 3, .r = 1}));
  tutte_rows(rows, "random [10,4]", random_code(gf2, 10, 4, 20240601));
  tutte_rows(rows, "random [12,5]", random_code(gf2, 12, 5, 20240602));
}

const std::vector<std::pair<std::string, std::function<void(std::vector<VerifyRow>&,
                                                            const VerifyOptions&)>>>&
suites() {
  static const std::vector<std::pair<
      std::string, std::function<void(std::vector<VerifyRow>&, const VerifyOptions&)>>>
      s = {{"hamming", suite_hamming}, {"ext_hamming", suite_ext_hamming},
           {"rm2", suite_rm2},         {"hrm_prm", suite_hrm_prm},
           {"mds", suite_mds},         {"hamming_q", suite_hamming_q},
           {"tutte", suite_tutte}};
  return s;
}

}  // namespace

std::vector<VerifyRow> run_verify(const std::string& suite, const VerifyOptions& opts) {
  if (opts.m_range && opts.m_range->first > opts.m_range->second) {
    bad_params("empty --m range");
  }
  std::vector<VerifyRow> rows;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      fn(rows, suite == "all" ? VerifyOptions{} : opts);
      found = true;
    }
  }
  if (!found) bad_params("unknown verify suite '" + suite + "'");
  return rows;
}

std::string verify_table(const std::vector<VerifyRow>& rows) {
  std::size_t w_suite = 5, w_subj = 7, w_exp = 8, w_obs = 8;
  for (const auto& r : rows) {
    w_suite = std::max(w_suite, r.suite.size());
    w_subj = std::max(w_subj, r.subject.size());
    w_exp = std::max(w_exp, r.expected.size());
    w_obs = std::max(w_obs, r.observed.size());
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s, std::size_t w) {
    out << s << std::string(w - s.size() + 2, ' ');
  };
  cell("suite", w_suite);
  cell("subject", w_subj);
  cell("expected", w_exp);
  cell("observed", w_obs);
  out << "result\n";
  std::size_t fails = 0;
  for (const auto& r : rows) {
    cell(r.suite, w_suite);
    cell(r.subject, w_subj);
    cell(r.expected, w_exp);
    cell(r.observed, w_obs);
    out << (r.pass ? "PASS" : "FAIL") << '\n';
    if (!r.pass) ++fails;
  }
  out << rows.size() << " rows, " << fails << " failed\n";
  return out.str();
}

std::string verify_json(const std::vector<VerifyRow>& rows) {
  nlohmann::json a = nlohmann::json::array();
  std::size_t fails = 0;
  for (const auto& r : rows) {
    a.push_back({{"suite", r.suite},
                 {"subject", r.subject},
                 {"expected", r.expected},
                 {"observed", r.observed},
                 {"pass", r.pass}});
    if (!r.pass) ++fails;
  }
  nlohmann::json j;
  j["rows"] = a;
  j["failed"] = fails;
  j["all_pass"] = fails == 0;
  return j.dump(2);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(std::string_view(text).substr(0, dots), text),
          parse_int(std::string_view(text).substr(dots + 2), text)};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find("..") != std::string::npos) {
    const auto [lo, hi] = parse_range(text);
    if (lo > hi || hi - lo > 100000) bad_params("bad range '" + text + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_int(std::string_view(text).substr(start, end - start), text));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace lcw
