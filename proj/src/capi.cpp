#include "lcw/lcw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "lcw/analysis.hpp"
#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/macwilliams.hpp"
#include "lcw/matrix_io.hpp"
#include "lcw/mds.hpp"
#include "lcw/serialize.hpp"
#include "lcw/tutte.hpp"
#include "lcw/verify.hpp"

struct lcw_field {
  lcw::FieldPtr f;
};

struct lcw_code {
  lcw::LinearCode c;
};

struct lcw_distribution {
  lcw::WeightDistribution d;
};

namespace {

thread_local std::string g_error;
thread_local std::uint64_t g_detail = 0;

lcw_status map_code(lcw::ErrorCode c) {
  using E = lcw::ErrorCode;
  switch (c) {
    case E::NotPrimePower: return LCW_ERR_NOT_PRIME_POWER;
    case E::TooLarge: return LCW_ERR_TOO_LARGE;
    case E::DivisionByZero: return LCW_ERR_DIVISION_BY_ZERO;
    case E::RankDeficient: return LCW_ERR_RANK_DEFICIENT;
    case E::BudgetExceeded: return LCW_ERR_BUDGET_EXCEEDED;
    case E::BadParams: return LCW_ERR_BAD_PARAMS;
    case E::InexactDivision: return LCW_ERR_INEXACT_DIVISION;
    case E::InexactTransform: return LCW_ERR_INEXACT_TRANSFORM;
    case E::ZeroDenominator: return LCW_ERR_ZERO_DENOMINATOR;
    case E::Parse: return LCW_ERR_PARSE;
  }
  return LCW_ERR_INTERNAL;
}

lcw_status fail(lcw_status s, std::string msg, std::uint64_t detail = 0) {
  g_error = std::move(msg);
  g_detail = detail;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
lcw_status guard(F&& body) {
  try {
    g_error.clear();
    g_detail = 0;
    body();
    return LCW_OK;
  } catch (const lcw::Error& e) {
    return fail(map_code(e.code()), e.what(), e.detail());
  } catch (const std::bad_alloc&) {
    return fail(LCW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LCW_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

lcw::FamilySpec to_spec(const lcw_family_params* p) {
  if (!p->family) lcw::bad_params("family name is NULL");
  lcw::FamilySpec s;
  s.family = lcw::parse_family(p->family);
  auto opt = [](std::int64_t v) {
    return v < 0 ? std::optional<std::int64_t>() : std::optional<std::int64_t>(v);
  };
  s.params.n = opt(p->n);
  s.params.k = opt(p->k);
  s.params.m = opt(p->m);
  s.params.q = opt(p->q);
  s.params.r = opt(p->r);
  return s;
}

#define LCW_REQUIRE(ptr)                                                  \
  do {                                                                    \
    if (!(ptr)) return fail(LCW_ERR_NULL_ARGUMENT, #ptr " is NULL");      \
  } while (0)

}  // namespace

extern "C" {

void lcw_family_params_init(lcw_family_params* p, const char* family) {
  if (!p) return;
  p->family = family;
  p->n = p->k = p->m = p->q = p->r = -1;
}

const char* lcw_status_name(lcw_status s) {
  switch (s) {
    case LCW_OK: return "OK";
    case LCW_ERR_NOT_PRIME_POWER: return "NotPrimePower";
    case LCW_ERR_TOO_LARGE: return "TooLarge";
    case LCW_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case LCW_ERR_RANK_DEFICIENT: return "RankDeficient";
    case LCW_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case LCW_ERR_BAD_PARAMS: return "BadParams";
    case LCW_ERR_INEXACT_DIVISION: return "InexactDivision";
    case LCW_ERR_INEXACT_TRANSFORM: return "InexactTransform";
    case LCW_ERR_ZERO_DENOMINATOR: return "ZeroDenominator";
    case LCW_ERR_PARSE: return "Parse";
    case LCW_ERR_NULL_ARGUMENT: return "NullArgument";
    case LCW_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* lcw_last_error(void) { return g_error.c_str(); }
uint64_t lcw_last_error_detail(void) { return g_detail; }
void lcw_string_free(char* s) { std::free(s); }

lcw_status lcw_field_make(uint64_t q, uint64_t bound, lcw_field** out) {
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    auto f = lcw::Field::make(q, bound ? bound : lcw::kDefaultFieldBound);
    *out = new lcw_field{std::move(f)};
  });
}

void lcw_field_free(lcw_field* f) { delete f; }

lcw_status lcw_field_info(const lcw_field* f, uint32_t* p, uint32_t* e, uint32_t* q) {
  LCW_REQUIRE(f);
  if (p) *p = f->f->p();
  if (e) *e = f->f->e();
  if (q) *q = f->f->q();
  return LCW_OK;
}

lcw_status lcw_field_modulus(const lcw_field* f, uint32_t* coeffs, size_t cap, size_t* len) {
  LCW_REQUIRE(f);
  LCW_REQUIRE(len);
  const auto& m = f->f->modulus();
  *len = m.size();
  if (coeffs && cap >= m.size()) std::copy(m.begin(), m.end(), coeffs);
  return LCW_OK;
}

lcw_status lcw_field_arith(const lcw_field* f, lcw_field_op op, int64_t a, int64_t b,
                           uint32_t* out) {
  LCW_REQUIRE(f);
  LCW_REQUIRE(out);
  if (op < LCW_FIELD_ADD || op > LCW_FIELD_POW) {
    return fail(LCW_ERR_BAD_PARAMS, "unknown field operation");
  }
  return guard([&] { *out = f->f->apply(static_cast<lcw::FieldOp>(op), a, b); });
}

lcw_status lcw_code_make(const lcw_field* f, size_t k, size_t n, const uint32_t* entries,
                         lcw_code** out) {
  LCW_REQUIRE(f);
  LCW_REQUIRE(out);
  *out = nullptr;
  if (k * n > 0) LCW_REQUIRE(entries);
  return guard([&] {
    if (k < 1 || k > n) lcw::bad_params("need 1 <= k <= n");
    lcw::GeneratorMatrix g(f->f, k, n, std::vector<lcw::Element>(entries, entries + k * n));
    *out = new lcw_code{lcw::LinearCode(g)};
  });
}

lcw_status lcw_code_parse(const char* text, lcw_code** out) {
  LCW_REQUIRE(text);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_code{lcw::LinearCode(lcw::parse_matrix(std::string(text)))}; });
}

lcw_status lcw_code_from_family(const lcw_family_params* p, lcw_code** out) {
  LCW_REQUIRE(p);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_code{lcw::LinearCode(lcw::family_generator(to_spec(p)))}; });
}

lcw_status lcw_code_dual(const lcw_code* c, lcw_code** out) {
  LCW_REQUIRE(c);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_code{c->c.dual()}; });
}

void lcw_code_free(lcw_code* c) { delete c; }

lcw_status lcw_code_info(const lcw_code* c, size_t* n, size_t* k, uint32_t* q) {
  LCW_REQUIRE(c);
  if (n) *n = c->c.length();
  if (k) *k = c->c.dimension();
  if (q) *q = c->c.field().q();
  return LCW_OK;
}

lcw_status lcw_code_matrix_text(const lcw_code* c, char** out) {
  LCW_REQUIRE(c);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = dup_string(lcw::format_matrix(c->c.generator())); });
}

lcw_status lcw_code_brute(const lcw_code* c, uint64_t budget, unsigned workers,
                          lcw_distribution** out) {
  LCW_REQUIRE(c);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] {
    auto wd = lcw::brute_weight_distribution(c->c, budget ? budget : lcw::kDefaultBruteBudget,
                                             workers);
    *out = new lcw_distribution{std::move(wd)};
  });
}

lcw_status lcw_code_tutte(const lcw_code* c, uint64_t budget, lcw_distribution** out,
                          char** details) {
  LCW_REQUIRE(c);
  LCW_REQUIRE(out);
  *out = nullptr;
  if (details) *details = nullptr;
  return guard([&] {
    const auto tally = lcw::subset_rank_tally(c->c, budget ? budget : lcw::kDefaultTutteBudget);
    const auto T = lcw::tutte_from_tally(tally);
    auto wd = lcw::wd_from_tutte(T, c->c.length(), c->c.dimension(), c->c.field().q());
    if (details) {
      *details = dup_string(lcw::tutte_json(T, lcw::characteristic_from_tally(tally), wd));
    }
    *out = new lcw_distribution{std::move(wd)};
  });
}

lcw_status lcw_family_distribution(const lcw_family_params* p, lcw_distribution** out) {
  LCW_REQUIRE(p);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_distribution{lcw::family_distribution(to_spec(p))}; });
}

lcw_status lcw_family_matrix_text(const lcw_family_params* p, char** out) {
  LCW_REQUIRE(p);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = dup_string(lcw::format_matrix(lcw::family_generator(to_spec(p)))); });
}

lcw_status lcw_distribution_parse_json(const char* text, lcw_distribution** out) {
  LCW_REQUIRE(text);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_distribution{lcw::parse_distribution_json(text)}; });
}

void lcw_distribution_free(lcw_distribution* d) { delete d; }

lcw_status lcw_distribution_info(const lcw_distribution* d, uint64_t* q, size_t* n, size_t* k) {
  LCW_REQUIRE(d);
  if (q) *q = d->d.q;
  if (n) *n = d->d.n;
  if (k) *k = d->d.k;
  return LCW_OK;
}

lcw_status lcw_distribution_count(const lcw_distribution* d, size_t i, char** out) {
  LCW_REQUIRE(d);
  LCW_REQUIRE(out);
  *out = nullptr;
  if (i >= d->d.counts.size()) return fail(LCW_ERR_BAD_PARAMS, "weight index out of range");
  return guard([&] { *out = dup_string(d->d.counts[i].get_str()); });
}

lcw_status lcw_distribution_equal(const lcw_distribution* a, const lcw_distribution* b,
                                  int* equal) {
  LCW_REQUIRE(a);
  LCW_REQUIRE(b);
  LCW_REQUIRE(equal);
  *equal = a->d == b->d ? 1 : 0;
  return LCW_OK;
}

lcw_status lcw_distribution_json(const lcw_distribution* d, char** out) {
  LCW_REQUIRE(d);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = dup_string(lcw::distribution_json(d->d)); });
}

lcw_status lcw_distribution_csv(const lcw_distribution* d, int nonzero_only, int plot,
                                char** out) {
  LCW_REQUIRE(d);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = dup_string(lcw::distribution_csv(d->d, nonzero_only, plot)); });
}

lcw_status lcw_distribution_macwilliams(const lcw_distribution* d, lcw_distribution** out) {
  LCW_REQUIRE(d);
  LCW_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new lcw_distribution{lcw::macwilliams(d->d)}; });
}

lcw_status lcw_check_report(const lcw_distribution* d, const char* subject, int newton,
                            size_t degree_budget, char** report_json, size_t* gap_count) {
  LCW_REQUIRE(d);
  LCW_REQUIRE(report_json);
  *report_json = nullptr;
  return guard([&] {
    const auto nzd = lcw::nonzero(d->d);
    const auto report = lcw::gap_report(nzd);
    const std::string subj = subject ? subject : "";
    std::string text;
    if (newton) {
      try {
        const auto rr = lcw::newton_real_rooted(
            nzd, degree_budget ? degree_budget : lcw::kDefaultNewtonDegreeBudget);
        text = lcw::report_json(subj, nzd, report, &rr);
      } catch (const lcw::Error& e) {
        if (e.code() != lcw::ErrorCode::BudgetExceeded) throw;
        text = lcw::report_json(subj, nzd, report, nullptr, e.what());
      }
    } else {
      text = lcw::report_json(subj, nzd, report);
    }
    if (gap_count) *gap_count = report.gap_count;
    *report_json = dup_string(text);
  });
}

lcw_status lcw_mds_threshold(int64_t n, int64_t k, char** json) {
  LCW_REQUIRE(json);
  *json = nullptr;
  return guard([&] { *json = dup_string(lcw::threshold_json(lcw::mds_q0(n, k))); });
}

lcw_status lcw_mds_verdict(int64_t n, int64_t k, int64_t q, char** json, int* log_concave) {
  LCW_REQUIRE(json);
  *json = nullptr;
  return guard([&] {
    const auto v = lcw::mds_verdict(n, k, q);
    if (log_concave) *log_concave = v.status == lcw::VerdictStatus::LogConcave ? 1 : 0;
    *json = dup_string(lcw::verdict_json(v));
  });
}

lcw_status lcw_verify(const char* suite, int64_t m_lo, int64_t m_hi, const int64_t* q_values,
                      size_t q_count, int json_format, char** out, size_t* failed) {
  LCW_REQUIRE(suite);
  LCW_REQUIRE(out);
  *out = nullptr;
  if (q_count > 0) LCW_REQUIRE(q_values);
  return guard([&] {
    lcw::VerifyOptions opts;
    if (m_lo >= 0 || m_hi >= 0) {
      if (m_lo < 0 || m_hi < 0) lcw::bad_params("--m needs both ends of the range");
      opts.m_range = std::make_pair(m_lo, m_hi);
    }
    opts.q_values.assign(q_values, q_values + q_count);
    const auto rows = lcw::run_verify(suite, opts);
    std::size_t bad = 0;
    for (const auto& r : rows) bad += r.pass ? 0 : 1;
    if (failed) *failed = bad;
    *out = dup_string(json_format ? lcw::verify_json(rows) : lcw::verify_table(rows));
  });
}

}  // extern "C"
