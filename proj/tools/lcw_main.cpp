// lcw: weight distributions of linear codes, log-concavity checks, MDS thresholds.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcw/lcw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputError {
  std::string message;
};

// Owns a library-allocated string.
struct Text {
  char* p = nullptr;
  ~Text() { lcw_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using Code = Handle<lcw_code, lcw_code_free>;
using Dist = Handle<lcw_distribution, lcw_distribution_free>;

void check(lcw_status s) {
  if (s != LCW_OK) {
    throw InputError{std::string(lcw_status_name(s)) + ": " + lcw_last_error()};
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print(const std::string& s) {
  std::fwrite(s.data(), 1, s.size(), stdout);
  if (!s.empty() && s.back() != '\n') std::fputc('\n', stdout);
}

struct FamilyArgs {
  std::string name;
  std::optional<std::int64_t> n, k, m, q, r;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "code length")->check(CLI::NonNegativeNumber);
    cmd->add_option("--k", k, "dimension")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m", m, "family order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--q", q, "field size")->check(CLI::NonNegativeNumber);
    cmd->add_option("--r", r, "Reed-Muller order")->check(CLI::NonNegativeNumber);
  }

  lcw_family_params params() const {
    lcw_family_params p;
    lcw_family_params_init(&p, name.c_str());
    p.n = n.value_or(-1);
    p.k = k.value_or(-1);
    p.m = m.value_or(-1);
    p.q = q.value_or(-1);
    p.r = r.value_or(-1);
    return p;
  }

  std::string subject() const {
    std::string s = name;
    auto add = [&](const char* key, const std::optional<std::int64_t>& v) {
      if (v) s += " " + std::string(key) + "=" + std::to_string(*v);
    };
    add("n", n);
    add("k", k);
    add("m", m);
    add("q", q);
    add("r", r);
    return s;
  }
};

void emit_distribution(const lcw_distribution* d, const std::string& format, bool nonzero,
                       bool plot) {
  Text t;
  if (format == "csv" || plot) {
    check(lcw_distribution_csv(d, nonzero ? 1 : 0, plot ? 1 : 0, &t.p));
  } else {
    check(lcw_distribution_json(d, &t.p));
  }
  print(t.str());
}

// A distribution from a JSON document (file or "-") or from --family flags.
void load_distribution(const std::string& input, const FamilyArgs& fam, Dist& out,
                       std::string& subject) {
  if (!fam.name.empty()) {
    if (!input.empty()) throw InputError{"give either an input document or --family, not both"};
    const auto p = fam.params();
    check(lcw_family_distribution(&p, &out.p));
    subject = fam.subject();
    return;
  }
  if (input.empty()) throw InputError{"no input: pass a document path, '-' or --family"};
  check(lcw_distribution_parse_json(slurp(input).c_str(), &out.p));
  subject = input == "-" ? "stdin" : input;
}

void load_code(const std::string& path, Code& out) {
  check(lcw_code_parse(slurp(path).c_str(), &out.p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight distributions of linear codes and their log-concavity"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int exit_code = kExitOk;

  // family
  FamilyArgs fam_family;
  std::string fam_format = "json";
  bool fam_nonzero = false, fam_plot = false;
  auto* family = app.add_subcommand("family", "closed-form weight distribution");
  family->add_option("family", fam_family.name, "family name")->required();
  fam_family.attach(family);
  family->add_option("--format", fam_format)->check(CLI::IsMember({"json", "csv"}));
  family->add_flag("--nonzero", fam_nonzero, "csv: only rows with A_i != 0");
  family->add_flag("--plot-csv", fam_plot, "csv with a log10(count) column");
  family->callback([&] {
    const auto p = fam_family.params();
    Dist d;
    check(lcw_family_distribution(&p, &d.p));
    emit_distribution(d.p, fam_format, fam_nonzero, fam_plot);
  });

  // gen
  FamilyArgs gen_family;
  auto* gen = app.add_subcommand("gen", "generator matrix of a family");
  gen->add_option("family", gen_family.name, "family name")->required();
  gen_family.attach(gen);
  gen->callback([&] {
    const auto p = gen_family.params();
    Text t;
    check(lcw_family_matrix_text(&p, &t.p));
    print(t.str());
  });

  // check
  FamilyArgs chk_family;
  std::string chk_input;
  bool chk_newton = false;
  std::size_t chk_budget = 0;
  auto* chk = app.add_subcommand("check", "gap and unimodality report");
  chk->add_option("input", chk_input, "distribution document, or - for stdin");
  chk->add_option("--family", chk_family.name, "use a family instead of a document");
  chk_family.attach(chk);
  chk->add_flag("--newton", chk_newton, "also test the generating polynomial for real roots");
  chk->add_option("--newton-budget", chk_budget, "largest degree for the root count");
  chk->callback([&] {
    Dist d;
    std::string subject;
    load_distribution(chk_input, chk_family, d, subject);
    Text t;
    std::size_t gaps = 0;
    check(lcw_check_report(d.p, subject.c_str(), chk_newton ? 1 : 0, chk_budget, &t.p, &gaps));
    print(t.str());
    exit_code = gaps == 0 ? kExitOk : kExitViolation;
  });

  // dual
  FamilyArgs dual_family;
  std::string dual_input, dual_format = "json";
  auto* dual = app.add_subcommand("dual", "MacWilliams transform of a distribution");
  dual->add_option("input", dual_input, "distribution document, or - for stdin");
  dual->add_option("--family", dual_family.name, "use a family instead of a document");
  dual_family.attach(dual);
  dual->add_option("--format", dual_format)->check(CLI::IsMember({"json", "csv"}));
  dual->callback([&] {
    Dist d, out;
    std::string subject;
    load_distribution(dual_input, dual_family, d, subject);
    check(lcw_distribution_macwilliams(d.p, &out.p));
    emit_distribution(out.p, dual_format, false, false);
  });

  // brute
  std::string brute_path, brute_format = "json";
  std::uint64_t brute_budget = 0;
  unsigned brute_threads = 0;
  auto* brute = app.add_subcommand("brute", "distribution by enumerating every codeword");
  brute->add_option("matrix", brute_path, "generator matrix file, or - for stdin")->required();
  brute->add_option("--budget", brute_budget, "maximum number of codewords (default 2^28)");
  brute->add_option("--threads", brute_threads, "worker threads (default: all cores)");
  brute->add_option("--format", brute_format)->check(CLI::IsMember({"json", "csv"}));
  brute->callback([&] {
    Code c;
    load_code(brute_path, c);
    Dist d;
    check(lcw_code_brute(c.p, brute_budget, brute_threads, &d.p));
    emit_distribution(d.p, brute_format, false, false);
  });

  // tutte
  std::string tutte_path;
  std::uint64_t tutte_budget = 0;
  bool tutte_poly = false;
  auto* tutte = app.add_subcommand("tutte", "distribution through the Tutte polynomial");
  tutte->add_option("matrix", tutte_path, "generator matrix file, or - for stdin")->required();
  tutte->add_option("--budget", tutte_budget, "maximum number of column subsets (default 2^20)");
  tutte->add_flag("--polynomial", tutte_poly, "print T(x,y), chi(t) and the distribution");
  tutte->callback([&] {
    Code c;
    load_code(tutte_path, c);
    Dist d;
    Text details;
    check(lcw_code_tutte(c.p, tutte_budget, &d.p, tutte_poly ? &details.p : nullptr));
    if (tutte_poly) {
      print(details.str());
    } else {
      emit_distribution(d.p, "json", false, false);
    }
  });

  // threshold
  std::int64_t th_n = 0, th_k = 0;
  auto* threshold = app.add_subcommand("threshold", "MDS log-concavity threshold q0(n, k)");
  threshold->add_option("n", th_n)->required();
  threshold->add_option("k", th_k)->required();
  threshold->callback([&] {
    Text t;
    check(lcw_mds_threshold(th_n, th_k, &t.p));
    print(t.str());
  });

  // verdict
  std::int64_t vd_n = 0, vd_k = 0, vd_q = 0;
  auto* verdict = app.add_subcommand("verdict", "is the [n,k]_q MDS enumerator log-concave");
  verdict->add_option("n", vd_n)->required();
  verdict->add_option("k", vd_k)->required();
  verdict->add_option("q", vd_q)->required();
  verdict->callback([&] {
    Text t;
    int lc = 0;
    check(lcw_mds_verdict(vd_n, vd_k, vd_q, &t.p, &lc));
    print(t.str());
    exit_code = lc ? kExitOk : kExitViolation;
  });

  // verify
  std::string vf_suite, vf_m, vf_q, vf_format = "table";
  auto* verify = app.add_subcommand("verify", "theorem sweeps against computed gap counts");
  verify->add_option("suite", vf_suite)
      ->required()
      ->check(CLI::IsMember(
          {"hamming", "ext_hamming", "rm2", "hrm_prm", "mds", "hamming_q", "tutte", "all"}));
  verify->add_option("--m", vf_m, "m range, a..b or a single value");
  verify->add_option("--q", vf_q, "q values, 2,3,4 or a..b");
  verify->add_option("--format", vf_format)->check(CLI::IsMember({"table", "json"}));
  verify->callback([&] {
    std::int64_t lo = -1, hi = -1;
    if (!vf_m.empty()) {
      const auto dots = vf_m.find("..");
      try {
        lo = std::stoll(vf_m.substr(0, dots));
        hi = dots == std::string::npos ? lo : std::stoll(vf_m.substr(dots + 2));
      } catch (const std::exception&) {
        throw InputError{"bad --m range: " + vf_m};
      }
      if (lo < 0 || hi < lo) throw InputError{"bad --m range: " + vf_m};
    }
    std::vector<std::int64_t> qs;
    if (!vf_q.empty()) {
      try {
        const auto dots = vf_q.find("..");
        if (dots != std::string::npos) {
          const auto a = std::stoll(vf_q.substr(0, dots)), b = std::stoll(vf_q.substr(dots + 2));
          for (auto v = a; v <= b; ++v) qs.push_back(v);
        } else {
          std::stringstream ss(vf_q);
          std::string item;
          while (std::getline(ss, item, ',')) qs.push_back(std::stoll(item));
        }
      } catch (const std::exception&) {
        throw InputError{"bad --q list: " + vf_q};
      }
      if (qs.empty()) throw InputError{"bad --q list: " + vf_q};
    }
    Text t;
    std::size_t failed = 0;
    check(lcw_verify(vf_suite.c_str(), lo, hi, qs.data(), qs.size(), vf_format == "json", &t.p,
                     &failed));
    print(t.str());
    exit_code = failed == 0 ? kExitOk : kExitViolation;
  });

  // field
  std::uint64_t fd_q = 0;
  auto* field = app.add_subcommand("field", "modulus of GF(q)");
  field->add_option("q", fd_q)->required();
  field->callback([&] {
    lcw_field* f = nullptr;
    check(lcw_field_make(fd_q, 0, &f));
    uint32_t p = 0, e = 0, q = 0;
    std::size_t len = 0;
    lcw_field_info(f, &p, &e, &q);
    lcw_field_modulus(f, nullptr, 0, &len);
    std::vector<uint32_t> mod(len);
    lcw_field_modulus(f, mod.data(), mod.size(), &len);
    lcw_field_free(f);
    std::string s = "{\"p\":" + std::to_string(p) + ",\"e\":" + std::to_string(e) +
                    ",\"q\":" + std::to_string(q) + ",\"modulus\":[";
    for (std::size_t i = 0; i < mod.size(); ++i) s += (i ? "," : "") + std::to_string(mod[i]);
    print(s + "]}");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "lcw: " << e.message << "\n";
    return kExitUsage;
  }
  std::fflush(stdout);
  return exit_code;
}
