#include "lcw/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lcw/error.hpp"

namespace lcw {

using nlohmann::json;

namespace {

json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string log10_fixed(const BigInt& v) {
  if (v <= 0) return "";
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  const double l = std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", l);
  return buf;
}

json gap_json(const GapReport& r) {
  json j;
  j["gap_count"] = r.gap_count;
  j["violations"] = r.violations;
  j["log_concave"] = r.log_concave;
  j["unimodal"] = r.unimodal;
  j["peak_index"] = r.peak_index;
  json w = json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"index", x.index},
                 {"prev", x.prev.get_str()},
                 {"mid", x.mid.get_str()},
                 {"next", x.next.get_str()},
                 {"defect", x.defect.get_str()}});
  }
  j["witnesses"] = w;
  return j;
}

json threshold_obj(const ThresholdResult& t) {
  json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["m"] = t.m;
  j["scale"] = t.scale;
  j["coeffs"] = {{"c2", t.c2.get_str()}, {"c1", t.c1.get_str()}, {"c0", t.c0.get_str()}};
  j["quadratic"] = quadratic_string(t);
  j["discriminant"] = t.discriminant.get_str();
  j["closed_form_discriminant"] = t.closed_form_discriminant.get_str();
  j["real_roots"] = t.real_roots;
  j["roots_coincide"] = t.roots_coincide;
  if (t.real_roots) {
    j["larger_root_interval"] = {t.larger.lo.get_str(), t.larger.hi.get_str()};
    j["smaller_root_interval"] = {t.smaller.lo.get_str(), t.smaller.hi.get_str()};
    j["q_min_integer"] = t.q_min_integer.get_str();
  }
  return j;
}

}  // namespace

std::string distribution_json(const WeightDistribution& wd) {
  json j;
  j["q"] = wd.q;
  j["n"] = wd.n;
  j["k"] = wd.k;
  j["counts"] = strings(wd.counts);
  return j.dump();
}

WeightDistribution parse_distribution_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("distribution JSON: ") + e.what());
  }
  auto need_uint = [&](const char* key) -> std::uint64_t {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned()) {
      throw Error(ErrorCode::Parse,
                  std::string("distribution JSON: field '") + key + "' must be a nonnegative integer");
    }
    return j[key].get<std::uint64_t>();
  };
  WeightDistribution wd;
  wd.q = need_uint("q");
  wd.n = need_uint("n");
  wd.k = need_uint("k");
  if (!j.contains("counts") || !j["counts"].is_array()) {
    throw Error(ErrorCode::Parse, "distribution JSON: field 'counts' must be an array");
  }
  for (const auto& c : j["counts"]) {
    if (c.is_string()) {
      wd.counts.push_back(from_decimal(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      wd.counts.push_back(BigInt(c.dump()));
    } else {
      throw Error(ErrorCode::Parse, "distribution JSON: counts must be decimal strings");
    }
  }
  if (wd.q < 2 || wd.counts.size() != wd.n + 1 || !wd.valid()) {
    throw Error(ErrorCode::Parse,
                "distribution JSON: counts are not a weight distribution "
                "(need n + 1 nonnegative counts, A_0 = 1, sum q^k)");
  }
  return wd;
}

std::string distribution_csv(const WeightDistribution& wd, bool nonzero_only, bool plot) {
  std::ostringstream out;
  out << (plot ? "weight,count,log10_count\n" : "weight,count\n");
  for (std::size_t i = 0; i < wd.counts.size(); ++i) {
    const BigInt& c = wd.counts[i];
    if (nonzero_only && c == 0) continue;
    out << i << ',' << c.get_str();
    if (plot) out << ',' << log10_fixed(c);
    out << '\n';
  }
  return out.str();
}

std::string report_json(const std::string& subject, const NonzeroDistribution& nzd,
                        const GapReport& report, const RealRootCheck* newton,
                        const std::string& newton_skipped) {
  json j;
  j["subject"] = subject;
  j["weights"] = nzd.weights;
  j["counts"] = strings(nzd.counts);
  const json gaps = gap_json(report);
  for (auto& [k, v] : gaps.items()) j[k] = v;
  if (newton) {
    j["newton"] = {{"degree", newton->degree},
                   {"real_roots", newton->real_roots},
                   {"distinct_real_roots", newton->distinct_real_roots},
                   {"all_real", newton->all_real}};
  } else if (!newton_skipped.empty()) {
    j["newton"] = {{"skipped", newton_skipped}};
  }
  return j.dump(2);
}

std::string quadratic_string(const ThresholdResult& t) {
  return Univariate({t.c0, t.c1, t.c2}).to_string("q");
}

std::string threshold_json(const ThresholdResult& t) { return threshold_obj(t).dump(2); }

std::string verdict_json(const MdsVerdict& v) {
  json j;
  j["n"] = v.n;
  j["k"] = v.k;
  j["q"] = v.q;
  j["status"] = to_string(v.status);
  j["method"] = to_string(v.method);
  j["notes"] = v.notes;
  if (v.threshold) j["threshold"] = threshold_obj(*v.threshold);
  json d = gap_json(v.direct);
  d["weights"] = v.direct_nonzero.weights;
  d["counts"] = strings(v.direct_nonzero.counts);
  d["status"] = v.direct.log_concave ? "log_concave" : "not_log_concave";
  j["direct"] = d;
  return j.dump(2);
}

std::string tutte_json(const Bivariate& tutte, const Univariate& chi,
                       const WeightDistribution& wd) {
  json j;
  j["q"] = wd.q;
  j["n"] = wd.n;
  j["k"] = wd.k;
  j["counts"] = strings(wd.counts);
  json terms = json::array();
  for (const auto& [key, c] : tutte.terms()) {
    terms.push_back({{"x", key.first}, {"y", key.second}, {"coeff", c.get_str()}});
  }
  j["tutte"] = terms;
  j["tutte_text"] = tutte.to_string();
  j["characteristic"] = strings(chi.coeffs());
  j["characteristic_text"] = chi.to_string("t");
  return j.dump(2);
}

}  // namespace lcw
