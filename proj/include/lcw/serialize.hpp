#pragma once

#include <string>

#include "lcw/analysis.hpp"
#include "lcw/linear_code.hpp"
#include "lcw/mds.hpp"
#include "lcw/polynomial.hpp"

namespace lcw {

// {"q":int,"n":int,"k":int,"counts":["1","0",...]}
std::string distribution_json(const WeightDistribution& wd);
// Counts may be decimal strings or JSON integers. Throws Parse on malformed
// input or when the counts are not a valid distribution.
WeightDistribution parse_distribution_json(const std::string& text);

// "weight,count" rows with a header; plot adds log10(count) to 6 places.
std::string distribution_csv(const WeightDistribution& wd, bool nonzero_only, bool plot);

// newton_skipped, when non-empty, replaces the Newton block with a reason.
std::string report_json(const std::string& subject, const NonzeroDistribution& nzd,
                        const GapReport& report, const RealRootCheck* newton = nullptr,
                        const std::string& newton_skipped = "");

std::string threshold_json(const ThresholdResult& t);
std::string verdict_json(const MdsVerdict& v);

std::string tutte_json(const Bivariate& tutte, const Univariate& chi,
                       const WeightDistribution& wd);

// "6q^2 - 44q + 66"
std::string quadratic_string(const ThresholdResult& t);

}  // namespace lcw
