#include <gtest/gtest.h>

#include <json.hpp>

#include "lcw/error.hpp"
#include "lcw/families.hpp"
#include "lcw/serialize.hpp"
#include "lcw/verify.hpp"
#include "oracles.hpp"

using namespace lcw;
using nlohmann::json;

TEST(Serialize, DistributionRoundTrip) {
  for (const auto& wd : {wd_hamming_binary(5), wd_golay24(), wd_hrm2(3, 4), wd_mds(9, 4, 8),
                         wd_rm2(9)}) {
    const auto text = distribution_json(wd);
    EXPECT_EQ(parse_distribution_json(text), wd);
    const auto j = json::parse(text);
    EXPECT_TRUE(j["counts"][0].is_string());
  }
}

TEST(Serialize, BigCountsStayExact) {
  const auto wd = wd_hamming_binary(9);
  const auto j = json::parse(distribution_json(wd));
  EXPECT_EQ(j["counts"][255].get<std::string>(), wd.counts[255].get_str());
  EXPECT_GT(wd.counts[255], BigInt("18446744073709551616"));
}

TEST(Serialize, AcceptsIntegerCounts) {
  const auto wd = parse_distribution_json(R"({"q":2,"n":4,"k":3,"counts":[1,0,6,0,1]})");
  EXPECT_EQ(wd.counts, oracle::counts({1, 0, 6, 0, 1}));
}

TEST(Serialize, RejectsBadDocuments) {
  for (const char* bad : {"", "{", "[]", R"({"q":2,"n":4,"k":3})",
                          R"({"q":2,"n":4,"k":3,"counts":["1","0","6","0"]})",
                          R"({"q":2,"n":4,"k":3,"counts":["1","0","6","0","2"]})",
                          R"({"q":2,"n":4,"k":3,"counts":["1","x","6","0","1"]})",
                          R"({"q":2,"n":2,"k":1,"counts":["1","-1","2"]})"}) {
    try {
      parse_distribution_json(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(Serialize, Csv) {
  const auto wd = wd_even(4);
  EXPECT_EQ(distribution_csv(wd, false, false), "weight,count\n0,1\n1,0\n2,6\n3,0\n4,1\n");
  EXPECT_EQ(distribution_csv(wd, true, false), "weight,count\n0,1\n2,6\n4,1\n");
  EXPECT_EQ(distribution_csv(wd, true, true),
            "weight,count,log10_count\n0,1,0.000000\n2,6,0.778151\n4,1,0.000000\n");
}

TEST(Serialize, ReportWitnesses) {
  const auto nz = nonzero(wd_hamming_binary(4));
  const auto j = json::parse(report_json("H_4", nz, gap_report(nz)));
  EXPECT_EQ(j["gap_count"], 2);
  EXPECT_EQ(j["violations"], json::array({3, 8}));
  ASSERT_EQ(j["witnesses"].size(), 2u);
  EXPECT_EQ(j["witnesses"][0]["defect"], "-1176");
  EXPECT_EQ(j["witnesses"][0]["index"], 3);
  EXPECT_EQ(j["log_concave"], false);
  EXPECT_FALSE(j.contains("newton"));
  const auto s = json::parse(report_json("H_4", nz, gap_report(nz), nullptr, "too big"));
  EXPECT_EQ(s["newton"]["skipped"], "too big");
}

TEST(Serialize, ThresholdAndVerdict) {
  const auto t = json::parse(threshold_json(mds_q0(5, 3)));
  EXPECT_EQ(t["quadratic"], "6q^2 - 44q + 66");
  EXPECT_EQ(t["larger_root_interval"], json::array({"5", "6"}));
  const auto v = json::parse(verdict_json(mds_verdict(6, 4, 5)));
  EXPECT_EQ(v["status"], "not_log_concave");
  EXPECT_EQ(quadratic_string(mds_q0(12, 9)), "13q^2 - 209q + 418");
}

TEST(Verify, Ranges) {
  EXPECT_EQ(parse_range("3..14"), (std::pair<std::int64_t, std::int64_t>{3, 14}));
  EXPECT_EQ(parse_range("7"), (std::pair<std::int64_t, std::int64_t>{7, 7}));
  EXPECT_EQ(parse_int_list("2,3,5"), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(parse_int_list("2..4"), (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_THROW(parse_range("a..b"), Error);
  EXPECT_THROW(parse_int_list(""), Error);
  EXPECT_THROW(run_verify("nope"), Error);
}

TEST(Verify, HammingSuite) {
  VerifyOptions o;
  o.m_range = {3, 10};
  const auto rows = run_verify("hamming", o);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.subject;
  // Output is stable between runs.
  EXPECT_EQ(verify_table(rows), verify_table(run_verify("hamming", o)));
  const auto j = json::parse(verify_json(rows));
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["failed"], 0);
}

TEST(Verify, HrmPrmSuite) {
  VerifyOptions o;
  o.m_range = {2, 5};
  o.q_values = {2, 3};
  const auto rows = run_verify("hrm_prm", o);
  EXPECT_EQ(rows.size(), 16u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.subject;
}
