// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "lcw/lcw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lcw_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Field) {
  lcw_field* f = nullptr;
  ASSERT_EQ(lcw_field_make(4, 0, &f), LCW_OK);
  uint32_t p = 0, e = 0, q = 0;
  ASSERT_EQ(lcw_field_info(f, &p, &e, &q), LCW_OK);
  EXPECT_EQ(p, 2u);
  EXPECT_EQ(e, 2u);
  EXPECT_EQ(q, 4u);
  size_t len = 0;
  uint32_t mod[3] = {};
  ASSERT_EQ(lcw_field_modulus(f, mod, 3, &len), LCW_OK);
  EXPECT_EQ(len, 3u);
  EXPECT_EQ(mod[0] + mod[1] + mod[2], 3u);
  uint32_t out = 0;
  ASSERT_EQ(lcw_field_arith(f, LCW_FIELD_MUL, 2, 2, &out), LCW_OK);
  EXPECT_EQ(out, 3u);
  EXPECT_EQ(lcw_field_arith(f, LCW_FIELD_INV, 0, 0, &out), LCW_ERR_DIVISION_BY_ZERO);
  EXPECT_NE(std::strlen(lcw_last_error()), 0u);
  lcw_field_free(f);

  EXPECT_EQ(lcw_field_make(6, 0, &f), LCW_ERR_NOT_PRIME_POWER);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(lcw_field_make(1u << 20, 0, &f), LCW_ERR_TOO_LARGE);
  EXPECT_STREQ(lcw_status_name(LCW_ERR_TOO_LARGE), "TooLarge");
}

TEST(CApi, CodeAndBrute) {
  lcw_field* f = nullptr;
  ASSERT_EQ(lcw_field_make(2, 0, &f), LCW_OK);
  const uint32_t dep[] = {1, 1, 0, 1, 1, 0};
  lcw_code* c = nullptr;
  EXPECT_EQ(lcw_code_make(f, 2, 3, dep, &c), LCW_ERR_RANK_DEFICIENT);
  EXPECT_EQ(lcw_last_error_detail(), 1u);

  const uint32_t even[] = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1};
  ASSERT_EQ(lcw_code_make(f, 3, 4, even, &c), LCW_OK);
  size_t n = 0, k = 0;
  ASSERT_EQ(lcw_code_info(c, &n, &k, nullptr), LCW_OK);
  EXPECT_EQ(n, 4u);
  EXPECT_EQ(k, 3u);

  lcw_distribution* d = nullptr;
  ASSERT_EQ(lcw_code_brute(c, 0, 2, &d), LCW_OK);
  char* s = nullptr;
  ASSERT_EQ(lcw_distribution_json(d, &s), LCW_OK);
  EXPECT_EQ(take(s), R"({"counts":["1","0","6","0","1"],"k":3,"n":4,"q":2})");

  lcw_distribution* t = nullptr;
  char* details = nullptr;
  ASSERT_EQ(lcw_code_tutte(c, 0, &t, &details), LCW_OK);
  EXPECT_NE(take(details).find("tutte"), std::string::npos);
  int eq = 0;
  ASSERT_EQ(lcw_distribution_equal(d, t, &eq), LCW_OK);
  EXPECT_EQ(eq, 1);

  lcw_code* dual = nullptr;
  ASSERT_EQ(lcw_code_dual(c, &dual), LCW_OK);
  lcw_distribution* dd = nullptr;
  ASSERT_EQ(lcw_code_brute(dual, 0, 1, &dd), LCW_OK);
  lcw_distribution* mw = nullptr;
  ASSERT_EQ(lcw_distribution_macwilliams(d, &mw), LCW_OK);
  ASSERT_EQ(lcw_distribution_equal(dd, mw, &eq), LCW_OK);
  EXPECT_EQ(eq, 1);

  EXPECT_EQ(lcw_code_brute(c, 4, 1, &t), LCW_ERR_BUDGET_EXCEEDED);
  EXPECT_EQ(lcw_last_error_detail(), 8u);

  lcw_distribution_free(mw);
  lcw_distribution_free(dd);
  lcw_code_free(dual);
  lcw_distribution_free(d);
  lcw_code_free(c);
  lcw_field_free(f);
}

TEST(CApi, ParseAndFamilies) {
  lcw_code* c = nullptr;
  ASSERT_EQ(lcw_code_parse("# comment\n2 3 1\n1 1 1\n", &c), LCW_OK);
  char* text = nullptr;
  ASSERT_EQ(lcw_code_matrix_text(c, &text), LCW_OK);
  EXPECT_EQ(take(text).substr(0, 5), "2 3 1");
  lcw_code_free(c);
  EXPECT_EQ(lcw_code_parse("2 3 1\n1 2 1\n", &c), LCW_ERR_PARSE);

  lcw_family_params p;
  lcw_family_params_init(&p, "hamming2");
  p.m = 5;
  lcw_distribution* d = nullptr;
  ASSERT_EQ(lcw_family_distribution(&p, &d), LCW_OK);
  char* a16 = nullptr;
  ASSERT_EQ(lcw_distribution_count(d, 16, &a16), LCW_OK);
  EXPECT_EQ(take(a16), "9398115");
  EXPECT_EQ(lcw_distribution_count(d, 32, &a16), LCW_ERR_BAD_PARAMS);
  lcw_distribution_free(d);

  lcw_family_params_init(&p, "hamming2");
  EXPECT_EQ(lcw_family_distribution(&p, &d), LCW_ERR_BAD_PARAMS);
  EXPECT_NE(std::string(lcw_last_error()).find("m"), std::string::npos);
  lcw_family_params_init(&p, "nope");
  EXPECT_EQ(lcw_family_distribution(&p, &d), LCW_ERR_BAD_PARAMS);

  lcw_family_params_init(&p, "rs_mds");
  p.n = 5;
  p.k = 3;
  p.q = 5;
  ASSERT_EQ(lcw_code_from_family(&p, &c), LCW_OK);
  ASSERT_EQ(lcw_code_brute(c, 0, 0, &d), LCW_OK);
  char* csv = nullptr;
  ASSERT_EQ(lcw_distribution_csv(d, 1, 0, &csv), LCW_OK);
  EXPECT_EQ(take(csv), "weight,count\n0,1\n3,40\n4,40\n5,44\n");
  lcw_distribution_free(d);
  lcw_code_free(c);
  ASSERT_EQ(lcw_family_matrix_text(&p, &text), LCW_OK);
  EXPECT_EQ(take(text).substr(0, 5), "5 5 3");
}

TEST(CApi, AnalysisAndVerify) {
  lcw_distribution* d = nullptr;
  ASSERT_EQ(lcw_distribution_parse_json(
                R"({"q":2,"n":15,"k":11,"counts":["1","0","0","35","105","168","280","435","435","280","168","105","35","0","0","1"]})",
                &d),
            LCW_OK);
  char* report = nullptr;
  size_t gaps = 0;
  ASSERT_EQ(lcw_check_report(d, "H_4", 1, 0, &report, &gaps), LCW_OK);
  const auto r = take(report);
  EXPECT_EQ(gaps, 2u);
  EXPECT_NE(r.find("-1176"), std::string::npos);
  EXPECT_NE(r.find("all_real"), std::string::npos);
  ASSERT_EQ(lcw_check_report(d, "H_4", 1, 3, &report, &gaps), LCW_OK);
  EXPECT_NE(take(report).find("skipped"), std::string::npos);
  lcw_distribution_free(d);

  EXPECT_EQ(lcw_distribution_parse_json("{", &d), LCW_ERR_PARSE);

  char* j = nullptr;
  ASSERT_EQ(lcw_mds_threshold(5, 3, &j), LCW_OK);
  EXPECT_NE(take(j).find("6q^2 - 44q + 66"), std::string::npos);
  EXPECT_EQ(lcw_mds_threshold(5, 2, &j), LCW_ERR_BAD_PARAMS);
  int lc = -1;
  ASSERT_EQ(lcw_mds_verdict(5, 3, 7, &j, &lc), LCW_OK);
  lcw_string_free(j);
  EXPECT_EQ(lc, 1);
  ASSERT_EQ(lcw_mds_verdict(5, 3, 5, &j, &lc), LCW_OK);
  lcw_string_free(j);
  EXPECT_EQ(lc, 0);

  size_t failed = 99;
  ASSERT_EQ(lcw_verify("rm2", 2, 8, nullptr, 0, 1, &j, &failed), LCW_OK);
  EXPECT_NE(take(j).find("\"all_pass\": true"), std::string::npos);
  EXPECT_EQ(failed, 0u);
  EXPECT_EQ(lcw_verify("nope", -1, -1, nullptr, 0, 0, &j, &failed), LCW_ERR_BAD_PARAMS);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(lcw_field_make(2, 0, nullptr), LCW_ERR_NULL_ARGUMENT);
  EXPECT_EQ(lcw_code_parse(nullptr, nullptr), LCW_ERR_NULL_ARGUMENT);
  EXPECT_EQ(lcw_distribution_json(nullptr, nullptr), LCW_ERR_NULL_ARGUMENT);
  lcw_field_free(nullptr);
  lcw_code_free(nullptr);
  lcw_distribution_free(nullptr);
  lcw_string_free(nullptr);
}
