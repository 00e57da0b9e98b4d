#include "powersumkit/oracles.hpp"
#include "powersumkit/tables.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

namespace powersumkit {
namespace {

TEST(Tables, FamilyNames) {
  for (auto f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(parse_family("central_U"), TableFamily::CentralBigU);
  EXPECT_EQ(parse_family("central_u"), TableFamily::CentralU);
  EXPECT_FALSE(parse_family("stirling3").has_value());
}

TEST(Tables, LegendreStirlingRowsMatchGolden) {
  const auto ls1 = make_table(TableFamily::LS1, 7);
  const auto ls2 = make_table(TableFamily::LS2, 7);
  ASSERT_EQ(ls1.rows.size(), 8u);
  for (std::size_t n = 0; n <= 7; ++n) {
    ASSERT_EQ(ls1.rows[n].size(), n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      EXPECT_EQ(ls1.rows[n][j], oracle::kLegendreStirlingFirst[n][j]);
      EXPECT_EQ(ls2.rows[n][j], oracle::kLegendreStirlingSecond[n][j]);
    }
  }
  EXPECT_EQ(render_csv(ls1).substr(render_csv(ls1).find("0,-86400")), "0,-86400,72000,-17544,1708,-70,1\n"
                                                                     "0,3628800,-3110400,808848,-89280,4648,-112,1\n");
  const auto csv2 = render_csv(ls2);
  EXPECT_NE(csv2.find("\n0,64,11648,47824,25664,3192,112,1\n"), std::string::npos);
}

TEST(Tables, RowZero) {
  const auto t = make_table(TableFamily::Stirling1, 0);
  EXPECT_EQ(render_csv(t), "1\n");
  EXPECT_EQ(render_json(t), "{\"family\":\"stirling1\",\"rows\":[[\"1\"]]}\n");
}

TEST(Tables, BernoulliRowsArePolynomialCoefficients) {
  const auto t = make_table(TableFamily::Bernoulli, 3);
  EXPECT_EQ(render_csv(t), "1\n-1/2,1\n1/6,-1,1\n0,1/2,-3/2,1\n");
}

TEST(Tables, RowCap) {
  EXPECT_THROW(make_table(TableFamily::Stirling2, 11, 10), DomainError);
  EXPECT_NO_THROW(make_table(TableFamily::Stirling2, 10, 10));
  EXPECT_THROW(make_table(TableFamily::Stirling2, -1), DomainError);
}

TEST(Tables, RowCapFromEnvironment) {
  ::setenv("POWERSUMKIT_ROWS_CAP", "5", 1);
  EXPECT_EQ(rows_cap(), 5);
  ::setenv("POWERSUMKIT_ROWS_CAP", "junk", 1);
  EXPECT_EQ(rows_cap(), kDefaultRowsCap);
  ::unsetenv("POWERSUMKIT_ROWS_CAP");
  EXPECT_EQ(rows_cap(), kDefaultRowsCap);
}

TEST(Tables, JsonAndCsvRoundTripForEveryFamily) {
  for (auto f : kAllFamilies)
    for (long rows = 0; rows <= 10; ++rows) {
      const auto t = make_table(f, rows);
      ASSERT_EQ(parse_table_json(render_json(t)), t) << family_name(f) << " rows=" << rows;
      ASSERT_EQ(parse_table_csv(render_csv(t), t.family), t) << family_name(f) << " rows=" << rows;
    }
}

TEST(Tables, BigValuesSurviveJson) {
  const auto t = make_table(TableFamily::Stirling1, 40);
  const auto back = parse_table_json(render_json(t));
  EXPECT_EQ(back.rows[40][1], Rational(factorial(39)));
}

TEST(Tables, MalformedJsonIsRejected) {
  EXPECT_THROW(parse_table_json("not json"), DomainError);
  EXPECT_THROW(parse_table_json("{\"family\": \"ls1\"}"), DomainError);
  EXPECT_THROW(parse_table_json("{\"family\": \"ls1\", \"rows\": [[1]]}"), DomainError);
}

TEST(Tables, PlainRendering) {
  const auto text = render_plain(make_table(TableFamily::Stirling2, 3));
  EXPECT_EQ(text,
            "stirling2\n"
            "n\\k | 0 1 2 3\n"
            "  0 | 1\n"
            "  1 | 0 1\n"
            "  2 | 0 1 1\n"
            "  3 | 0 1 3 1\n");
}

}  // namespace
}  // namespace powersumkit
