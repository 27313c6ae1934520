#include <gtest/gtest.h>

#include "symcc/errors.hpp"
#include "symcc/render.hpp"

using namespace symcc;

TEST(Render, TextSigns) {
  CycleSum z(1);
  z.add(TauBasis::parse("0; 1^1"), -1);
  z.add(TauBasis::parse("s;"), -1);
  EXPECT_EQ(to_text(z), "-(tau[0; 1^1] + tau[s;])");
  CycleSum w(1);
  w.add(TauBasis::parse("0; 1^1"), 3);
  w.add(TauBasis::parse("s;"), -2);
  EXPECT_EQ(to_text(w), "3*tau[0; 1^1] - 2*tau[s;]");
  EXPECT_EQ(to_text(CycleSum(4)), "0");
  EXPECT_EQ(to_text(w.scaled(-1)), "-3*tau[0; 1^1] + 2*tau[s;]");
}

TEST(Render, Latex) {
  EXPECT_EQ(to_latex(TauBasis::parse("s; 1^1 2^1")), "\\tau^*_{s,\\,3=2+1}");
  EXPECT_EQ(to_latex(TauBasis()), "1");
  EXPECT_EQ(to_latex(TauBasis::parse("2*s;")), "\\tau^*_{2s}");
}

TEST(Render, Json) {
  CycleSum z(2);
  z.add(TauBasis::parse("s; 1^1"), -12);
  const auto j = to_json_terms(z);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["delta"], "1*s");
  EXPECT_EQ(j[0]["e"]["1"], 1);
  EXPECT_EQ(j[0]["coef"], "-12");
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_THROW(parse_format("yaml"), ArgumentError);
}

TEST(Render, SeriesText) {
  EXPECT_EQ(to_text(CycleSeries::one(1)), "degree 0: tau[0;]\ndegree 1: 0\n");
}
