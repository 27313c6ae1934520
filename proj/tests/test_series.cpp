#include <gtest/gtest.h>

#include "symcc/errors.hpp"
#include "symcc/series.hpp"

using namespace symcc;

namespace {

CycleSum parse_terms(unsigned degree, std::initializer_list<std::pair<const char*, long>> terms) {
  CycleSum z(degree);
  for (const auto& [label, c] : terms) z.add(TauBasis::parse(label), c);
  return z;
}

}  // namespace

TEST(Series, ConstantRankOne) {
  const CycleSeries s = s_constant_rank(1, 3);
  EXPECT_EQ(s[0], CycleSum::unit());
  EXPECT_EQ(s[1], parse_terms(1, {{"0; 1^1", -1}}));
  EXPECT_EQ(s[3], parse_terms(3, {{"0; 1^3", -1}}));
}

TEST(Series, ConstantRankTwoCoefficients) {
  const CycleSeries s = s_constant_rank(2, 3);
  EXPECT_EQ(s[2], parse_terms(2, {{"0; 1^2", 4}, {"0; 2^1", 1}}));
  EXPECT_EQ(s[3], parse_terms(3, {{"0; 1^3", -8}, {"0; 1^1 2^1", -2}}));
  EXPECT_EQ(series_pow(s_constant_rank(1, 3), 2), s);
}

TEST(Series, InverseOfConstantSheaf) {
  const CycleSeries s = s_constant_rank(1, 4);
  const CycleSeries inv = series_inverse(s);
  EXPECT_EQ(inv[1], parse_terms(1, {{"0; 1^1", 1}}));
  EXPECT_EQ(series_mul(s, inv), CycleSeries::one(4));
  CycleSeries bad(2);
  EXPECT_THROW(series_inverse(bad), ArgumentError);
  EXPECT_THROW(series_mul(CycleSeries(2), CycleSeries(3)), ArgumentError);
}

TEST(Series, Skyscraper) {
  const Divisor s2 = Divisor::parse("2*s");
  const CycleSeries shifted = s_skyscraper(s2, true, 3);
  EXPECT_EQ(shifted[1], parse_terms(1, {{"s;", -2}}));
  EXPECT_EQ(shifted[2], parse_terms(2, {{"2*s;", 1}}));
  EXPECT_TRUE(shifted[3].is_zero());
  const CycleSeries plain = s_skyscraper(s2, false, 3);
  EXPECT_EQ(plain[3], parse_terms(3, {{"3*s;", 4}}));
  EXPECT_EQ(series_mul(plain, shifted), CycleSeries::one(3));
}

TEST(Series, TameClosedForm) {
  const CycleSeries s = s_tame(1, Divisor::parse("s"), 2);
  EXPECT_EQ(s[1], parse_terms(1, {{"0; 1^1", -1}, {"s;", -1}}));
  EXPECT_EQ(s[2], parse_terms(2, {{"0; 1^2", 1}, {"s; 1^1", 1}}));
  EXPECT_EQ(s_tame(2, Divisor::parse("s + 2*t"), 5), s_tame_closed(2, Divisor::parse("s + 2*t"), 5));
  EXPECT_THROW(s_tame(1, Divisor::parse("2*s"), 3), ArgumentError);
  EXPECT_THROW(s_tame(1, Divisor::parse("-1*s"), 3), ArgumentError);
}

TEST(Pushforward, CompositionAndPartition) {
  EXPECT_EQ(cc_pushforward_composition({1, 1}), parse_terms(2, {{"0; 1^2", 2}, {"0; 2^1", 1}}));
  EXPECT_EQ(cc_pushforward_composition({2}), parse_terms(2, {{"0; 1^2", 1}}));
  const CurveContext c0 = make_curve_context(0, 0);
  EXPECT_EQ(cc_pushforward_partition(Partition::parse("2,1"), c0),
            parse_terms(3, {{"0; 1^1 2^1", 1}, {"0; 3^1", 1}}));
  EXPECT_THROW(cc_pushforward_partition(Partition::parse("2,1"), make_curve_context(0, 2)), PreconditionError);
}
