#include <gtest/gtest.h>

#include "symcc/cycle_algebra.hpp"
#include "symcc/errors.hpp"

using namespace symcc;

namespace {

CycleSum tau(const std::string& label) { return CycleSum::term(TauBasis::parse(label), 1); }

StructureMap sm(std::initializer_list<std::pair<const char*, long>> entries) {
  StructureMap m;
  for (const auto& [e, c] : entries) m[MultVec::parse(e)] = c;
  return m;
}

}  // namespace

TEST(TauBasis, ParseAndPrint) {
  EXPECT_EQ(TauBasis::parse("s; 1^2 3^1").to_string(), "tau[s; 1^2 3^1]");
  EXPECT_EQ(TauBasis::parse("tau[0; 2^1]").to_string(), "tau[0; 2^1]");
  EXPECT_EQ(TauBasis::parse("2*s + t;").to_string(), "tau[2*s+t;]");
  EXPECT_EQ(TauBasis::parse("2*s + t; 1^1").grade(), 4u);
  EXPECT_THROW(TauBasis::parse("-1*s; 1^1"), ArgumentError);
  EXPECT_THROW(TauBasis::parse("s 1^1"), ArgumentError);
}

// Values from the set-partition enumeration in tests/oracles/brute.py.
TEST(StructureConstants, FrozenOracleValues) {
  EXPECT_EQ(*structure_constants(MultVec::parse("1^1"), MultVec::parse("1^1")), sm({{"1^2", 2}, {"2^1", 1}}));
  EXPECT_EQ(*structure_constants(MultVec::parse("1^2"), MultVec::parse("1^1")), sm({{"1^3", 3}, {"1^1 2^1", 1}}));
  EXPECT_EQ(*structure_constants(MultVec::parse("2^1"), MultVec::parse("1^1")), sm({{"1^1 2^1", 1}, {"3^1", 1}}));
  EXPECT_EQ(*structure_constants(MultVec::parse("2^1"), MultVec::parse("2^1")), sm({{"2^2", 2}, {"4^1", 1}}));
  EXPECT_EQ(*structure_constants(MultVec::parse("1^1 2^1"), MultVec::parse("1^2")),
            sm({{"1^1 2^2", 2}, {"1^2 3^1", 2}, {"1^3 2^1", 3}, {"2^1 3^1", 1}}));
  EXPECT_EQ(*structure_constants(MultVec::parse("3^1"), MultVec::parse("1^1 2^1")),
            sm({{"1^1 2^1 3^1", 1}, {"1^1 5^1", 1}, {"2^1 4^1", 1}}));
}

TEST(StructureConstants, MatchOracleAndAreSymmetric) {
  for (const char* a : {"1^1", "2^1", "1^2", "1^1 2^1", "3^1"}) {
    for (const char* b : {"1^1", "1^3", "2^2", "1^1 3^1"}) {
      const MultVec ea = MultVec::parse(a), eb = MultVec::parse(b);
      EXPECT_EQ(*structure_constants(ea, eb), oracle_structure_constants(ea, eb)) << a << " * " << b;
      EXPECT_EQ(*structure_constants(ea, eb), *structure_constants(eb, ea));
    }
  }
  EXPECT_THROW(oracle_structure_constants(MultVec::parse("1^6"), MultVec::parse("1^5")), RefusalError);
}

TEST(Multiply, MixedLabelsTranslateDelta) {
  const CycleSum z = multiply(tau("s; 1^1"), tau("t; 1^1"));
  EXPECT_EQ(z.degree(), 4u);
  EXPECT_EQ(z.coef(TauBasis::parse("s + t; 1^2")), 2);
  EXPECT_EQ(z.coef(TauBasis::parse("s + t; 2^1")), 1);
  EXPECT_EQ(multiply(tau("s;"), tau("s;")), tau("2*s;"));
  EXPECT_EQ(multiply(CycleSum::unit(), tau("0; 1^2")), tau("0; 1^2"));
  EXPECT_TRUE(multiply(CycleSum(2), tau("0; 1^1")).is_zero());
}

TEST(Multiply, ThreeSingletons) {
  const CycleSum z = product_of_set_partitions({MultVec::parse("1^1"), MultVec::parse("1^1"), MultVec::parse("1^1")});
  CycleSum expect(3);
  expect.add(TauBasis::parse("0; 1^3"), 6);
  expect.add(TauBasis::parse("0; 1^1 2^1"), 3);
  expect.add(TauBasis::parse("0; 3^1"), 1);
  EXPECT_EQ(z, expect);
}

TEST(CycleSum, GradeIsChecked) {
  CycleSum z(2);
  EXPECT_THROW(z.add(TauBasis::parse("0; 1^1"), 1), ArgumentError);
  z.add(TauBasis::parse("s; 1^1"), 2);
  z.add(TauBasis::parse("s; 1^1"), -2);
  EXPECT_TRUE(z.is_zero());
}

TEST(SupportVee, MatchesSupportOfProduct) {
  const CycleSum a = tau("s; 1^1") + tau("0; 2^1");
  const CycleSum b = tau("0; 1^2");
  EXPECT_EQ(support_vee(SupportSet::of(a), SupportSet::of(b)), SupportSet::of(multiply(a, b)));
  EXPECT_EQ(support_vee(SupportSet::unit(), SupportSet::of(b)), SupportSet::of(b));
}

TEST(Strata, DimensionsAndSmoothness) {
  const auto rep = stratum_report(4, make_curve_context(0, 2));
  ASSERT_EQ(rep.size(), 5u);
  EXPECT_EQ(rep.front().e, MultVec::parse("4^1"));
  EXPECT_EQ(rep.front().dimension, 1u);
  EXPECT_FALSE(rep.front().smooth_param);
  EXPECT_TRUE(rep.back().smooth_param);
  EXPECT_EQ(rep.back().dimension, 4u);
}
