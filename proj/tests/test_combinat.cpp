#include <gtest/gtest.h>

#include "symcc/combinat.hpp"
#include "symcc/errors.hpp"

using namespace symcc;

TEST(Partition, ParseAndPrint) {
  const Partition p = Partition::parse("2,1,1");
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.to_string(), "(2,1,1)");
  EXPECT_THROW(Partition(std::vector<unsigned>{1, 2}), ArgumentError);
  EXPECT_THROW(Partition::parse("2,0"), ArgumentError);
  EXPECT_EQ(Partition::from_unsorted({1, 3, 2}).to_string(), "(3,2,1)");
}

TEST(MultVec, RoundTripWithPartitions) {
  const MultVec e = MultVec::parse("1^2 3^1");
  EXPECT_EQ(e.weight(), 5u);
  EXPECT_EQ(e.cardinality(), 3u);
  EXPECT_EQ(e.to_string(), "1^2 3^1");
  EXPECT_EQ(e_to_lambda(e).to_string(), "(3,1,1)");
  for (unsigned n = 0; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(e_to_lambda(lambda_to_e(lambda)), lambda);
  }
  EXPECT_EQ(e_factorial(MultVec::parse("1^3 2^2")), 12);
  EXPECT_THROW(MultVec::parse("1^x"), ArgumentError);
}

TEST(Partitions, CountsAndOrder) {
  const unsigned p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
  const auto four = partitions_of(4);
  EXPECT_EQ(four.front().to_string(), "(4)");
  EXPECT_EQ(four[2].to_string(), "(2,2)");
  EXPECT_EQ(four.back().to_string(), "(1,1,1,1)");
  EXPECT_EQ(compositions_of(5).size(), 16u);
  EXPECT_EQ(weak_compositions(3, 3).size(), 10u);
}

TEST(Partitions, ConjugateIsInvolution) {
  EXPECT_EQ(conjugate(Partition::parse("3,1")).to_string(), "(2,1,1)");
  for (unsigned n = 0; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
  }
}

// Values from exhaustive enumeration of 0-1 matrices (tests/oracles/brute.py).
TEST(CountM, FrozenOracleValues) {
  EXPECT_EQ(count_m(Partition::parse("1,1"), {1, 1}), 2);
  EXPECT_EQ(count_m(Partition::parse("2"), {1, 1}), 1);
  EXPECT_EQ(count_m(Partition::parse("1"), {1}), 1);
  EXPECT_EQ(count_m(Partition::parse("2,1"), {1, 2}), 1);
  EXPECT_EQ(count_m(Partition::parse("1,1,1"), {2, 1}), 3);
  EXPECT_EQ(count_m(Partition::parse("2,2,1"), {3, 2}), 1);
  EXPECT_EQ(count_m(Partition::parse("1,1,1,1"), {2, 2}), 6);
  EXPECT_EQ(count_m(Partition::parse("3,2,1"), {2, 2, 2}), 3);
  EXPECT_EQ(count_m(Partition::parse("2,1,1"), {2, 1, 1}), 5);
  EXPECT_THROW(count_m(Partition::parse("2,1"), {2}), ArgumentError);
}

TEST(CountM, RecursionMatchesExhaustive) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : compositions_of(n)) {
        if (lambda.length() * mu.size() > 20) continue;
        EXPECT_EQ(count_m(lambda, mu), count_m_exhaustive(lambda, mu)) << lambda.to_string();
      }
    }
  }
  EXPECT_THROW(count_m_exhaustive(Partition(std::vector<unsigned>(5, 1)), {1, 1, 1, 1, 1}), RefusalError);
}

TEST(SetPartitions, BellNumbersAndEnumeration) {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(bell_number(n), bell[n]);
    long count = 0;
    for_each_set_partition(n, [&](const std::vector<unsigned>&, unsigned) { ++count; });
    EXPECT_EQ(count, bell[n]);
  }
}

TEST(SetPartitions, CanonicalAndCoarsenings) {
  const SetPartition a = SetPartition::canonical(Partition::parse("2,1"));
  EXPECT_EQ(a.type(), MultVec::parse("1^1 2^1"));
  EXPECT_EQ(a.ground(), (std::vector<int>{1, 2, 3}));
  const auto c = coarsenings(a);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.front(), a);
  EXPECT_EQ(c.back().block_count(), 1u);
  EXPECT_EQ(coarsenings(SetPartition::canonical(Partition::parse("1,1,1"))).size(), 5u);
}

TEST(MergeClosure, Refinement) {
  EXPECT_TRUE(merge_closure_leq(Partition::parse("1,1,1"), Partition::parse("2,1")));
  EXPECT_TRUE(merge_closure_leq(Partition::parse("2,2"), Partition::parse("4")));
  EXPECT_FALSE(merge_closure_leq(Partition::parse("3,1"), Partition::parse("2,2")));
}
