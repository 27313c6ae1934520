#include <gtest/gtest.h>

#include <random>

#include "symcc/errors.hpp"
#include "symcc/geometry.hpp"

using namespace symcc;

namespace {

SheafDescriptor sheaf(unsigned r, const char* drops) { return SheafDescriptor::make(r, Divisor::parse(drops)); }

}  // namespace

TEST(ReducedSupport, Examples) {
  TypedDecomposition a{Divisor(), {{3, Divisor::parse("x")}}};
  EXPECT_EQ(reduced_support(a), Divisor::parse("x"));
  EXPECT_EQ(a.total(), Divisor::parse("3*x"));
  TypedDecomposition b{Divisor::parse("s"), {{2, Divisor::parse("x + y")}}};
  EXPECT_EQ(reduced_support(b), Divisor::parse("x + y"));
  EXPECT_EQ(b.total(), Divisor::parse("s + 2*x + 2*y"));
  EXPECT_EQ(b.type(), MultVec::parse("2^2"));
}

TEST(ReducedSupport, RandomDecompositionsRespectBounds) {
  std::mt19937 rng(12345);
  const char* ids[] = {"x", "y", "z"};
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned r = 1 + rng() % 3;
    TypedDecomposition dec;
    for (unsigned i = 1; i <= r; ++i) {
      Divisor di;
      for (const char* id : ids) di.add(Point(id), static_cast<long>(rng() % 3));
      if (!di.is_zero()) dec.parts[i] = di;
    }
    const MultVec e = dec.type();
    EXPECT_EQ(reduced_support(dec).degree(), static_cast<long>(e.cardinality()));
    EXPECT_EQ(dec.typed_part().degree(), static_cast<long>(e.weight()));
    EXPECT_LE(dec.typed_part().degree(), static_cast<long>(r) * reduced_support(dec).degree());
  }
}

TEST(Acyclicity, Verdicts) {
  const CurveContext g1 = make_curve_context(1, 0);
  EXPECT_EQ(acyclicity(g1, sheaf(1, "s"), 2).verdict, Verdict::acyclic_everywhere);
  const auto at = acyclicity(g1, sheaf(1, "s"), 1);
  EXPECT_EQ(at.verdict, Verdict::acyclic_off_KF);
  EXPECT_EQ(at.k_f_label, "1·K_X + [s]");
  EXPECT_EQ(acyclicity(make_curve_context(0, 0), sheaf(1, "0"), 1).verdict, Verdict::acyclic_everywhere);
  EXPECT_EQ(acyclicity(make_curve_context(2, 0), sheaf(2, "0"), 3).verdict, Verdict::not_covered);
  EXPECT_THROW(acyclicity(g1, sheaf(1, "s"), 0), ArgumentError);
}

TEST(Certificate, AtAndAboveTheThreshold) {
  const CurveContext g2 = make_curve_context(2, 0);
  const auto c = singularity_certificate(g2, sheaf(2, "0"), 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->delta, Divisor());
  EXPECT_EQ(c->e, MultVec::parse("2^2"));
  EXPECT_FALSE(singularity_certificate(g2, sheaf(2, "0"), 5).has_value());
  EXPECT_FALSE(singularity_certificate(make_curve_context(0, 0), sheaf(1, "s"), 1).has_value());
}

TEST(CriticalPoint, Formula) {
  EXPECT_EQ(critical_point(make_curve_context(1, 0), sheaf(1, "s"), Divisor()), Divisor::parse("s"));
  EXPECT_EQ(critical_point(make_curve_context(2, 0), sheaf(2, "s"), Divisor::parse("x + y")),
            Divisor::parse("s + 2*x + 2*y"));
  EXPECT_THROW(critical_point(make_curve_context(2, 0), sheaf(1, "s"), Divisor::parse("x")), ArgumentError);
  EXPECT_THROW(critical_point(make_curve_context(0, 0), sheaf(1, "s"), Divisor()), PreconditionError);
}

TEST(EpsilonReport, Examples) {
  const auto a = epsilon_report(make_curve_context(1, 0), sheaf(1, "s"), Divisor());
  EXPECT_EQ(a.n, 1);
  EXPECT_EQ(a.sign, -1);
  EXPECT_EQ(a.critical_divisor, Divisor::parse("s"));
  EXPECT_EQ(a.sigma, (std::set<Point>{Point("s")}));
  const auto b = epsilon_report(make_curve_context(2, 0), sheaf(1, "0"), Divisor::parse("x + y"));
  EXPECT_EQ(b.n, 2);
  EXPECT_EQ(b.sign, 1);
  EXPECT_EQ(b.critical_divisor, Divisor::parse("x + y"));
  EXPECT_EQ(b.sigma, (std::set<Point>{Point("x"), Point("y")}));
  EXPECT_THROW(epsilon_report(make_curve_context(0, 0), sheaf(1, "0"), Divisor()), PreconditionError);
}

TEST(RiemannRoch, Numerology) {
  const auto a = riemann_roch(make_curve_context(1, 0), 0);
  EXPECT_EQ(a.chi_coh, 0);
  EXPECT_FALSE(a.h0_positive);
  EXPECT_FALSE(a.aj_smooth);
  const auto b = riemann_roch(make_curve_context(2, 0), 3);
  EXPECT_EQ(b.chi_coh, 2);
  EXPECT_TRUE(b.aj_smooth);
  EXPECT_TRUE(riemann_roch(make_curve_context(0, 0), 0).aj_smooth);
}
