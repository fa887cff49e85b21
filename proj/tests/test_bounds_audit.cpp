#include <gtest/gtest.h>

#include "rvd/bounds_audit.hpp"
#include "rvd/characterizations.hpp"
#include "rvd/corpus.hpp"
#include "rvd/error.hpp"

using namespace rvd;

TEST(SizeBand, Evaluations) {
  EXPECT_EQ(size_band_lemma(8, 7).second, Rational(28));
  EXPECT_EQ(size_band_lemma(8, 4).first, Rational(8));
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(size_band_lemma(n, n).second, Rational(n * (n - 1) / 2));
  EXPECT_THROW(size_band_lemma(8, 3), DomainError);
  EXPECT_THROW(size_band_lemma(4, 5), DomainError);
}

TEST(ImprovedBound, Evaluations) {
  EXPECT_EQ(improved_size_bound(8, 7), Rational(24));
  EXPECT_LT(improved_size_bound(8, 7), size_band_lemma(8, 7).second);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(improved_size_bound(n, n), Rational(n * (n - 1) / 2));
  // Half-integral values stay exact.
  EXPECT_EQ(improved_size_bound(7, 4), Rational(9, 4) + Rational(12));
  EXPECT_EQ(improved_size_bound(7, 4).denominator(), 4);
  EXPECT_THROW(improved_size_bound(8, 3), DomainError);
}

TEST(MaxSizeNMinus1, Formula) {
  EXPECT_EQ(max_size_rvd_n_minus_1(2), 1);
  EXPECT_EQ(max_size_rvd_n_minus_1(5), 8);
  EXPECT_EQ(max_size_rvd_n_minus_1(7), 17);
}

TEST(MakeCheck, SensesAndSlack) {
  const auto up = make_check("u", BoundSense::kUpper, Rational(5), Rational(3));
  EXPECT_TRUE(up.pass);
  EXPECT_EQ(up.slack, Rational(2));
  const auto low = make_check("l", BoundSense::kLower, Rational(5), Rational(3));
  EXPECT_FALSE(low.pass);
  EXPECT_EQ(low.slack, Rational(-2));
  EXPECT_TRUE(make_check("e", BoundSense::kEqual, Rational(1), Rational(1)).pass);
  EXPECT_EQ(to_string(Rational(7, 2)), "7/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(DegreeSum, CompleteGraphIsTight) {
  const auto r = degree_sum_audit(families::complete(4), VertexColoring::distinct(4));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].name, "degree_sum.singletons");
  EXPECT_EQ(r.checks[0].value, Rational(12));
  EXPECT_EQ(r.checks[0].observed, Rational(12));
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_EQ(r.checks[0].slack, Rational(0));
}

TEST(DegreeSum, SixCycleWithSolverColoring) {
  const Graph c6 = families::cycle(6);
  const auto rep = rvd_exact(c6);
  EXPECT_TRUE(degree_sum_audit(c6, rep.optimal_coloring).all_pass());
}

TEST(DegreeSum, RejectsNonRvdColoring) {
  EXPECT_THROW(degree_sum_audit(families::cycle(4), VertexColoring::monochromatic(4)), DomainError);
}

TEST(DegreeSum, TriangleWithOneSingletonExceedsSingletonBound) {
  // Sum over S is 2 against (3 + 2)/2 - 1 = 3/2.
  const auto r = degree_sum_audit(families::complete(3), VertexColoring::parse("1,1,2"));
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_EQ(r.checks[1].name, "degree_sum.singletons");
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_EQ(r.checks[1].slack, Rational(-1, 2));
}

TEST(DegreeSum, CorpusViolationsNeedALoneSingleton) {
  int violations = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const auto rep = rvd_exact(g);
      int singletons = 0;
      for (const auto& cls : rep.optimal_coloring.classes()) singletons += cls.size() == 1;
      for (const auto& c : degree_sum_audit(g, rep.optimal_coloring).checks) {
        if (c.pass) continue;
        ++violations;
        EXPECT_EQ(c.name, "degree_sum.singletons") << encode_graph6(g);
        EXPECT_EQ(singletons, 1) << encode_graph6(g);
      }
    }
  EXPECT_GT(violations, 0);
}

TEST(SizeAudit, CorpusViolatesOnlyTheImprovedBound) {
  std::vector<std::string> offenders;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      SolverOptions o;
      o.collect_certificates = false;
      const int k = *rvd_exact(g, o).rvd;
      for (const auto& c : size_audit(g, k).checks) {
        if (c.pass) continue;
        EXPECT_EQ(c.name, "size.improved_upper");
        offenders.push_back(encode_graph6(g));
      }
    }
  EXPECT_EQ(offenders, (std::vector<std::string>{"Bw", "D}k", "Fvzcw", "F~qkw"}));
}

TEST(NgAudit, FourVertexPathIsOnlyQualifierAtFour) {
  int qualifying = 0;
  for (const Graph& g : enumerate_graphs(4, true)) {
    const NgRecord r = ng_audit(g);
    if (r.skipped) {
      EXPECT_EQ(r.skip_reason, "complement disconnected");
      continue;
    }
    ++qualifying;
    EXPECT_EQ(r.product, 1);
    EXPECT_TRUE(r.all_pass());
  }
  EXPECT_EQ(qualifying, 1);
}

TEST(NgAudit, SkipsDisconnectedInput) {
  const NgRecord r = ng_audit(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(r.skipped);
  EXPECT_EQ(r.skip_reason, "graph disconnected");
  EXPECT_EQ(ng_audit(families::complete(10)).skip_reason, "complement disconnected");
}

TEST(NgAudit, TreesWithConnectedComplements) {
  for (int n = 5; n <= 7; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      const NgRecord r = ng_audit(t);
      if (r.skipped) continue;
      EXPECT_GE(r.rvd_complement, n - 2);
      EXPECT_TRUE(r.all_pass()) << encode_graph6(t);
    }
}

TEST(NgAudit, CorpusPasses) {
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const NgRecord r = ng_audit(g);
      if (r.skipped) continue;
      if (n >= 5) {
        EXPECT_GE(r.product, n - 2);
      }
      EXPECT_LE(r.product, n * n);
      EXPECT_TRUE(r.all_pass()) << encode_graph6(g);
      EXPECT_FALSE(r.conjecture_holds.has_value());
    }
}

TEST(NgAudit, RecordsConjectureFromEight) {
  const NgRecord r = ng_audit(tree_complement_extremal(8));
  ASSERT_FALSE(r.skipped);
  EXPECT_EQ(r.rvd_g, 1);
  EXPECT_EQ(r.rvd_complement, 7);
  ASSERT_TRUE(r.conjecture_holds.has_value());
  EXPECT_TRUE(*r.conjecture_holds);
}
