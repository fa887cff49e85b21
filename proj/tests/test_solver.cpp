#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rvd/corpus.hpp"
#include "rvd/error.hpp"
#include "rvd/parallel.hpp"
#include "rvd/solver.hpp"

using namespace rvd;

namespace {

SolverOptions quiet() {
  SolverOptions o;
  o.collect_certificates = false;
  return o;
}

int exact(const Graph& g) { return *rvd_exact(g, quiet()).rvd; }

}  // namespace

TEST(InjectiveChromatic, Examples) {
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(injective_chromatic_number(families::complete(n)), n);
  EXPECT_EQ(injective_chromatic_number(families::cycle(4)), 2);
  EXPECT_EQ(injective_chromatic_number(families::cycle(5)), 3);
  EXPECT_EQ(injective_chromatic_number(families::star(4)), 4);
}

TEST(InjectiveChromatic, AgreesWithOracleAndDegreeBound) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const int chi = injective_chromatic_number(g);
      EXPECT_EQ(chi, oracle::injective_chromatic(g)) << encode_graph6(g);
      const int d = g.max_degree();
      EXPECT_LE(chi, d * (d - 1) + 1);
    }
}

TEST(Bounds, Examples) {
  EXPECT_EQ(rvd_lower_bound(families::complete(5)).value, 5);
  EXPECT_EQ(rvd_lower_bound(families::complete(5)).rule, "conflict_clique");
  EXPECT_EQ(rvd_lower_bound(families::cycle(6)).value, 2);
  EXPECT_EQ(rvd_lower_bound(families::path(6)).value, 1);
  EXPECT_EQ(rvd_upper_bound(families::cycle(5)).value, 3);
  EXPECT_EQ(rvd_upper_bound(families::complete(4)).value, 4);
  EXPECT_EQ(rvd_upper_bound(families::star(4)).value, 4);
  EXPECT_THROW(rvd_lower_bound(Graph(3, {{0, 1}})), DomainError);
}

TEST(RvdExact, Examples) {
  EXPECT_EQ(exact(families::complete(4)), 4);
  EXPECT_EQ(exact(families::complete(3)), 2);
  EXPECT_EQ(exact(families::complete(2)), 1);
  EXPECT_EQ(exact(families::path(5)), 1);
  EXPECT_EQ(exact(families::cycle(6)), 2);
  const Edge e[] = {{0, 1}};
  EXPECT_EQ(exact(families::complete_minus(5, e)), 5);
  EXPECT_EQ(exact(complement(families::path(6))), 4);
  const Graph k23 = families::complete_bipartite(2, 3);
  EXPECT_EQ(exact(k23), oracle::rvd(k23));
}

TEST(RvdExact, RefusesAboveCapAndDisconnected) {
  SolverOptions o = quiet();
  o.exact_cap = 6;
  EXPECT_THROW(rvd_exact(families::cycle(7), o), CapExceeded);
  EXPECT_THROW(rvd_exact(Graph(3, {{0, 1}})), DomainError);
  EXPECT_THROW(rvd_exact(Graph(1)), DomainError);
}

TEST(RvdExact, ReportInvariants) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const RvdReport r = rvd_exact(g);
      ASSERT_TRUE(r.rvd);
      EXPECT_LE(r.lower.value, *r.rvd);
      EXPECT_LE(*r.rvd, r.upper.value);
      EXPECT_EQ(r.optimal_coloring.num_colors(), *r.rvd);
      EXPECT_TRUE(r.optimal_coloring.is_canonical());
      EXPECT_EQ(r.certificates.size(), static_cast<std::size_t>(n * (n - 1) / 2));
      for (const auto& cert : r.certificates)
        EXPECT_TRUE(is_valid_rainbow_cut(g, r.optimal_coloring, cert));
    }
}

TEST(RvdExact, PrunedEqualsBruteForce) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) EXPECT_EQ(exact(g), oracle::rvd(g)) << encode_graph6(g);
}

TEST(RvdExact, PruningDoesNotChangeValue) {
  SolverOptions unpruned = quiet();
  unpruned.conflict_pruning = false;
  for (const Graph& g : enumerate_graphs(7, true))
    EXPECT_EQ(exact(g), *rvd_exact(g, unpruned).rvd) << encode_graph6(g);
}

TEST(RvdExact, SubgraphMonotonicity) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const int value = exact(g);
      for (auto [u, v] : g.edges()) {
        const Graph h = g.without_edge(u, v);
        if (is_connected(h)) {
          EXPECT_LE(exact(h), value) << encode_graph6(g);
        }
      }
    }
}

TEST(RvdExact, HighMinimumDegreeForcesOrder) {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (2 * g.min_degree() >= n + 2) {
        EXPECT_EQ(exact(g), n) << encode_graph6(g);
      }
    }
}

TEST(RvdFast, AgreesWithExactOnCorpus) {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const RvdReport f = rvd_fast(g, quiet());
      EXPECT_EQ(*f.rvd, exact(g)) << encode_graph6(g);
      EXPECT_TRUE(is_rvd_coloring(g, f.optimal_coloring, false).valid);
      EXPECT_EQ(f.optimal_coloring.num_colors(), *f.rvd);
    }
}

TEST(RvdFast, ClosedFormsOnLargeGraphs) {
  std::vector<Edge> tree;
  for (Vertex v = 1; v < 40; ++v) tree.emplace_back((v - 1) / 3, v);
  const RvdReport t = rvd_fast(Graph(40, tree));
  EXPECT_EQ(t.rvd, 1);
  EXPECT_EQ(t.method, Method::kClosedForm);

  const RvdReport k = rvd_fast(families::complete(30), quiet());
  EXPECT_EQ(k.rvd, 30);
  EXPECT_EQ(k.method, Method::kClosedForm);
}

TEST(RvdFast, PetersenDependsOnCap) {
  SolverOptions low = quiet();
  low.exact_cap = 9;
  const RvdReport b = rvd_fast(families::petersen(), low);
  EXPECT_FALSE(b.rvd);
  EXPECT_EQ(b.method, Method::kBoundsOnly);
  EXPECT_LE(b.lower.value, b.upper.value);

  const RvdReport e = rvd_fast(families::petersen(), quiet());
  ASSERT_TRUE(e.rvd);
  EXPECT_EQ(e.method, Method::kExactSearch);
  EXPECT_GE(*e.rvd, b.lower.value);
  EXPECT_LE(*e.rvd, b.upper.value);
}

TEST(RvdExact, DeterministicAcrossWorkers) {
  const auto corpus = enumerate_graphs(6, true);
  std::vector<RvdReport> serial;
  for (const Graph& g : corpus) serial.push_back(rvd_exact(g));
  std::vector<RvdReport> parallel(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { parallel[i] = rvd_exact(corpus[i]); }, 4);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(serial[i].optimal_coloring, parallel[i].optimal_coloring);
    ASSERT_EQ(serial[i].certificates.size(), parallel[i].certificates.size());
    for (std::size_t j = 0; j < serial[i].certificates.size(); ++j) {
      EXPECT_EQ(serial[i].certificates[j].cut, parallel[i].certificates[j].cut);
      EXPECT_EQ(serial[i].certificates[j].side_witness, parallel[i].certificates[j].side_witness);
    }
  }
}
