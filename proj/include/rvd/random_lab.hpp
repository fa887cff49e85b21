#pragma once

// Seeded Monte-Carlo experiments on G(n, p).
//
// Edge uv (u < v) of trial t is present iff U(seed, t, index(u, v)) < p,
// where U is a counter-based uniform in [0, 1). Because the uniforms do not
// depend on p, samples at p1 <= p2 are coupled (edge sets nested), so any
// monotone criterion's success indicator is nondecreasing in p per trial.

#include <chrono>
#include <cstdint>
#include <vector>

#include "rvd/graph.hpp"

namespace rvd {

/// Counter-based stream keyed on (seed, trial).
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial) : seed_(seed), trial_(trial) {}
  /// Uniform in [0, 1) for the given counter; pure function of the key.
  double uniform(std::uint64_t counter) const;
  std::uint64_t seed() const { return seed_; }
  std::uint64_t trial() const { return trial_; }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
};

/// Column-major index of edge {u, v}: v(v-1)/2 + u for u < v.
std::uint64_t edge_index(Vertex u, Vertex v);

/// Requires 0 <= p <= 1 and n <= 1000.
Graph sample_gnp(int n, double p, const TrialStream& stream);

/// G connected and every pair has at least two common neighbors.
bool criterion_rvd_n(const Graph& g);
/// criterion_rvd_n for both G and its complement.
bool criterion_both(const Graph& g);

enum class Criterion { kRvdEqN, kBothGAndComplement };

struct SweepConfig {
  int n = 0;
  std::vector<double> c_values;  ///< ascending, positive
  int trials = 0;
  std::uint64_t seed = 0;
  Criterion criterion = Criterion::kRvdEqN;
};

/// Throws DomainError on n < 4, n > 1000, trials < 1, or c values that are
/// nonpositive or unsorted.
void validate(const SweepConfig& config);

struct ExperimentRecord {
  int n = 0;
  double p = 0;
  double c = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  bool outcome = false;
  int min_common_neighbors = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// p = min(1, c * sqrt(ln n / n)).
double threshold_p(int n, double c);

ExperimentRecord run_trial(int n, double p, double c, int trial, std::uint64_t seed,
                           Criterion criterion);

struct SweepPoint {
  double c = 0;
  double p = 0;
  int trials = 0;
  int successes = 0;
  double fraction() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Trials run in parallel; results are identical for any worker count.
std::vector<SweepPoint> threshold_sweep(const SweepConfig& config, int workers = 0);

/// Fraction of G(n, 1/2) samples passing criterion_both.
double almost_sure_check(int n, int trials, std::uint64_t seed, int workers = 0);

}  // namespace rvd
