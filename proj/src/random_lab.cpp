#include "rvd/random_lab.hpp"

#include <algorithm>
#include <cmath>

#include "rvd/error.hpp"
#include "rvd/parallel.hpp"

namespace rvd {
namespace {

constexpr int kMaxRandomOrder = 1000;

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Clock = std::chrono::steady_clock;

int min_common(const Graph& g) {
  return g.order() < 2 ? 0 : min_pairwise_common_neighbors(g);
}

}  // namespace

double TrialStream::uniform(std::uint64_t counter) const {
  const std::uint64_t h = mix64(mix64(mix64(seed_) ^ trial_) ^ counter);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t edge_index(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(v) * (v - 1) / 2 + static_cast<std::uint64_t>(u);
}

Graph sample_gnp(int n, double p, const TrialStream& stream) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  if (n < 0 || n > kMaxRandomOrder) throw DomainError("sample_gnp supports 0 <= n <= 1000");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (stream.uniform(edge_index(u, v)) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool criterion_rvd_n(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return false;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (simd::and_popcount(g.row(x), g.row(y)) < 2) return false;
  return true;
}

bool criterion_both(const Graph& g) { return criterion_rvd_n(g) && criterion_rvd_n(complement(g)); }

void validate(const SweepConfig& config) {
  if (config.n < 4 || config.n > kMaxRandomOrder) throw DomainError("sweep requires 4 <= n <= 1000");
  if (config.trials < 1) throw DomainError("sweep requires trials >= 1");
  if (config.c_values.empty()) throw DomainError("sweep requires at least one c value");
  for (double c : config.c_values)
    if (!(c > 0.0)) throw DomainError("c values must be positive");
  if (!std::is_sorted(config.c_values.begin(), config.c_values.end()))
    throw DomainError("c values must be ascending");
}

double threshold_p(int n, double c) {
  const double base = std::sqrt(std::log(static_cast<double>(n)) / n);
  return std::min(1.0, c * base);
}

ExperimentRecord run_trial(int n, double p, double c, int trial, std::uint64_t seed,
                           Criterion criterion) {
  const auto start = Clock::now();
  ExperimentRecord rec;
  rec.n = n;
  rec.p = p;
  rec.c = c;
  rec.trial = trial;
  rec.seed = seed;
  const Graph g = sample_gnp(n, p, TrialStream(seed, static_cast<std::uint64_t>(trial)));
  if (criterion == Criterion::kRvdEqN) {
    rec.outcome = criterion_rvd_n(g);
    rec.min_common_neighbors = min_common(g);
  } else {
    const Graph gc = complement(g);
    rec.outcome = criterion_rvd_n(g) && criterion_rvd_n(gc);
    rec.min_common_neighbors = std::min(min_common(g), min_common(gc));
  }
  rec.elapsed = Clock::now() - start;
  return rec;
}

std::vector<SweepPoint> threshold_sweep(const SweepConfig& config, int workers) {
  validate(config);
  if (workers <= 0) workers = worker_count();
  std::vector<SweepPoint> out;
  for (double c : config.c_values) {
    SweepPoint point;
    point.c = c;
    point.p = threshold_p(config.n, c);
    point.trials = config.trials;
    std::vector<char> success(static_cast<std::size_t>(config.trials), 0);
    parallel_for(
        success.size(),
        [&](std::size_t t) {
          const Graph g = sample_gnp(config.n, point.p, TrialStream(config.seed, t));
          success[t] = config.criterion == Criterion::kRvdEqN ? criterion_rvd_n(g)
                                                              : criterion_both(g);
        },
        workers);
    point.successes = static_cast<int>(std::count(success.begin(), success.end(), 1));
    out.push_back(point);
  }
  return out;
}

double almost_sure_check(int n, int trials, std::uint64_t seed, int workers) {
  SweepConfig config;
  config.n = n;
  config.trials = trials;
  config.seed = seed;
  config.criterion = Criterion::kBothGAndComplement;
  if (trials < 1) throw DomainError("almost_sure_check requires trials >= 1");
  if (n < 4 || n > kMaxRandomOrder) throw DomainError("almost_sure_check requires 4 <= n <= 1000");
  if (workers <= 0) workers = worker_count();
  std::vector<char> success(static_cast<std::size_t>(trials), 0);
  parallel_for(
      success.size(),
      [&](std::size_t t) {
        success[t] = criterion_both(sample_gnp(n, 0.5, TrialStream(seed, t)));
      },
      workers);
  return static_cast<double>(std::count(success.begin(), success.end(), 1)) / trials;
}

}  // namespace rvd
