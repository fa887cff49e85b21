#pragma once

// Size, degree-sum and Nordhaus-Gaddum bounds, evaluated with exact
// rational arithmetic and audited against solver ground truth.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "rvd/coloring.hpp"
#include "rvd/graph.hpp"
#include "rvd/solver.hpp"

namespace rvd {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

enum class BoundSense { kUpper, kLower, kEqual };

/// One inequality instance: pass iff observed <= value (upper),
/// observed >= value (lower) or observed == value (equal).
struct BoundCheck {
  std::string name;
  BoundSense sense = BoundSense::kUpper;
  Rational value;
  Rational observed;
  bool pass = false;
  /// value - observed for upper bounds, observed - value for lower bounds.
  Rational slack;
};

BoundCheck make_check(std::string name, BoundSense sense, Rational value, Rational observed);

struct BoundReport {
  std::string graph6;
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<BoundCheck> checks;
  bool all_pass() const;
};

/// (k(n-1)/2 - C(k,2), k(n-1) - C(k,2)): band for the maximum size of an
/// order-n graph with rvd = k. Requires 4 <= k <= n.
std::pair<Rational, Rational> size_band_lemma(int n, int k);

/// (n+k-2)(2k-n)/4 + (n-k)(n+1)/2. Requires n/2 <= k <= n.
Rational improved_size_bound(int n, int k);

/// Largest size of an order-n graph with rvd = n - 1: 1 for n = 2, else
/// C(n, 2) - n + 3.
long long max_size_rvd_n_minus_1(int n);

/// Per-graph size checks for a graph with rvd = k: the band's upper end
/// when k >= 4 and the improved bound when 2k >= n.
BoundReport size_audit(const Graph& g, int k);

/// Degree sums over the classes of an rvd-coloring: sum over V_i of d(v)
/// <= n + C(|V_i|, 2) for |V_i| >= 2, and over the union S of singleton
/// classes sum d(v) <= ((n + k)/2 - 1)|S|. Throws DomainError when c is not
/// an rvd-coloring of g.
BoundReport degree_sum_audit(const Graph& g, const VertexColoring& c);

struct NgRecord {
  std::string graph6;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  int rvd_g = 0;
  int rvd_complement = 0;
  int sum = 0;
  int product = 0;
  std::vector<BoundCheck> checks;
  /// sum >= n for n >= 8; an observation only, never a failure.
  std::optional<bool> conjecture_holds;
  bool all_pass() const;
};

/// Nordhaus-Gaddum audit of G and its complement. Skips (with a reason)
/// when either is disconnected or a value cannot be computed exactly.
NgRecord ng_audit(const Graph& g, const SolverOptions& options = {});

}  // namespace rvd
