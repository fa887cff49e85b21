#pragma once

// Exact rvd(G) on small graphs, the bound chain around it, and a dispatcher
// that prefers closed-form characterizations.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rvd/coloring.hpp"
#include "rvd/graph.hpp"

namespace rvd {

/// A bound together with the rule that produced it.
struct Bound {
  int value = 0;
  std::string rule;
};

enum class Method { kClosedForm, kExactSearch, kBoundsOnly };

const char* method_name(Method m);

struct RvdReport {
  std::optional<int> rvd;  ///< empty for bounds-only reports
  VertexColoring optimal_coloring;
  std::vector<CutCertificate> certificates;
  Bound lower;
  Bound upper;
  Method method = Method::kExactSearch;
  /// Closed-form rule that fired, if any.
  std::string closed_form_rule;
  std::chrono::nanoseconds elapsed{0};
};

struct SolverOptions {
  /// Largest order accepted by the exact search.
  int exact_cap = 10;
  /// Skip the conflict-graph pruning (oracle/benchmark use only).
  bool conflict_pruning = true;
  /// Attach per-pair certificates to the report.
  bool collect_certificates = true;
};

/// Maximum clique size (exact branch and bound).
int max_clique_size(const Graph& g);
/// Chromatic number (exact DSATUR branch and bound) with an optimal coloring.
int chromatic_number(const Graph& g, std::vector<Color>* coloring = nullptr);

/// Graph joining u, v iff they share at least one neighbor.
Graph common_neighbor_graph(const Graph& g);
/// chi_i(G), computed as the chromatic number of common_neighbor_graph(G).
int injective_chromatic_number(const Graph& g, std::vector<Color>* coloring = nullptr);

/// max(kappa^+(G), clique number of the conflict graph). Requires G connected.
Bound rvd_lower_bound(const Graph& g);
/// min(n, chi_i(G)). Requires G connected.
Bound rvd_upper_bound(const Graph& g);

/// Exact rvd(G) by canonical set-partition search from the lower bound up.
/// Throws DomainError for disconnected or trivial graphs and CapExceeded
/// when n > options.exact_cap.
RvdReport rvd_exact(const Graph& g, const SolverOptions& options = {});

/// Closed forms for rvd in {1, 2, n, n-1} first, exact search otherwise.
/// Above the cap with no closed form the report carries bounds only.
RvdReport rvd_fast(const Graph& g, const SolverOptions& options = {});

}  // namespace rvd
