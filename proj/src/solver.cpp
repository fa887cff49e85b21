#include "rvd/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "rvd/characterizations.hpp"
#include "rvd/connectivity.hpp"
#include "rvd/error.hpp"

namespace rvd {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaskLimit = 64;

void clique_expand(const Graph& g, int size, VertexSet candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    const Vertex v = candidates.first();
    clique_expand(g, size + 1, candidates & g.neighbors(v), best);
    candidates.erase(v);
  }
}

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int lower) : g_(g), n_(g.order()), lower_(lower) {
    color_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) nbrs_.push_back(g.neighbors(v).to_vector());
  }

  int solve(std::vector<Color>* out) {
    best_ = n_ + 1;
    branch(0, 0);
    if (out) *out = best_coloring_;
    return best_;
  }

 private:
  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      std::vector<char> seen(static_cast<std::size_t>(best_ + 1), 0);
      int sat = 0;
      for (Vertex w : nbrs_[v]) {
        const Color c = color_[w];
        if (c && c <= best_ && !seen[c]) {
          seen[c] = 1;
          ++sat;
        }
      }
      const int deg = static_cast<int>(nbrs_[v].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void branch(int colored, int used) {
    if (best_ <= lower_) return;
    if (colored == n_) {
      best_ = used;
      best_coloring_ = color_;
      return;
    }
    const Vertex v = pick();
    const int limit = std::min(used + 1, best_ - 1);
    for (Color c = 1; c <= limit; ++c) {
      bool ok = true;
      for (Vertex w : nbrs_[v])
        if (color_[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[v] = c;
      branch(colored + 1, std::max(used, c));
      color_[v] = 0;
      if (best_ <= lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  int lower_;
  int best_ = 0;
  std::vector<Color> color_;
  std::vector<Color> best_coloring_;
  std::vector<std::vector<Vertex>> nbrs_;
};

void require_nontrivial_connected(const Graph& g) {
  if (g.order() < 2) throw DomainError("rvd is defined for connected graphs with n >= 2");
  if (!is_connected(g)) throw DomainError("rvd requires a connected graph");
}

// Canonical set-partition search for a fixed number of classes.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const Graph& conflicts, bool prune)
      : g_(g), n_(g.order()), prune_(prune) {
    conflict_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) conflict_[v] = conflicts.mask(v);
    assign_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<VertexColoring> run(int k) {
    k_ = k;
    class_mask_.assign(static_cast<std::size_t>(k), 0);
    found_.reset();
    descend(0, 0);
    return found_;
  }

 private:
  bool descend(Vertex v, int used) {
    if (v == n_) {
      if (used != k_) return false;
      std::vector<Color> colors(assign_.begin(), assign_.end());
      for (Color& c : colors) c += 1;
      VertexColoring c(std::move(colors));
      if (is_rvd_coloring(g_, c, false).valid) {
        found_ = std::move(c);
        return true;
      }
      return false;
    }
    const int remaining_after = n_ - v - 1;
    const int options = std::min(used + 1, k_);
    for (int cls = 0; cls < options; ++cls) {
      const int used_after = std::max(used, cls + 1);
      if (used_after + remaining_after < k_) continue;
      if (prune_ && (class_mask_[cls] & conflict_[v])) continue;
      assign_[v] = cls;
      class_mask_[cls] |= Word{1} << v;
      const bool done = descend(v + 1, used_after);
      class_mask_[cls] &= ~(Word{1} << v);
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool prune_;
  int k_ = 0;
  std::vector<Word> conflict_;
  std::vector<Word> class_mask_;
  std::vector<int> assign_;
  std::optional<VertexColoring> found_;
};

void attach_certificates(RvdReport& r, const Graph& g, const SolverOptions& options) {
  if (!options.collect_certificates || g.order() > kMaskLimit) return;
  auto check = is_rvd_coloring(g, r.optimal_coloring, true);
  if (!check.valid) throw std::logic_error("solver produced a coloring that is not an rvd-coloring");
  r.certificates = std::move(check.certificates);
}

// Two colors on a graph whose blocks are K2s and cycles: walk the block-cut
// tree from vertex 0; in each cycle the first half of the cyclic order from
// the already-colored vertex keeps its color, the rest take the other one.
VertexColoring block_two_coloring(const Graph& g) {
  const auto dec = blocks(g);
  const int n = g.order();
  std::vector<Color> color(static_cast<std::size_t>(n), 0);
  color[0] = 1;
  std::vector<bool> done(dec.blocks.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
      if (done[b]) continue;
      const auto& block = dec.blocks[b];
      const auto root_it =
          std::find_if(block.begin(), block.end(), [&](Vertex v) { return color[v] != 0; });
      if (root_it == block.end()) continue;
      const Vertex root = *root_it;
      if (dec.kinds[b] == BlockKind::kK2) {
        for (Vertex v : block)
          if (!color[v]) color[v] = 1;
      } else {
        std::vector<Vertex> cyclic{root};
        Vertex prev = -1;
        Vertex cur = root;
        while (static_cast<int>(cyclic.size()) < static_cast<int>(block.size())) {
          Vertex next = -1;
          for (Vertex w : block)
            if (w != prev && w != cur && g.adjacent(cur, w)) {
              next = w;
              break;
            }
          cyclic.push_back(next);
          prev = cur;
          cur = next;
        }
        const int half = static_cast<int>(cyclic.size()) / 2;
        const Color keep = color[root];
        for (int i = 1; i < static_cast<int>(cyclic.size()); ++i)
          color[cyclic[i]] = i < half ? keep : 3 - keep;
      }
      done[b] = true;
      progress = true;
    }
  }
  // Vertices never reached would mean a disconnected input.
  for (Color& c : color)
    if (!c) c = 1;
  return VertexColoring(std::move(color));
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kClosedForm:
      return "CLOSED_FORM";
    case Method::kExactSearch:
      return "EXACT_SEARCH";
    case Method::kBoundsOnly:
      return "BOUNDS_ONLY";
  }
  return "?";
}

int max_clique_size(const Graph& g) {
  int best = 0;
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.insert(v);
  clique_expand(g, 0, all, best);
  return best;
}

int chromatic_number(const Graph& g, std::vector<Color>* coloring) {
  if (g.order() == 0) {
    if (coloring) coloring->clear();
    return 0;
  }
  DsaturSearch search(g, max_clique_size(g));
  return search.solve(coloring);
}

Graph common_neighbor_graph(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (simd::and_popcount(g.row(u), g.row(v)) >= 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

int injective_chromatic_number(const Graph& g, std::vector<Color>* coloring) {
  if (g.order() < 1) throw DomainError("injective_chromatic_number requires n >= 1");
  return chromatic_number(common_neighbor_graph(g), coloring);
}

Bound rvd_lower_bound(const Graph& g) {
  require_nontrivial_connected(g);
  const int kplus = upper_connectivity(g);
  const int clique = max_clique_size(conflict_graph(g));
  if (clique > kplus) return {clique, "conflict_clique"};
  return {kplus, "upper_connectivity"};
}

Bound rvd_upper_bound(const Graph& g) {
  require_nontrivial_connected(g);
  const int chi = injective_chromatic_number(g);
  if (chi < g.order()) return {chi, "injective_chromatic"};
  return {g.order(), "order"};
}

RvdReport rvd_exact(const Graph& g, const SolverOptions& options) {
  const auto start = Clock::now();
  require_nontrivial_connected(g);
  const int cap = std::min(options.exact_cap, kMaskLimit);
  if (g.order() > cap) throw CapExceeded(static_cast<std::size_t>(g.order()),
                                         static_cast<std::size_t>(cap));
  RvdReport report;
  report.method = Method::kExactSearch;
  report.lower = rvd_lower_bound(g);
  report.upper = rvd_upper_bound(g);

  PartitionSearch search(g, conflict_graph(g), options.conflict_pruning);
  for (int k = report.lower.value; k <= report.upper.value; ++k) {
    if (auto found = search.run(k)) {
      report.rvd = k;
      report.optimal_coloring = std::move(*found);
      break;
    }
  }
  if (!report.rvd) throw std::logic_error("no rvd-coloring found up to the injective bound");
  attach_certificates(report, g, options);
  report.elapsed = Clock::now() - start;
  return report;
}

RvdReport rvd_fast(const Graph& g, const SolverOptions& options) {
  const auto start = Clock::now();
  require_nontrivial_connected(g);
  const int n = g.order();

  auto closed = [&](int value, VertexColoring coloring, std::string rule) {
    RvdReport r;
    r.rvd = value;
    r.method = Method::kClosedForm;
    r.optimal_coloring = std::move(coloring);
    r.closed_form_rule = rule;
    r.lower = {value, rule};
    r.upper = {value, rule};
    attach_certificates(r, g, options);
    r.elapsed = Clock::now() - start;
    return r;
  };

  if (check_rvd_is_1(g)) return closed(1, VertexColoring::monochromatic(n), "tree");
  if (check_rvd_is_n(g))
    return closed(n, VertexColoring::distinct(n), "pairwise_two_common_neighbors");
  if (check_rvd_is_2(g)) return closed(2, block_two_coloring(g), "cactus_blocks");
  if (check_rvd_is_n_minus_1(g).holds) {
    // Any low pair may share a color while every other vertex is distinct.
    const auto [x, y] = low_pairs(g).front();
    std::vector<Color> colors(static_cast<std::size_t>(n));
    Color next = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (v == y) continue;
      colors[v] = next++;
    }
    colors[y] = colors[x];
    return closed(n - 1, VertexColoring(std::move(colors)), "low_pair_conditions");
  }

  if (n <= std::min(options.exact_cap, kMaskLimit)) {
    RvdReport r = rvd_exact(g, options);
    r.elapsed = Clock::now() - start;
    return r;
  }
  RvdReport r;
  r.method = Method::kBoundsOnly;
  r.lower = rvd_lower_bound(g);
  r.upper = rvd_upper_bound(g);
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace rvd
