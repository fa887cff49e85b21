#include "rvd/characterizations.hpp"

#include <algorithm>

#include "rvd/connectivity.hpp"
#include "rvd/error.hpp"

namespace rvd {
namespace {

void require_connected(const Graph& g, int min_order) {
  if (g.order() < min_order)
    throw DomainError("characterization requires n >= " + std::to_string(min_order));
  if (!is_connected(g)) throw DomainError("characterization requires a connected graph");
}

// Picks u in `us`, v in `vs` with u != v, preferring the smallest ids.
std::optional<std::pair<Vertex, Vertex>> distinct_pick(const VertexSet& us, const VertexSet& vs) {
  std::optional<std::pair<Vertex, Vertex>> out;
  us.for_each([&](Vertex u) {
    if (out) return;
    vs.for_each([&](Vertex v) {
      if (!out && u != v) out = std::make_pair(u, v);
    });
  });
  return out;
}

}  // namespace

const char* pattern_name(PatternId id) {
  switch (id) {
    case PatternId::kTwoPairPaths:
      return "two-pair-paths";
    case PatternId::kTwoPairBridge:
      return "two-pair-bridge";
    case PatternId::kTriangle:
      return "triangle";
    case PatternId::kTriplePaths:
      return "triple-paths";
  }
  return "?";
}

bool check_rvd_is_1(const Graph& g) {
  require_connected(g, 1);
  return g.size() == g.order() - 1;
}

bool check_rvd_is_2(const Graph& g) {
  require_connected(g, 1);
  const auto dec = blocks(g);
  bool any_cycle = false;
  for (BlockKind kind : dec.kinds) {
    if (kind == BlockKind::kOther) return false;
    any_cycle = any_cycle || kind == BlockKind::kCycle;
  }
  return any_cycle;
}

bool check_rvd_is_n(const Graph& g) {
  require_connected(g, 2);
  return min_pairwise_common_neighbors(g) >= 2;
}

std::vector<Edge> low_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (common_neighbor_count(g, u, v) <= 1) out.emplace_back(u, v);
  return out;
}

std::optional<PatternMatch> find_two_pair_pattern(const Graph& g, Edge first, Edge second) {
  const auto [x, y] = first;
  const auto [p, q] = second;
  if (x == p || x == q || y == p || y == q)
    throw DomainError("two-pair pattern needs vertex-disjoint pairs");
  VertexSet anchors(g.order());
  for (Vertex v : {x, y, p, q}) anchors.insert(v);

  const Vertex firsts[2][2] = {{x, y}, {y, x}};
  const Vertex seconds[2][2] = {{p, q}, {q, p}};

  for (const auto& fa : firsts) {
    for (const auto& sb : seconds) {
      const Vertex a = fa[0], a2 = fa[1], b = sb[0], b2 = sb[1];
      if (g.adjacent(a, b) && g.adjacent(a, a2) && g.adjacent(a2, b) && g.adjacent(a, b2) &&
          g.adjacent(b2, b)) {
        return PatternMatch{PatternId::kTwoPairBridge,
                            {a, a2, b, b2},
                            {},
                            {{a, b}, {a, a2}, {a2, b}, {a, b2}, {b2, b}}};
      }
    }
  }
  for (const auto& fa : firsts) {
    for (const auto& sb : seconds) {
      const Vertex a = fa[0], a2 = fa[1], b = sb[0], b2 = sb[1];
      if (!g.adjacent(a2, b2)) continue;
      const VertexSet ab = g.neighbors(a) & g.neighbors(b);
      const VertexSet us = (ab & g.neighbors(a2)) - anchors;
      const VertexSet vs = (ab & g.neighbors(b2)) - anchors;
      if (auto pick = distinct_pick(us, vs)) {
        const auto [u, v] = *pick;
        return PatternMatch{PatternId::kTwoPairPaths,
                            {a, a2, b, b2},
                            {u, v},
                            {{u, a}, {a, v}, {u, b}, {b, v}, {u, a2}, {a2, b2}, {b2, v}}};
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternMatch> find_triple_pattern(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) throw DomainError("triple pattern needs distinct vertices");
  if (g.adjacent(x, y) && g.adjacent(y, z) && g.adjacent(x, z))
    return PatternMatch{PatternId::kTriangle, {x, y, z}, {}, {{x, y}, {y, z}, {x, z}}};

  VertexSet anchors(g.order());
  for (Vertex v : {x, y, z}) anchors.insert(v);
  const Vertex orders[6][3] = {{x, y, z}, {x, z, y}, {y, x, z}, {y, z, x}, {z, x, y}, {z, y, x}};
  for (const auto& o : orders) {
    const Vertex a = o[0], b = o[1], c = o[2];
    if (!g.adjacent(b, c)) continue;
    const VertexSet us = (g.neighbors(a) & g.neighbors(b)) - anchors;
    const VertexSet vs = (g.neighbors(a) & g.neighbors(c)) - anchors;
    if (auto pick = distinct_pick(us, vs)) {
      const auto [u, v] = *pick;
      return PatternMatch{PatternId::kTriplePaths,
                          {a, b, c},
                          {u, v},
                          {{u, a}, {a, v}, {u, b}, {b, c}, {c, v}}};
    }
  }
  return std::nullopt;
}

NMinus1Result check_rvd_is_n_minus_1(const Graph& g) {
  require_connected(g, 2);
  NMinus1Result out;
  const auto low = low_pairs(g);
  if (low.empty()) {
    out.violated_condition = 1;
    return out;
  }

  for (std::size_t i = 0; i < low.size(); ++i) {
    for (std::size_t j = i + 1; j < low.size(); ++j) {
      const auto [x, y] = low[i];
      const auto [p, q] = low[j];
      if (x == p || x == q || y == p || y == q) continue;
      if (!find_two_pair_pattern(g, low[i], low[j])) {
        out.violated_condition = 2;
        out.offending = {x, y, p, q};
        return out;
      }
    }
  }

  const int n = g.order();
  std::vector<std::vector<char>> is_low(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : low) is_low[u][v] = is_low[v][u] = 1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (!is_low[x][y]) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (!is_low[x][z] || !is_low[y][z]) continue;
        if (!find_triple_pattern(g, x, y, z)) {
          out.violated_condition = 3;
          out.offending = {x, y, z};
          return out;
        }
      }
    }

  out.holds = true;
  return out;
}

Graph build_extremal_n_minus_1(int n) {
  if (n < 3) throw DomainError("build_extremal_n_minus_1 requires n >= 3");
  std::vector<Edge> removed;
  for (Vertex i = 0; i < n - 3; ++i) removed.emplace_back(i, n - 1);
  return families::complete_minus(n, removed);
}

Graph build_ng_extremal(int n) {
  if (n < 12) throw DomainError("build_ng_extremal requires n = 4k + t with k >= 3 (n >= 12)");
  const int k = n / 4;
  const int t = n % 4;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  auto clique = [&](const std::vector<Vertex>& members) {
    for (Vertex u : members)
      for (Vertex v : members)
        if (u != v) adj[u][v] = 1;
  };
  // 1-based v_i is id i - 1.
  for (int part = 0; part < 4; ++part) {
    std::vector<Vertex> members;
    const int size = part == 3 ? k + t : k;
    for (int i = 0; i < size; ++i) members.push_back(part * k + i);
    clique(members);
  }
  for (int i = 1; i <= k - 1; ++i) clique({i - 1, k + i - 1, 2 * k + i - 1, 3 * k + i - 1});
  std::vector<Vertex> tail{k - 1, 2 * k - 1, 3 * k - 1};
  for (int v = 4 * k; v <= 4 * k + t; ++v) tail.push_back(v - 1);
  clique(tail);

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph tree_complement_extremal(int n) {
  if (n < 4) throw DomainError("tree_complement_extremal requires n >= 4");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= n - 2; ++leaf) edges.emplace_back(0, leaf);
  edges.emplace_back(1, n - 1);
  return Graph(n, edges);
}

}  // namespace rvd
