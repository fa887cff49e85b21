#include "rvd/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "rvd/error.hpp"

namespace rvd {
namespace {

// Vertex v is split into in-node 2v and out-node 2v+1 joined by a unit arc.
class SplitNetwork {
 public:
  // Edge arcs need capacity above n for the residual cut to consist of
  // vertex arcs only.
  explicit SplitNetwork(const Graph& g, int edge_cap = 1) : head_(2 * static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, edge_cap);
      add_arc(2 * v + 1, 2 * u, edge_cap);
    }
  }

  /// Max flow from out(x) to in(y), i.e. internally disjoint x-y paths.
  int max_flow(Vertex x, Vertex y) {
    const int source = 2 * x + 1;
    const int sink = 2 * y;
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int a : head_[u]) {
          const int w = arcs_[a].to;
          if (arcs_[a].cap > 0 && via[w] == -1) {
            via[w] = a;
            queue.push(w);
          }
        }
      }
      if (via[sink] == -1) return flow;
      for (int node = sink; node != source;) {
        const int a = via[node];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        node = arcs_[a ^ 1].to;
      }
      ++flow;
    }
  }

  /// Nodes reachable from `from` in the residual network.
  std::vector<bool> residual_reach(int from) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a : head_[u]) {
        const int w = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  void add_arc(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
};

void check_pair(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw DomainError("connectivity query requires distinct vertices");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw DomainError("vertex out of range");
}

}  // namespace

int max_disjoint_paths(const Graph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  SplitNetwork net(g);
  return net.max_flow(x, y);
}

int local_connectivity(const Graph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  if (g.adjacent(x, y)) {
    SplitNetwork net(g.without_edge(x, y));
    return net.max_flow(x, y) + 1;
  }
  SplitNetwork net(g);
  return net.max_flow(x, y);
}

std::vector<Vertex> minimum_separator(const Graph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  if (g.adjacent(x, y)) throw DomainError("minimum_separator requires nonadjacent vertices");
  SplitNetwork net(g, g.order() + 1);
  net.max_flow(x, y);
  const auto reach = net.residual_reach(2 * x + 1);
  std::vector<Vertex> sep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x && v != y && reach[2 * v] && !reach[2 * v + 1]) sep.push_back(v);
  return sep;
}

int upper_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("upper_connectivity requires n >= 2");
  if (!is_connected(g)) throw DomainError("upper_connectivity requires a connected graph");
  int best = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      // kappa(x, y) <= min degree of the pair.
      if (std::min(g.degree(x), g.degree(y)) <= best) continue;
      best = std::max(best, local_connectivity(g, x, y));
      if (best == n - 1) return best;
    }
  }
  return best;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y)) best = std::min(best, local_connectivity(g, x, y));
  return best;
}

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::kK2:
      return "K2";
    case BlockKind::kCycle:
      return "CYCLE";
    case BlockKind::kOther:
      return "OTHER";
  }
  return "?";
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw DomainError("blocks requires a connected graph");
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.kinds.push_back(BlockKind::kOther);
    out.is_end_block.push_back(false);
    return out;
  }

  // Hopcroft-Tarjan with an explicit edge stack.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<Edge> edge_stack;
  int timer = 0;

  std::function<void(Vertex, Vertex)> visit = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    g.neighbors(u).for_each([&](Vertex w) {
      if (disc[w] == -1) {
        ++children;
        edge_stack.emplace_back(u, w);
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != -1 || children > 1) is_cut[u] = true;
          std::vector<Vertex> block;
          while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, w}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  visit(0, -1);

  // The root is a cut vertex iff it has more than one DFS child; the
  // children counter above handles that case.
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);

  for (const auto& block : out.blocks) {
    const int k = static_cast<int>(block.size());
    int inner_edges = 0;
    bool all_degree_two = true;
    for (Vertex u : block) {
      int d = 0;
      for (Vertex w : block)
        if (g.adjacent(u, w)) ++d;
      inner_edges += d;
      all_degree_two = all_degree_two && d == 2;
    }
    inner_edges /= 2;
    if (k == 2) {
      out.kinds.push_back(BlockKind::kK2);
    } else if (k >= 3 && inner_edges == k && all_degree_two) {
      out.kinds.push_back(BlockKind::kCycle);
    } else {
      out.kinds.push_back(BlockKind::kOther);
    }
    const auto cuts = std::count_if(block.begin(), block.end(), [&](Vertex v) { return is_cut[v]; });
    out.is_end_block.push_back(cuts == 1);
  }
  return out;
}

}  // namespace rvd
