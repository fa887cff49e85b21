#include "rvd/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rvd/error.hpp"

namespace rvd {
namespace {

constexpr int kMaxCanonicalOrder = 11;

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& label_to_vertex) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(label_to_vertex[i], label_to_vertex[j]))
        code |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
  return code;
}

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (j * (j - 1) / 2 + i)) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Degree plus sorted neighbour degrees: an isomorphism invariant that splits
// most vertex orbits before the permutation search.
std::vector<int> vertex_key(const Graph& g, Vertex v) {
  std::vector<int> key{g.degree(v)};
  std::vector<int> nd;
  g.neighbors(v).for_each([&](Vertex w) { nd.push_back(g.degree(w)); });
  std::sort(nd.rbegin(), nd.rend());
  key.insert(key.end(), nd.begin(), nd.end());
  return key;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> keys;
  for (Vertex v = 0; v < n; ++v) keys.push_back(vertex_key(g, v));
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] > keys[b]; });

  // Cells of equal key; permute within each cell independently.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && keys[order[j]] == keys[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);

  std::uint64_t best = 0;
  bool first = true;
  while (true) {
    const std::uint64_t code = code_under(g, order);
    if (first || code > best) best = code;
    first = false;
    // Odometer over the cells' permutations.
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw DomainError("adjacency_code requires n <= 11");
  std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
  return code_under(g, identity);
}

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw DomainError("canonical_form requires n <= 11");
  return from_code(g.order(), canonical_code(g));
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > 8) throw DomainError("enumerate_graphs supports 0 <= n <= 8");
  // Grow one vertex at a time: every graph on k+1 vertices is some graph on
  // k vertices plus a vertex with an arbitrary neighbourhood.
  std::set<std::uint64_t> level{0};
  for (int k = 0; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = from_code(k, code);
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << k); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (int i = 0; i < k; ++i)
          if ((nbrs >> i) & 1U) edges.emplace_back(i, k);
        next.insert(canonical_code(Graph(k + 1, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (std::uint64_t code : level) {
    Graph g = from_code(n, code);
    if (connected_only && !is_connected(g)) continue;
    keyed.emplace_back(encode_graph6(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::vector<Graph> connected_corpus(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    auto level = enumerate_graphs(n, true);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxCanonicalOrder) throw DomainError("enumerate_trees supports 1 <= n <= 11");
  // Every tree on k+1 vertices is a tree on k vertices plus a pendant leaf.
  std::set<std::uint64_t> level{0};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = from_code(k, code);
      for (Vertex attach = 0; attach < k; ++attach) {
        std::vector<Edge> edges = base.edges();
        edges.emplace_back(attach, k);
        next.insert(canonical_code(Graph(k + 1, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (std::uint64_t code : level) {
    Graph g = from_code(n, code);
    keyed.emplace_back(encode_graph6(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace rvd
