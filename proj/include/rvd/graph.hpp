#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, stored as one packed
// bitset row per vertex so neighborhood intersections are word-parallel.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rvd/simd/bitops.hpp"

namespace rvd {

using Vertex = int;
using Word = simd::Word;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kWordBits = 64;

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

/// Dynamic bitset over a fixed vertex universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;
  /// Smallest member, or -1.
  Vertex first() const;
  std::vector<Vertex> to_vector() const;
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

VertexSet operator&(VertexSet a, const VertexSet& b);
VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator-(VertexSet a, const VertexSet& b);

/// Immutable simple graph. Loops and parallel edges are rejected at
/// construction time rather than cleaned.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws DomainError on loops, duplicate edges or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::span<const Word> row(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  /// Neighborhood as a single word; requires order() <= 64.
  Word mask(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int min_degree() const;
  int max_degree() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void set_edge(Vertex u, Vertex v, bool present);
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  int stride_ = 0;
  std::vector<Word> bits_;
};

struct GraphStats {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool is_connected = false;
  bool is_tree = false;
};

GraphStats stats(const Graph& g);

// graph6: header byte n+63 (or '~' plus three bytes for 63 <= n <= 258047),
// then the upper triangle in column-major order, six bits per byte.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Edge-list text: a header "n m" followed by m lines "u v".
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph complement(const Graph& g);

/// N(x) ∩ N(y). Throws DomainError when x == y.
VertexSet common_neighbors(const Graph& g, Vertex x, Vertex y);
int common_neighbor_count(const Graph& g, Vertex x, Vertex y);
/// Vertices other than x, y adjacent to neither.
int common_non_neighbor_count(const Graph& g, Vertex x, Vertex y);
/// Minimum common-neighbor count over all unordered pairs; requires n >= 2.
int min_pairwise_common_neighbors(const Graph& g);

/// Connected components, each sorted, ordered by least vertex id.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `keep`, relabelled in ascending id order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

namespace families {
Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
/// K_{1,leaves}; vertex 0 is the center.
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);
Graph petersen();
/// K_n minus the given edges.
Graph complete_minus(int n, std::span<const Edge> removed);
}  // namespace families

}  // namespace rvd
