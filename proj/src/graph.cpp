#include "rvd/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "rvd/error.hpp"

namespace rvd {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) return;
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

int VertexSet::size() const { return static_cast<int>(simd::popcount(words_)); }

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
  return -1;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), stride_(words_for(n)) {
  if (n < 0) throw DomainError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    set_edge(u, v, true);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  const bool had = adjacent(u, v);
  if (had == present) return;
  const Word bu = Word{1} << (u % kWordBits);
  const Word bv = Word{1} << (v % kWordBits);
  Word& ru = bits_[static_cast<std::size_t>(u) * stride_ + v / kWordBits];
  Word& rv = bits_[static_cast<std::size_t>(v) * stride_ + u / kWordBits];
  if (present) {
    ru |= bv;
    rv |= bu;
    ++m_;
  } else {
    ru &= ~bv;
    rv &= ~bu;
    --m_;
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (bits_[static_cast<std::size_t>(u) * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(simd::popcount(row(v)));
}

std::span<const Word> Graph::row(Vertex v) const {
  return {bits_.data() + static_cast<std::size_t>(v) * stride_, static_cast<std::size_t>(stride_)};
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet out(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), out.words().begin());
  return out;
}

Word Graph::mask(Vertex v) const {
  if (n_ > kWordBits) throw DomainError("mask() requires at most 64 vertices");
  return bits_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  Graph out = *this;
  out.set_edge(u, v, true);
  return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph out = *this;
  if (u != v) out.set_edge(u, v, false);
  return out;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.is_connected = is_connected(g);
  s.is_tree = s.is_connected && s.m == s.n - 1;
  return s;
}

// ------------------------------------------------------------------- graph6

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6Max = 126;
constexpr int kShortFormMax = 62;
constexpr int kLongFormMax = 258047;

std::string_view trim_record(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  return line;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_record(line);
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("graph6 record truncated", i);
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kG6Bias || c > kG6Max) throw ParseError("graph6 byte out of range", i);
    return c - kG6Bias;
  };

  if (pos >= line.size()) throw ParseError("graph6 record is empty", pos);
  int n = 0;
  if (line[pos] == '~') {
    if (pos + 1 < line.size() && line[pos + 1] == '~')
      throw ParseError("graph6 8-byte order header unsupported", pos);
    n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n <= kShortFormMax) throw ParseError("graph6 long-form header for small order", pos);
    pos += 4;
  } else {
    n = byte_at(pos);
    if (n > kShortFormMax) throw ParseError("graph6 header byte invalid", pos);
    pos += 1;
  }

  const long long bit_count = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((bit_count + 5) / 6);
  if (line.size() < pos + payload) throw ParseError("graph6 record truncated", line.size());
  if (line.size() > pos + payload) throw ParseError("graph6 trailing bytes", pos + payload);

  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + payload - 1;
    const int pad_bits = 6 - static_cast<int>(k % 6);
    if (byte_at(last) & ((1 << pad_bits) - 1)) throw ParseError("graph6 nonzero padding", last);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kShortFormMax) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= kLongFormMax) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Bias));
  } else {
    throw DomainError("graph6 encoding supports at most 258047 vertices");
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kG6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kG6Bias));
  return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be \"n m\"", 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list truncated at edge " + std::to_string(i), 0);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// --------------------------------------------------------------- structure

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

VertexSet common_neighbors(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw DomainError("common_neighbors requires distinct vertices");
  return g.neighbors(x) & g.neighbors(y);
}

int common_neighbor_count(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw DomainError("common_neighbor_count requires distinct vertices");
  return static_cast<int>(simd::and_popcount(g.row(x), g.row(y)));
}

int common_non_neighbor_count(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw DomainError("common_non_neighbor_count requires distinct vertices");
  VertexSet others(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x && v != y) others.insert(v);
  return static_cast<int>(simd::nor_popcount(g.row(x), g.row(y), others.words()));
}

int min_pairwise_common_neighbors(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("min_pairwise_common_neighbors requires n >= 2");
  int best = n;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      best = std::min(best, static_cast<int>(simd::and_popcount(g.row(x), g.row(y))));
  return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      g.neighbors(u).for_each([&](Vertex w) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(sorted.size()), edges);
}

// ----------------------------------------------------------------- families

namespace families {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph complete_minus(int n, std::span<const Edge> removed) {
  Graph g = complete(n);
  for (auto [u, v] : removed) {
    if (!g.adjacent(u, v)) throw DomainError("edge removed twice or invalid");
    g = g.without_edge(u, v);
  }
  return g;
}

}  // namespace families

}  // namespace rvd
