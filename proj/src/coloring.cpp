#include "rvd/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <map>
#include <set>

#include "rvd/error.hpp"

namespace rvd {

// ------------------------------------------------------------ VertexColoring

VertexColoring::VertexColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  std::set<Color> used;
  for (Color c : colors_) {
    if (c < 1) throw DomainError("color ids must be positive");
    used.insert(c);
    max_color_ = std::max(max_color_, c);
  }
  num_colors_ = static_cast<int>(used.size());
}

VertexColoring VertexColoring::monochromatic(int n) {
  return VertexColoring(std::vector<Color>(static_cast<std::size_t>(n), 1));
}

VertexColoring VertexColoring::distinct(int n) {
  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colors[v] = v + 1;
  return VertexColoring(std::move(colors));
}

VertexColoring VertexColoring::parse(std::string_view text) {
  std::vector<Color> colors;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return VertexColoring();
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Color value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected color id", pos);
    if (value < 1) throw ParseError("color ids must be positive", pos);
    colors.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return VertexColoring(std::move(colors));
}

std::vector<std::vector<Vertex>> VertexColoring::classes() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(max_color_));
  for (Vertex v = 0; v < order(); ++v) out[colors_[v] - 1].push_back(v);
  return out;
}

std::string VertexColoring::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(colors_[i]);
  }
  return out;
}

// ------------------------------------------------------------------ checks

bool is_rainbow(const VertexColoring& c, std::span<const Vertex> set) {
  std::set<Color> seen;
  for (Vertex v : set)
    if (!seen.insert(c[v]).second) return false;
  return true;
}

bool is_vertex_cut(const Graph& g, std::span<const Vertex> cut, Vertex x, Vertex y) {
  const int n = g.order();
  if (x == y) throw DomainError("is_vertex_cut requires distinct vertices");
  if (x < 0 || y < 0 || x >= n || y >= n) throw DomainError("vertex out of range");
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  for (Vertex v : cut) {
    if (v == x || v == y) throw DomainError("cut must not contain the pair's endpoints");
    if (v < 0 || v >= n) throw DomainError("vertex out of range");
    blocked[v] = 1;
  }
  const bool skip_direct = g.adjacent(x, y);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    bool reached = false;
    g.neighbors(u).for_each([&](Vertex w) {
      if (seen[w] || blocked[w]) return;
      if (skip_direct && ((u == x && w == y) || (u == y && w == x))) return;
      if (w == y) reached = true;
      seen[w] = 1;
      stack.push_back(w);
    });
    if (reached) return false;
  }
  return true;
}

bool is_valid_rainbow_cut(const Graph& g, const VertexColoring& c, const CutCertificate& cert) {
  for (Vertex v : cert.cut)
    if (v == cert.x || v == cert.y) return false;
  if (!is_vertex_cut(g, cert.cut, cert.x, cert.y)) return false;
  if (!g.adjacent(cert.x, cert.y)) return is_rainbow(c, cert.cut);
  if (!cert.side_witness || (*cert.side_witness != cert.x && *cert.side_witness != cert.y))
    return false;
  std::vector<Vertex> with_side = cert.cut;
  with_side.push_back(*cert.side_witness);
  return is_rainbow(c, with_side);
}

// -------------------------------------------------------------- cut search

namespace {

constexpr int kMaxSearchOrder = 64;

inline Word bit(Vertex v) { return Word{1} << v; }

class CutSearch {
 public:
  CutSearch(const Graph& g, const VertexColoring& c, Vertex x, Vertex y)
      : n_(g.order()), x_(x), y_(y), adjacent_(g.adjacent(x, y)), cx_(c[x]), cy_(c[y]) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    if (adjacent_) {
      adj_[x] &= ~bit(y);
      adj_[y] &= ~bit(x);
    }
    all_ = n_ == kMaxSearchOrder ? ~Word{0} : (bit(n_) - 1);

    std::map<Color, Word> by_color;
    for (Vertex v = 0; v < n_; ++v)
      if (v != x && v != y) by_color[c[v]] |= bit(v);
    for (auto [color, members] : by_color) {
      colors_.push_back(color);
      members_.push_back(members);
    }
    suffix_.assign(members_.size() + 1, 0);
    for (std::size_t i = members_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | members_[i];
    cx_members_ = by_color.count(cx_) ? by_color[cx_] : 0;
    cy_members_ = by_color.count(cy_) ? by_color[cy_] : 0;
  }

  std::optional<CutCertificate> run() {
    Word found = 0;
    std::optional<Vertex> side;
    if (!descend(0, 0, found, side)) return std::nullopt;
    // Greedy shrink in ascending id order; subsets of rainbow sets stay
    // rainbow, so the side condition is preserved.
    for (Word rest = found; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      if (separated(found & ~bit(v))) found &= ~bit(v);
    }
    CutCertificate cert;
    cert.x = x_;
    cert.y = y_;
    for (Word rest = found; rest; rest &= rest - 1) cert.cut.push_back(std::countr_zero(rest));
    cert.side_witness = side;
    return cert;
  }

 private:
  bool separated(Word removed) const {
    const Word allowed = all_ & ~removed;
    Word seen = bit(x_);
    Word frontier = seen;
    while (frontier) {
      Word next = 0;
      for (Word f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= allowed & ~seen;
      if (next & bit(y_)) return false;
      seen |= next;
      frontier = next;
    }
    return true;
  }

  // Side conditions for adjacent pairs: S + x rainbow iff S avoids color
  // c(x); likewise for y.
  bool x_side_open(Word s) const { return (s & cx_members_) == 0; }
  bool y_side_open(Word s) const { return (s & cy_members_) == 0; }

  bool descend(std::size_t cls, Word s, Word& found, std::optional<Vertex>& side) const {
    if (cls == members_.size()) {
      if (!separated(s)) return false;
      if (!adjacent_) {
        found = s;
        side.reset();
        return true;
      }
      if (x_side_open(s)) {
        found = s;
        side = x_;
        return true;
      }
      if (y_side_open(s)) {
        found = s;
        side = y_;
        return true;
      }
      return false;
    }

    // Relaxation: every completion is a subset of s plus all remaining
    // candidates; if even that does not separate, nothing below does.
    Word relax = s | suffix_[cls];
    if (adjacent_) {
      const bool xo = x_side_open(s);
      const bool yo = y_side_open(s);
      if (!xo && !yo) return false;
      if (xo && !yo) relax &= ~cx_members_;
      if (yo && !xo) relax &= ~cy_members_;
    }
    if (!separated(relax)) return false;

    for (Word m = members_[cls]; m; m &= m - 1) {
      if (descend(cls + 1, s | (m & -m), found, side)) return true;
    }
    return descend(cls + 1, s, found, side);
  }

  int n_;
  Vertex x_;
  Vertex y_;
  bool adjacent_;
  Color cx_;
  Color cy_;
  std::array<Word, kMaxSearchOrder> adj_{};
  Word all_ = 0;
  std::vector<Color> colors_;
  std::vector<Word> members_;
  std::vector<Word> suffix_;
  Word cx_members_ = 0;
  Word cy_members_ = 0;
};

void check_search_inputs(const Graph& g, const VertexColoring& c, Vertex x, Vertex y) {
  if (g.order() > kMaxSearchOrder) throw DomainError("rainbow cut search requires n <= 64");
  if (c.order() != g.order()) throw DomainError("coloring length differs from graph order");
  if (x == y) throw DomainError("rainbow cut search requires distinct vertices");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw DomainError("vertex out of range");
}

}  // namespace

std::optional<CutCertificate> exists_rainbow_cut(const Graph& g, const VertexColoring& c,
                                                 Vertex x, Vertex y) {
  check_search_inputs(g, c, x, y);
  return CutSearch(g, c, x, y).run();
}

RvdCheck is_rvd_coloring(const Graph& g, const VertexColoring& c, bool collect) {
  if (c.order() != g.order()) throw DomainError("coloring length differs from graph order");
  RvdCheck out;
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      auto cert = exists_rainbow_cut(g, c, x, y);
      if (!cert) {
        out.failing_pair = Edge{x, y};
        out.certificates.clear();
        return out;
      }
      if (collect) out.certificates.push_back(std::move(*cert));
    }
  }
  out.valid = true;
  return out;
}

Graph conflict_graph(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (simd::and_popcount(g.row(u), g.row(v)) >= 2) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace rvd
