#pragma once

// Vertex colorings and rainbow vertex-cuts.
//
// For a pair x, y a vertex set S (x, y not in S) is an x-y vertex-cut when x
// and y lie in different components of G - S (nonadjacent pair) or of
// (G - xy) - S (adjacent pair). It is a rainbow vertex-cut when S itself is
// rainbow (nonadjacent pair) or when S + x or S + y is rainbow (adjacent
// pair). A coloring is an rvd-coloring when every pair has one.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rvd/graph.hpp"

namespace rvd {

using Color = int;

class VertexColoring {
 public:
  VertexColoring() = default;
  /// Color ids must be >= 1.
  explicit VertexColoring(std::vector<Color> colors);

  static VertexColoring monochromatic(int n);
  /// Vertex v gets color v + 1.
  static VertexColoring distinct(int n);
  /// Parses "1,1,2,3".
  static VertexColoring parse(std::string_view text);

  int order() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const Color> colors() const { return colors_; }
  /// Number of distinct colors in use.
  int num_colors() const { return num_colors_; }
  /// Largest color id; equals num_colors() for canonical colorings.
  Color max_color() const { return max_color_; }
  /// Every id in 1..max_color() is used.
  bool is_canonical() const { return num_colors_ == max_color_; }
  /// Classes indexed by color - 1 (empty classes kept for gaps).
  std::vector<std::vector<Vertex>> classes() const;
  std::string to_string() const;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<Color> colors_;
  int num_colors_ = 0;
  Color max_color_ = 0;
};

struct CutCertificate {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> cut;  ///< sorted
  /// For adjacent pairs: the endpoint w with cut + w rainbow.
  std::optional<Vertex> side_witness;
};

bool is_rainbow(const VertexColoring& c, std::span<const Vertex> set);

/// Throws DomainError when x == y or S contains x or y.
bool is_vertex_cut(const Graph& g, std::span<const Vertex> cut, Vertex x, Vertex y);

/// Certificate check from first principles (cut property plus the rainbow
/// condition for the pair's adjacency type).
bool is_valid_rainbow_cut(const Graph& g, const VertexColoring& c, const CutCertificate& cert);

/// Searches selections of at most one vertex per color class of V - {x, y}
/// in lexicographic class order (class members by id, then "none"); the
/// first selection that is a cut satisfying the rainbow condition is shrunk
/// greedily to an inclusion-minimal cut. Requires n <= 64.
std::optional<CutCertificate> exists_rainbow_cut(const Graph& g, const VertexColoring& c,
                                                 Vertex x, Vertex y);

struct RvdCheck {
  bool valid = false;
  std::vector<CutCertificate> certificates;  ///< one per pair (x < y) when valid
  std::optional<Edge> failing_pair;          ///< first pair without a rainbow cut
};

/// Checks every unordered pair in lexicographic order, stopping at the first
/// failure. Set `collect` to false to skip building certificates.
RvdCheck is_rvd_coloring(const Graph& g, const VertexColoring& c, bool collect = true);

/// Graph on V(G) joining u, v iff they have at least two common neighbors;
/// such pairs receive distinct colors in every rvd-coloring.
Graph conflict_graph(const Graph& g);

}  // namespace rvd
