#pragma once

// Polynomial-time recognition of rvd(G) in {1, 2, n - 1, n} and the extremal
// constructions that attain the related bounds.

#include <optional>
#include <vector>

#include "rvd/graph.hpp"

namespace rvd {

/// rvd = 1 iff G is a tree. Requires G connected.
bool check_rvd_is_1(const Graph& g);

/// rvd = 2 iff every block is K2 or a cycle and at least one block is a
/// cycle. Requires G connected.
bool check_rvd_is_2(const Graph& g);

/// rvd = n iff every pair has at least two common neighbors. Requires G
/// connected, n >= 2.
bool check_rvd_is_n(const Graph& g);

// Local patterns that block sharing colors among low pairs (pairs with at
// most one common neighbor). For two vertex-disjoint low pairs {x, y},
// {p, q} let {a, a'} = {x, y} and {b, b'} = {p, q}:
//   kTwoPairPaths  u, v outside the anchors with paths u-a-v, u-b-v and
//                  u-a'-b'-v (three internally disjoint u-v paths);
//   kTwoPairBridge edge ab with the two paths a-a'-b and a-b'-b.
// For a triple {x, y, z} of pairwise low vertices with {a, b, c} = {x, y, z}:
//   kTriangle      x, y, z form a triangle;
//   kTriplePaths   u, v outside the anchors with paths u-a-v and u-b-c-v.
enum class PatternId { kTwoPairPaths, kTwoPairBridge, kTriangle, kTriplePaths };

const char* pattern_name(PatternId id);

struct PatternMatch {
  PatternId pattern_id = PatternId::kTriangle;
  std::vector<Vertex> anchor_vertices;     ///< (a, a', b, b') or (a, b, c)
  std::vector<Vertex> auxiliary_vertices;  ///< (u, v) when the pattern has them
  std::vector<Edge> edges_used;
};

/// Low pairs (u < v, m_G(u, v) <= 1) in lexicographic order.
std::vector<Edge> low_pairs(const Graph& g);

std::optional<PatternMatch> find_two_pair_pattern(const Graph& g, Edge first, Edge second);
std::optional<PatternMatch> find_triple_pattern(const Graph& g, Vertex x, Vertex y, Vertex z);

struct NMinus1Result {
  bool holds = false;
  /// 0 when all conditions hold, otherwise the first violated condition:
  /// 1 = no low pair, 2 = disjoint low pairs without a two-pair pattern,
  /// 3 = low triple without a triple pattern.
  int violated_condition = 0;
  std::vector<Vertex> offending;  ///< the pairs (x, y, p, q) or triple (x, y, z)
};

/// rvd = n - 1 recognition by the three low-pair conditions. Requires G
/// connected, n >= 2.
NMinus1Result check_rvd_is_n_minus_1(const Graph& g);

/// K_n minus the edges v_n v_i for i = 1..n-3 (ids shifted to 0-based), with
/// C(n, 2) - n + 3 edges and rvd = n - 1. Requires n >= 3.
Graph build_extremal_n_minus_1(int n);

/// Four cliques V1..V4 of sizes k, k, k, k + t (n = 4k + t, k >= 3), joined
/// by the transversal cliques {v_i, v_{k+i}, v_{2k+i}, v_{3k+i}} for
/// i < k and the clique on {v_k, v_2k, v_3k, v_4k, ..., v_{4k+t}}. Both it
/// and its complement have every pair sharing two neighbors. Requires n >= 12.
Graph build_ng_extremal(int n);

/// K_{1,n-2} with one leaf extended by a pendant vertex. Its complement has
/// rvd = n - 1 for n >= 8. Requires n >= 4.
Graph tree_complement_extremal(int n);

}  // namespace rvd
