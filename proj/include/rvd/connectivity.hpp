#pragma once

// Local, global and upper vertex connectivity via unit-capacity flow on the
// vertex-split digraph, plus block (biconnected component) decomposition.

#include <vector>

#include "rvd/graph.hpp"

namespace rvd {

/// Maximum number of internally disjoint x-y paths in `g` (for adjacent x, y
/// the direct edge counts as one path). Throws DomainError when x == y.
int max_disjoint_paths(const Graph& g, Vertex x, Vertex y);

/// kappa_G(x, y): minimum x-y separator size for nonadjacent pairs, and
/// kappa_{G-xy}(x, y) + 1 for adjacent pairs.
int local_connectivity(const Graph& g, Vertex x, Vertex y);

/// Internal vertices of a minimum x-y separator in g (x, y nonadjacent),
/// read off the residual graph of a maximum flow.
std::vector<Vertex> minimum_separator(const Graph& g, Vertex x, Vertex y);

/// kappa^+(G): maximum local connectivity over all pairs. Requires a
/// connected graph with n >= 2.
int upper_connectivity(const Graph& g);

/// kappa(G); n - 1 for complete graphs, 0 for disconnected or trivial ones.
int connectivity(const Graph& g);

enum class BlockKind { kK2, kCycle, kOther };

const char* block_kind_name(BlockKind kind);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  ///< each sorted; ordered by discovery
  std::vector<BlockKind> kinds;
  std::vector<bool> is_end_block;           ///< exactly one cut vertex
  std::vector<Vertex> cut_vertices;         ///< sorted
};

/// Requires a connected graph. The trivial graph is a single OTHER block.
BlockDecomposition blocks(const Graph& g);

}  // namespace rvd
