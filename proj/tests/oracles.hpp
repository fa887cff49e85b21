#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Graph container and work on a plain adjacency matrix.

#include <cstdint>
#include <vector>

#include "rvd/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix matrix_of(const rvd::Graph& g);

/// x and y separated after deleting the vertices in `removed` (bitmask) and,
/// when `drop_xy`, the edge xy itself.
bool separated(const Matrix& a, std::uint32_t removed, int x, int y, bool drop_xy);

/// Enumerates every subset of V - {x, y}.
bool rainbow_cut_exists(const Matrix& a, const std::vector<int>& color, int x, int y);

bool is_rvd_coloring(const Matrix& a, const std::vector<int>& color);

/// Smallest k admitting an rvd-coloring, over all set partitions. n <= 8.
int rvd(const rvd::Graph& g);

/// Minimum separator size (nonadjacent) or separator in G - xy plus one.
int local_connectivity(const Matrix& a, int x, int y);
int upper_connectivity(const rvd::Graph& g);

/// Fewest colors such that vertices with a common neighbor differ.
int injective_chromatic(const rvd::Graph& g);

int common_neighbors(const Matrix& a, int x, int y);

/// Connected with n - 1 edges.
bool is_tree(const Matrix& a);

bool connected(const Matrix& a);

}  // namespace oracle
