#pragma once

// Exhaustive small-graph corpora: one representative per isomorphism class.

#include <cstdint>
#include <string>
#include <vector>

#include "rvd/graph.hpp"

namespace rvd {

/// Upper-triangle adjacency bits of a graph with n <= 11, bit index
/// j*(j-1)/2 + i for i < j (graph6 order).
std::uint64_t adjacency_code(const Graph& g);

/// Canonical relabelling: vertices ordered by non-increasing degree, then the
/// labelling with the largest adjacency code within that order. Two graphs
/// are isomorphic iff their canonical forms are equal. Requires n <= 11.
Graph canonical_form(const Graph& g);

/// All graphs on n vertices up to isomorphism (n <= 8), canonically labelled,
/// ordered by graph6 string.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

/// Connected graphs for every order in [min_n, max_n].
std::vector<Graph> connected_corpus(int min_n, int max_n);

/// Non-isomorphic trees on n vertices (filtered from the exhaustive corpus).
std::vector<Graph> enumerate_trees(int n);

}  // namespace rvd
