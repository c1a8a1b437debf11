#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aspec/graph.hpp"

namespace aspec {

/// n^(n-2) labeled trees on n vertices (1 for n <= 2).
std::uint64_t labeled_tree_count(int n);

/// The `index`-th labeled tree in base-n Prüfer order.
Graph labeled_tree(int n, std::uint64_t index);

/// Canonical string of a tree, equal for two trees iff they are isomorphic.
/// Rooted at the center (or the better of the two bicenter rootings).
std::string tree_canonical_form(const Graph& tree);

/// One representative per isomorphism class of trees of order n, in a
/// deterministic order. Built by hanging a leaf on every vertex of every
/// tree of order n-1.
std::vector<Graph> free_trees(int n);

/// Number of edges of K_n and the edge order used by edge masks
/// (lexicographic pairs (i,j), i < j).
int complete_edge_count(int n);
std::vector<Edge> complete_edges(int n);

bool mask_is_connected(int n, std::uint64_t mask, const std::vector<Edge>& all_edges);
Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& all_edges);

}  // namespace aspec
