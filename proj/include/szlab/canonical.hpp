#pragma once

#include <string>
#include <vector>

#include "szlab/graph.hpp"

namespace szlab {

// Opaque canonical form: equal bytes <=> isomorphic (within the same shape
// category, which is itself an isomorphism invariant).
struct CanonicalCode {
  std::string bytes;
  std::string hex() const;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }
};

// Level code of a rooted tree: one byte per vertex (depth+1) in a DFS order
// where sibling subtrees are sorted by their own codes, descending. Equal
// codes <=> root-preserving isomorphism; code length == subtree order.
std::string rooted_tree_code(const Graph& tree, int root);

// Pendant trees of a unicyclic graph, one per cycle vertex, each extracted as
// a standalone graph whose local vertex 0 is the cycle vertex (the root).
struct CycleTrees {
  CycleInfo cycle;
  std::vector<Graph> trees;                   // trees[i] rooted at local 0
  std::vector<std::vector<int>> local_to_global;
};
CycleTrees decompose_cycle_trees(const Graph& g);

// Unrooted tree: root at the center (min of the <=2 center-rooted codes).
std::string tree_code(const Graph& tree);

// Unicyclic graph: girth byte plus the rooted-tree codes around the cycle,
// minimized over all rotations and reflections. Slots are compared by
// (subtree order, code) so the order is consistent with the enumerator's
// class ordering.
std::string unicyclic_code(const Graph& g);

// Any simple connected graph, n <= 10: refinement + backtracking minimal
// adjacency code. Errors: TooLarge.
std::string general_code(const Graph& g);

// Dispatch: tree -> tree_code, unicyclic -> unicyclic_code, otherwise
// general_code (n <= 10, else TooLarge).
CanonicalCode canonical_code(const Graph& g);

}  // namespace szlab
