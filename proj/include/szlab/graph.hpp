#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "szlab/error.hpp"

namespace szlab {

// Simple connected graph with dense vertex ids 0..n-1. Edges are stored
// normalized (u < v) and sorted; immutable after construction via build_graph.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  // Index into edges of normalized (u,v), or -1.
  int edge_index(int u, int v) const;
};

// Validates: ids in range, no loops, no parallel edges, connected.
Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list);

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;               // row-major n*n
  std::vector<std::int64_t> row_sum;  // transmissions D(v|G)
  int diameter = 0;

  int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
  // Distance from edge (eu,ev) to vertex w: min over the two endpoints.
  int edge_to_vertex(int eu, int ev, int w) const {
    const int a = at(eu, w), b = at(ev, w);
    return a < b ? a : b;
  }
};

// BFS from every vertex (graphs here are unweighted and small).
DistanceMatrix distances(const Graph& g);

struct CycleInfo {
  std::vector<int> vertices;  // in cyclic walk order
  int girth() const { return static_cast<int>(vertices.size()); }
  bool on_cycle(int v) const;
};

// The unique cycle of a unicyclic graph. Errors: NoCycle (tree input),
// NotUnicyclic (m > n).
CycleInfo unique_cycle(const Graph& g);

// For a cycle v_1..v_g (1-indexed positions) and 2 <= j <= g-1, returns
// (d_{2,j} - d_{1,j} + 1, d_{g,j} - d_{1,j} + 1) where d_{i,j} is the cycle
// distance between positions i and j. These are the per-position weights of
// the piecewise table used by the odd/even cycle decomposition arguments.
std::pair<int, int> cycle_distance_deltas(int g, int j);

}  // namespace szlab
