#include <vector>

#include "doctest.h"
#include "szlab/error.hpp"
#include "szlab/graph.hpp"

using namespace szlab;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

}  // namespace

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("build_graph normalizes and validates") {
  const Graph g = build_graph(4, {{2, 0}, {3, 2}, {1, 0}});
  CHECK(g.m() == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.adj[0] == std::vector<int>{1, 2});
  CHECK(g.adj[2] == std::vector<int>{0, 3});

  CHECK_THROWS_AS(build_graph(0, {}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
  // two components
  CHECK_THROWS_AS(build_graph(4, {{0, 1}, {2, 3}}), Error);

  try {
    build_graph(3, {{1, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Loop);
  }
}

TEST_CASE("distances on known shapes") {
  SUBCASE("path") {
    const Graph g = path(5);
    const DistanceMatrix dm = distances(g);
    CHECK(dm.diameter == 4);
    CHECK(dm.at(0, 4) == 4);
    CHECK(dm.at(1, 3) == 2);
    CHECK(dm.at(2, 2) == 0);
    CHECK(dm.row_sum[0] == 1 + 2 + 3 + 4);
    CHECK(dm.row_sum[2] == 1 + 1 + 2 + 2);
  }
  SUBCASE("even cycle") {
    const DistanceMatrix dm = distances(cycle(6));
    CHECK(dm.diameter == 3);
    CHECK(dm.at(0, 3) == 3);
    CHECK(dm.at(5, 1) == 2);
    for (int v = 0; v < 6; ++v) CHECK(dm.row_sum[v] == 1 + 2 + 3 + 2 + 1);
  }
  SUBCASE("star") {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const DistanceMatrix dm = distances(g);
    CHECK(dm.diameter == 2);
    CHECK(dm.row_sum[0] == 4);
    CHECK(dm.row_sum[1] == 1 + 2 + 2 + 2);
  }
  SUBCASE("symmetry") {
    const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}});
    const DistanceMatrix dm = distances(g);
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) CHECK(dm.at(u, v) == dm.at(v, u));
  }
}

TEST_CASE("edge_to_vertex is the endpoint minimum") {
  const Graph g = path(4);
  const DistanceMatrix dm = distances(g);
  CHECK(dm.edge_to_vertex(0, 1, 3) == 2);
  CHECK(dm.edge_to_vertex(0, 1, 0) == 0);
  CHECK(dm.edge_to_vertex(1, 2, 0) == 1);
}

TEST_CASE("unique_cycle") {
  SUBCASE("tailed square") {
    const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}});
    const CycleInfo c = unique_cycle(g);
    CHECK(c.girth() == 4);
    for (int v : {0, 1, 2, 3}) CHECK(c.on_cycle(v));
    CHECK_FALSE(c.on_cycle(4));
    CHECK_FALSE(c.on_cycle(5));
    // walk order: consecutive vertices adjacent, wrap included
    for (int i = 0; i < 4; ++i)
      CHECK(g.has_edge(c.vertices[i], c.vertices[(i + 1) % 4]));
  }
  SUBCASE("tree has no cycle") {
    CHECK_THROWS_AS(unique_cycle(path(4)), Error);
    try {
      unique_cycle(path(4));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoCycle);
    }
  }
  SUBCASE("two cycles rejected") {
    const Graph g =
        build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK_THROWS_AS(unique_cycle(g), Error);
  }
}

TEST_CASE("cycle distance deltas match hand values") {
  // g=5: positions 1..5, reference position 1
  CHECK(cycle_distance_deltas(5, 2) == std::pair{0, 2});
  CHECK(cycle_distance_deltas(5, 3) == std::pair{0, 1});
  CHECK(cycle_distance_deltas(5, 4) == std::pair{1, 0});
  // g=6: j=4 is antipodal to the reference position
  CHECK(cycle_distance_deltas(6, 2) == std::pair{0, 2});
  CHECK(cycle_distance_deltas(6, 4) == std::pair{0, 0});
  CHECK(cycle_distance_deltas(4, 2) == std::pair{0, 2});
  CHECK(cycle_distance_deltas(4, 3) == std::pair{0, 0});
  CHECK_THROWS_AS(cycle_distance_deltas(2, 1), Error);
  CHECK_THROWS_AS(cycle_distance_deltas(5, 1), Error);
  CHECK_THROWS_AS(cycle_distance_deltas(5, 5), Error);
}

TEST_SUITE_END();
