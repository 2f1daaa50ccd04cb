#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "szlab/canonical.hpp"
#include "szlab/error.hpp"
#include "szlab/graph.hpp"

using namespace szlab;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges) e.emplace_back(perm[u], perm[v]);
  return build_graph(g.n, e);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("canonical");

TEST_CASE("rooted tree codes") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  // end roots are interchangeable, the center is different
  CHECK(rooted_tree_code(p3, 0) == rooted_tree_code(p3, 2));
  CHECK(rooted_tree_code(p3, 0) != rooted_tree_code(p3, 1));
  CHECK(rooted_tree_code(p3, 0).size() == 3);

  // same rooted shape under a relabeling
  const Graph a = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {0, 4}});
  const Graph b = build_graph(5, {{4, 3}, {3, 0}, {3, 2}, {4, 1}});
  CHECK(rooted_tree_code(a, 0) == rooted_tree_code(b, 4));
  CHECK(rooted_tree_code(a, 2) == rooted_tree_code(b, 0));
  CHECK(rooted_tree_code(a, 0) != rooted_tree_code(a, 1));
}

TEST_CASE("tree codes = unrooted isomorphism") {
  const Graph path4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph star4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(tree_code(path4) != tree_code(star4));

  std::mt19937_64 rng(11);
  oracle::labeled_trees(6, [&](const Graph& t) {
    CHECK(tree_code(t) == tree_code(relabel(t, random_perm(6, rng))));
  });

  // bicentral path: both centers give one code
  const Graph p6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(tree_code(p6) == tree_code(relabel(p6, {5, 4, 3, 2, 1, 0})));
}

TEST_CASE("unicyclic codes are dihedral-invariant") {
  // C5 with distinguishable attachments: pendant at v0, P3 leg at v2
  const Graph g = build_graph(9, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {4, 0},
                                  {0, 5},
                                  {2, 6},
                                  {6, 7},
                                  {7, 8}});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial)
    CHECK(unicyclic_code(g) == unicyclic_code(relabel(g, random_perm(9, rng))));

  // reflection: walk the cycle the other way round
  const Graph mirror = build_graph(9, {{0, 4},
                                       {4, 3},
                                       {3, 2},
                                       {2, 1},
                                       {1, 0},
                                       {0, 5},
                                       {2, 6},
                                       {6, 7},
                                       {7, 8}});
  CHECK(unicyclic_code(g) == unicyclic_code(mirror));

  // moving the pendant one cycle vertex over changes the class
  const Graph shifted = build_graph(9, {{0, 1},
                                        {1, 2},
                                        {2, 3},
                                        {3, 4},
                                        {4, 0},
                                        {1, 5},
                                        {2, 6},
                                        {6, 7},
                                        {7, 8}});
  CHECK(unicyclic_code(g) != unicyclic_code(shifted));
}

TEST_CASE("codes agree with permutation-search isomorphism") {
  // all 13 classes of order 6: pairwise distinct codes, pairwise non-isomorphic
  std::vector<Graph> reps;
  oracle::labeled_connected(6, 6, [&](const Graph& g) {
    for (const Graph& r : reps)
      if (oracle::isomorphic(r, g)) return;
    reps.push_back(g);
  });
  REQUIRE(reps.size() == 13);
  std::set<std::string> codes;
  for (const Graph& r : reps) codes.insert(unicyclic_code(r));
  CHECK(codes.size() == 13);

  // iso variants map onto the same code
  std::mt19937_64 rng(37);
  for (const Graph& r : reps) {
    const Graph v = relabel(r, random_perm(6, rng));
    CHECK(oracle::isomorphic(r, v));
    CHECK(unicyclic_code(v) == unicyclic_code(r));
  }
}

TEST_CASE("general code handles the non-unicyclic leftovers") {
  const Graph bowtie =
      build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(general_code(bowtie) == general_code(relabel(bowtie, random_perm(5, rng))));

  const Graph k4 =
      build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(general_code(bowtie) != general_code(k4));

  std::vector<std::pair<int, int>> big;
  for (int i = 0; i + 1 < 11; ++i) big.emplace_back(i, i + 1);
  big.emplace_back(0, 10);
  big.emplace_back(0, 5);
  CHECK_THROWS_AS(general_code(build_graph(11, big)), Error);
}

TEST_CASE("canonical_code dispatch is category-consistent") {
  const Graph tree = build_graph(4, {{0, 1}, {1, 2}, {1, 3}});
  const Graph uni = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(canonical_code(tree) == canonical_code(relabel(tree, {3, 1, 0, 2})));
  CHECK(canonical_code(uni) == canonical_code(relabel(uni, {2, 0, 3, 1})));
  CHECK(canonical_code(tree) != canonical_code(uni));
  CHECK_FALSE(canonical_code(tree).hex().empty());
}

TEST_SUITE_END();
