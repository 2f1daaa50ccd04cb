#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "szlab/canonical.hpp"
#include "szlab/enumerate.hpp"
#include "szlab/families.hpp"
#include "szlab/graph6.hpp"
#include "szlab/indices.hpp"
#include "szlab/reports.hpp"

using namespace szlab;

TEST_SUITE_BEGIN("enumerator");

namespace {

SearchReport search1(int n, int d) {
  return minimize_index(n, d, IndexKind::Sz_e_star, {1, ""});
}

// classical counts: rooted trees, then connected unicyclic graphs, by order
const std::uint64_t kRootedTrees[] = {0, 1, 1, 2, 4, 9, 20, 48, 115};
const std::uint64_t kUnicyclic[] = {0, 0, 0, 1, 2, 5, 13, 33, 89, 240};

}  // namespace

TEST_CASE("rooted tree classes carry the right counts and invariants") {
  TreePool pool(8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(pool.count(n) == static_cast<int>(kRootedTrees[n]));
    CHECK(rooted_trees(n).size() == kRootedTrees[n]);
  }
  CHECK(pool.total() == 1 + 1 + 2 + 4 + 9 + 20 + 48 + 115);

  std::set<std::string> codes;
  for (int n = 1; n <= 6; ++n) {
    for (int id = pool.first(n); id < pool.first(n) + pool.count(n); ++id) {
      const TreeClass& c = pool.cls(id);
      REQUIRE(c.size == n);
      REQUIRE(codes.insert(c.code).second);
      RootedTree t = pool.materialize(id);
      REQUIRE(t.order() == n);
      REQUIRE(t.canonical_level_code == c.code);
      DistanceMatrix dm = distances(t.tree);
      REQUIRE(dm.diameter == c.diam);
      REQUIRE(dm.row_sum[t.root] == c.root_trans);
      int ecc = 0;
      for (int v = 0; v < n; ++v) ecc = std::max(ecc, dm.at(t.root, v));
      REQUIRE(ecc == c.height);
    }
  }
}

TEST_CASE("rooted tree classes match the permutation-search oracle") {
  for (int n = 4; n <= 6; ++n) {
    auto reps = oracle::rooted_tree_classes(n);
    std::vector<RootedTree> mine = rooted_trees(n);
    REQUIRE(reps.size() == mine.size());
    for (const RootedTree& t : mine) {
      int hits = 0;
      for (const auto& [g, root] : reps)
        hits += oracle::rooted_isomorphic(t.tree, t.root, g, root);
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("unicyclic class counts and partitions") {
  for (int n = 3; n <= 9; ++n) CHECK(count_unicyclic(n) == kUnicyclic[n]);
  for (int n = 4; n <= 7; ++n)
    CHECK(count_unicyclic(n) == oracle::count_unicyclic_classes(n));

  std::uint64_t by_d = 0, by_g = 0, by_both = 0;
  for (int d = 1; d <= 6; ++d) by_d += count_unicyclic(8, d);
  for (int g = 3; g <= 8; ++g) by_g += count_unicyclic(8, std::nullopt, g);
  for (int d = 1; d <= 6; ++d)
    for (int g = 3; g <= 8; ++g) by_both += count_unicyclic(8, d, g);
  CHECK(by_d == 89);
  CHECK(by_g == 89);
  CHECK(by_both == 89);
}

TEST_CASE("the stream is isomorph-free and honors its filters") {
  std::set<std::string> seen;
  unicyclic_graphs(8, std::nullopt, std::nullopt,
                   [&](const UnicyclicSpec& spec, const Graph& g) {
                     REQUIRE(g.n == 8);
                     REQUIRE(g.m() == 8);
                     REQUIRE(spec.order() == 8);
                     REQUIRE(unique_cycle(g).girth() == spec.g);
                     REQUIRE(seen.insert(canonical_code(g).hex()).second);
                     REQUIRE(canonical_code(assemble(spec)) == canonical_code(g));
                   });
  CHECK(seen.size() == 89);

  unicyclic_graphs(8, 4, 4, [&](const UnicyclicSpec& spec, const Graph& g) {
    REQUIRE(spec.g == 4);
    REQUIRE(distances(g).diameter == 4);
  });
}

TEST_CASE("small searches against desk values") {
  SearchReport c3 = search1(3, 1);
  CHECK(c3.examined == 1);
  CHECK(*c3.minimum == Q4::from_quarters(27));
  CHECK(c3.minimizers.size() == 1);
  CHECK(c3.minimizers[0].graph6 == "Bw");

  for (auto [n, want] : {std::pair<int, int>{6, 123},
                         {7, 167},
                         {9, 273}}) {
    SearchReport r = search1(n, 2);
    CHECK(r.examined == 1);  // one diameter-2 class per order
    CHECK(*r.minimum == Q4::from_quarters(want));
    REQUIRE(r.minimizers.size() == 1);
    Graph champ = assemble(g3_family(11, 0, 0, n - 3));
    CHECK(r.minimizers[0].code_hex == canonical_code(champ).hex());
  }
}

TEST_CASE("order-eight searches match the frozen exhaustive table") {
  struct Row {
    int d;
    std::uint64_t classes;
    int min_q;
    std::size_t mins;
  };
  const Row rows[] = {{2, 1, 217, 1},
                      {3, 13, 241, 2},
                      {4, 43, 265, 2},
                      {5, 26, 301, 1},
                      {6, 6, 341, 1}};
  std::uint64_t total = 0;
  for (const Row& row : rows) {
    SearchReport r = search1(8, row.d);
    CHECK(r.examined == row.classes);
    CHECK(*r.minimum == Q4::from_quarters(row.min_q));
    CHECK(r.minimizers.size() == row.mins);
    total += r.examined;
  }
  CHECK(total + count_unicyclic(8, 1) == 89);
}

TEST_CASE("order-seven searches match the live brute force") {
  auto table = oracle::brute_all(7);
  REQUIRE(!table.empty());
  std::uint64_t total = 0;
  for (const auto& [d, brute] : table) {
    total += brute.classes;
    if (d < 2) continue;  // engine searches need d >= girth side; C3+... d=1
    SearchReport r = search1(7, d);
    REQUIRE(r.examined == brute.classes);
    REQUIRE(*r.minimum == brute.minimum);
    REQUIRE(r.minimizers.size() == brute.minimizers.size());
    for (const Minimizer& m : r.minimizers) {
      Graph g = from_graph6(m.graph6);
      int hits = 0;
      for (const Graph& b : brute.minimizers) hits += oracle::isomorphic(g, b);
      REQUIRE(hits == 1);
    }
  }
  CHECK(total == 33);
}

TEST_CASE("large-order searches find the closed-family champions") {
  SearchReport r3 = search1(16, 3);
  Graph pred3 = assemble(extremal(16, 3));
  CHECK(r3.examined == 45);
  CHECK(*r3.minimum == index_suite(pred3).Sz_e_star);
  REQUIRE(r3.minimizers.size() == 1);
  CHECK(r3.minimizers[0].code_hex == canonical_code(pred3).hex());

  SearchReport r14 = search1(16, 14);
  Graph pred14 = assemble(extremal(16, 14));
  CHECK(r14.examined == 14);
  CHECK(*r14.minimum == index_suite(pred14).Sz_e_star);
  REQUIRE(r14.minimizers.size() == 1);
  CHECK(r14.minimizers[0].code_hex == canonical_code(pred14).hex());
}

TEST_CASE("empty diameter classes are an error, not a silent zero") {
  CHECK_THROWS_AS(search1(6, 9), Error);
  try {
    search1(4, 1);  // order four has no diameter-one unicyclic graph
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyClass);
  }
}

TEST_CASE("worker count never changes the report") {
  SearchReport r1 = minimize_index(10, 5, IndexKind::Sz_e_star, {1, ""});
  SearchReport r3 = minimize_index(10, 5, IndexKind::Sz_e_star, {3, ""});
  SearchReport r7 = minimize_index(10, 5, IndexKind::Sz_e_star, {7, ""});
  CHECK(same_report(r1, r3));
  CHECK(same_report(r1, r7));

  setenv("SZLAB_WORKERS", "2", 1);
  SearchReport renv = minimize_index(10, 5, IndexKind::Sz_e_star, {0, ""});
  unsetenv("SZLAB_WORKERS");
  CHECK(same_report(r1, renv));

  // a different index kind is a different search
  SearchReport rw = minimize_index(10, 5, IndexKind::W, {1, ""});
  CHECK(rw.kind == IndexKind::W);
  CHECK_FALSE(same_report(r1, rw));
}

TEST_CASE("checkpoints restart, resume and reject foreign files") {
  const std::string path = "/tmp/szlab_test_ckpt.jsonl";
  std::remove(path.c_str());

  SearchReport fresh = minimize_index(9, 4, IndexKind::Sz_e_star, {1, path});
  SearchReport plain = search1(9, 4);
  CHECK(same_report(fresh, plain));

  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
  }
  REQUIRE(lines.size() >= 2);

  // full resume: no block re-runs, same merged answer
  SearchReport resumed = minimize_index(9, 4, IndexKind::Sz_e_star, {1, path});
  CHECK(same_report(resumed, plain));

  // partial resume from a truncated file
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << "\n";
  }
  SearchReport partial = minimize_index(9, 4, IndexKind::Sz_e_star, {1, path});
  CHECK(same_report(partial, plain));

  // corrupt line
  {
    std::ofstream out(path, std::ios::app);
    out << "not json\n";
  }
  CHECK_THROWS_AS(minimize_index(9, 4, IndexKind::Sz_e_star, {1, path}), Error);

  // a checkpoint from some other (n, d) must be refused
  {
    std::ofstream out(path, std::ios::trunc);
    for (const std::string& l : lines) out << l << "\n";
  }
  try {
    minimize_index(9, 5, IndexKind::Sz_e_star, {1, path});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }

  try {
    minimize_index(9, 4, IndexKind::Sz_e_star, {1, "/nonexistent_dir/x.jsonl"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
  std::remove(path.c_str());
}

TEST_CASE("order-sixteen sweep: eleven hits and one honest miss") {
  VerificationReport v = verify_theorem1(16, 2);
  CHECK_FALSE(v.pass);
  CHECK(v.n == 16);
  CHECK(v.classes_examined == 311465);
  REQUIRE(v.rows.size() == 12);  // d = 3..14
  for (const VerificationRow& row : v.rows) {
    if (row.d == 6) {
      CHECK_FALSE(row.matched);
      CHECK(row.minimum == Q4::from_quarters(1124));
      CHECK(row.unique);
      // the family table's candidate sits 4 integer units higher
      Graph pred = from_graph6(row.predicted_graph6);
      CHECK(index_suite(pred).Sz_e_star == Q4::from_quarters(1140));
    } else {
      CHECK(row.matched);
    }
    CHECK(!row.minimizers.empty());
    CHECK(row.minimizer_girths.size() == row.minimizers.size());
  }
  CHECK(v.girth_bound_ok);
  CHECK(v.girth_histogram.at(3) == 2);
  CHECK(v.girth_histogram.at(4) == 10);
  CHECK(v.co_minimal_family_ok);
  CHECK(!v.co_minimal_family_graph6.empty());

  CHECK_THROWS_AS(verify_theorem1(15), Error);
}

TEST_SUITE_END();
