#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "szlab/families.hpp"
#include "szlab/indices.hpp"

namespace szlab {

// One isomorphism class of rooted trees, generated constructively: a class is
// a root plus a multiset of smaller classes, so every class is built exactly
// once and carries its canonical level code.
struct TreeClass {
  int size = 0;
  int height = 0;  // max root-to-leaf edges
  int diam = 0;    // unrooted diameter of the tree
  std::string code;
  std::vector<std::uint8_t> parent;  // parent[k] < k for k >= 1, DFS order
  std::int64_t root_trans = 0;       // sum of distances from the root
};

class TreePool {
 public:
  explicit TreePool(int max_size);
  int max_size() const { return max_size_; }
  int total() const { return static_cast<int>(classes_.size()); }
  const TreeClass& cls(int id) const { return classes_[id]; }
  // Classes are sorted by (size, code); a size occupies a contiguous id range.
  int first(int size) const { return first_[size]; }
  int count(int size) const { return first_[size + 1] - first_[size]; }
  RootedTree materialize(int id) const;

 private:
  int max_size_;
  std::vector<TreeClass> classes_;
  std::vector<int> first_;
};

// All rooted trees of order n, one per root-preserving isomorphism class, in
// canonical-code order.
std::vector<RootedTree> rooted_trees(int n);

// Streaming isomorph-free enumeration of connected unicyclic graphs of order
// n, optionally restricted to a diameter and/or girth. Each class is emitted
// exactly once, as the dihedral-minimal necklace of rooted-tree classes.
void unicyclic_graphs(
    int n, std::optional<int> d, std::optional<int> girth,
    const std::function<void(const UnicyclicSpec&, const Graph&)>& fn);

std::uint64_t count_unicyclic(int n, std::optional<int> d = std::nullopt,
                              std::optional<int> girth = std::nullopt);

struct Minimizer {
  std::string code_hex;  // canonical code, hex encoded
  std::string graph6;
};

struct SearchReport {
  int n = 0;
  int d = 0;
  IndexKind kind = IndexKind::Sz_e_star;
  std::uint64_t examined = 0;  // classes with the requested diameter
  std::optional<Q4> minimum;   // empty when the class is empty
  std::vector<Minimizer> minimizers;  // all co-minimal classes, code order
  double elapsed_seconds = 0;  // informational; not part of canonical output
};

struct VerificationRow {
  int d = 0;
  std::uint64_t classes = 0;
  Q4 minimum;
  std::vector<Minimizer> minimizers;
  std::vector<int> minimizer_girths;
  std::string predicted_graph6;
  bool matched = false;  // predicted minimizer is among the found minimizers
  bool unique = false;
};

struct VerificationReport {
  int n = 0;
  std::vector<VerificationRow> rows;   // d = 3..n-2
  std::map<int, int> girth_histogram;  // girth -> minimizer count, all rows
  bool girth_bound_ok = false;         // every minimizer has girth 3 or 4
  // At d = n-2 the girth-4 co-minimal set must be exactly the two-path
  // family on the square (all splits of the remaining length).
  bool co_minimal_family_ok = false;
  std::vector<std::string> co_minimal_family_graph6;
  std::uint64_t classes_examined = 0;
  bool pass = false;
  double elapsed_seconds = 0;
};

struct SearchOptions {
  int workers = 0;              // 0: SZLAB_WORKERS env var, else hardware
  std::string checkpoint_path;  // JSON-lines; empty disables persistence
};

// Exact minimum of an index over all unicyclic graphs with order n and
// diameter d. Work is partitioned into deterministic blocks (girth, range of
// ordered size compositions); workers share nothing and the merged report is
// byte-identical for any worker count. With a checkpoint path, one JSON line
// {n,d,g,block_id,min_quarters,minimizer_graph6,count} is appended per
// finished block and already-present blocks are skipped on restart.
SearchReport minimize_index(int n, int d, IndexKind kind,
                            const SearchOptions& opts = {});

// Full sweep over all unicyclic graphs of order n: per-diameter minimizers of
// the revised edge-Szeged index compared against extremal(n,d). pre: n >= 16.
VerificationReport verify_theorem1(int n, int workers = 0);

}  // namespace szlab
