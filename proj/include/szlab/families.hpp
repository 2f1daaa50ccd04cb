#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "szlab/canonical.hpp"
#include "szlab/graph.hpp"

namespace szlab {

// A tree with a distinguished root (the future cycle-attachment vertex).
struct RootedTree {
  Graph tree;
  int root = 0;
  std::string canonical_level_code;

  int order() const { return tree.n; }
  int edge_count() const { return tree.m(); }
};

RootedTree make_rooted_tree(Graph tree, int root);

// Identify the roots of several rooted trees into a single shared root.
RootedTree merge_at_root(const std::vector<RootedTree>& parts);

// C_g(T_1,...,T_g): cycle v_1..v_g with pendant tree T_i rooted at v_i.
struct UnicyclicSpec {
  int g = 0;
  std::vector<RootedTree> trees;

  int order() const;
};

// Assembled layout: tree i occupies a contiguous id block, its root first, so
// cycle vertex v_i is the block offset of tree i.
Graph assemble(const UnicyclicSpec& spec);

// Spec extracted back out of an assembled unicyclic graph (slot order = cycle
// walk order starting from unique_cycle's deterministic start).
UnicyclicSpec spec_of_graph(const Graph& g);

// Broom P^i_{k1,k2}: two paths of k1 and k2 edges plus i pendant edges, all
// identified at the root. P^i_k = broom(k,0,i); broom(0,0,i) is the star
// S_{i+1} rooted at its center; paths are rooted at an end.
RootedTree broom(int k1, int k2, int i);

// Caterpillar P(a_0..a_l): backbone u_0..u_l with a_j pendants at u_j, rooted
// at u_l (the cycle end).
RootedTree caterpillar(const std::vector<int>& a);

// Path u_0..u_d with n-d-1 extra pendants at u_{floor(d/2)}, rooted there.
// pre: 2 <= d <= n-1.
RootedTree t_ndd(int n, int d);

// Pendant-decorated path used by the girth-4 families: path w_0..w_l2 rooted
// at w_l2 with b pendants at w_i (1 <= i <= l2 when b > 0; i normalized to 0
// when b == 0).
RootedTree decorated_path(int l2, int b, int i);

// Triangle families, variant in {11,12,21,22}:
//   11: C3(P^a_{l1}, P_{l2+1}, S_1)        12: C3(P_{l1+1}, P_{l2+1}, S_{a+1})
//   21: C3(P^{a-1}_{l1,l2+1}, S_1, S_1)    22: C3(P^0_{l1,l2+1}, S_a, S_1)
// All have order l1+l2+a+3.
UnicyclicSpec g3_family(int variant, int l1, int l2, int a);

// Square families G4_{vk}(l1,l2,a,b,i), variant v in {1,2,3}, pendant slot
// k in 1..4: path of l1 edges at v_1; the decorated path T*(l2,b,i) merged at
// v_1 (v=1), attached at v_2 (v=2) or at v_3 (v=3); a extra pendants at v_k.
UnicyclicSpec g4_family(int variant, int k, int l1, int l2, int a, int b, int i);

// The claimed minimizer of the revised edge-Szeged index over unicyclic
// graphs with order n and diameter d. pre: n > 15, 3 <= d <= n-2.
UnicyclicSpec extremal(int n, int d);

// Plain-text family parameter strings, e.g. "extremal n=16 d=7",
// "g4 variant=32 l1=0 l2=5 a=0 b=3 i=3", "broom k1=2 k2=3 i=1",
// "caterpillar a=0,2,1", "path n=5", "star n=5", "cycle n=6",
// "t_ndd n=8 d=4", "g3 variant=21 l1=1 l2=2 a=2".
struct FamilyParams {
  std::string variant;
  std::map<std::string, std::string> args;

  static FamilyParams parse(const std::string& text);
  std::string to_string() const;
  int arg_int(const std::string& key) const;
  std::vector<int> arg_int_list(const std::string& key) const;

  // Builds the graph; tree families yield the bare tree graph.
  Graph build() const;
  // Unicyclic families also expose their spec (nullopt for tree families).
  std::optional<UnicyclicSpec> build_spec() const;
};

}  // namespace szlab
