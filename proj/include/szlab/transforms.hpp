#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "szlab/families.hpp"
#include "szlab/indices.hpp"
#include "szlab/q4.hpp"

namespace szlab {

// A named local rewrite on a C_g(T_1..T_g) spec. Arguments are integers keyed
// by name; each rewrite documents the keys it reads (see apply()).
struct Rewrite {
  std::string name;
  std::map<std::string, int> args;

  int arg(const std::string& key) const;
  int arg_or(const std::string& key, int fallback) const;
};

// The nine rewrite names, in the order they are documented below.
const std::vector<std::string>& rewrite_names();

// Instance-level prediction for value(before) - value(after). Closed-form
// rewrites fill `delta`; the others fill `sign` (-1/0/+1). `allow_equal`
// marks one-sided claims (<= / >=) whose equality case is not pinned down,
// so an actual difference of zero still agrees.
struct Prediction {
  std::optional<Q4> delta;
  std::optional<int> sign;
  bool allow_equal = false;
};

struct Applied {
  UnicyclicSpec after;
  Prediction predicted;
};

// Index kinds a rewrite predicts something about (first = default).
const std::vector<IndexKind>& rewrite_kinds(const std::string& name);

// Applies rewrite `r` to `g` and returns the rewritten spec plus the
// prediction for `kind`. Throws Error(PreconditionViolated) naming the failed
// condition when `g` is not in the rewrite's domain, Error(BadParams) for
// unknown names/arguments/kinds.
//
// Rewrites (argument keys in parens):
//   star_collapse_31i    (slot)         T_slot -> star on the same order.
//   reroot_tndd_31ii     (slot)         T_slot -> same order/diameter path
//                                       with pendants at the middle vertex.
//   flatten_caterpillar_31iii (slot)    T_slot -> caterpillar over a longest
//                                       root path, off-path orders preserved.
//   shift_pendants_33    (slot, k, direction) caterpillar pendant block at
//                                       u_k moves to u_{k+1} (direction=+1)
//                                       or u_{k+1}'s block to u_k (-1).
//   merge_stars_34       (k, l, direction?) all pendants of one double-broom
//                                       root move to the other; direction
//                                       0 = pick by the weight rule,
//                                       +1 = force l->k, -1 = force k->l.
//   contract_cycle_35    (case_tag 1|2|3) two cycle vertices fold into v_1,
//                                       girth g -> g-2 (needs g >= 5).
//   endblock_shift_27    ()             every T_i (i >= 2) re-roots at v_1.
//   rotate_path_41       ()             girth-3 only: last path edge of the
//                                       decorated path at v_3 moves to the
//                                       bare path at v_1.
//   c4_consolidate_51    (case_tag 1|2|3) girth-4 only: branch trees merge
//                                       into fewer cycle vertices.
Applied apply(const UnicyclicSpec& g, const Rewrite& r, IndexKind kind);

// apply() + evaluate both sides exactly and compare against the prediction.
struct TransformReport {
  std::string name;
  std::string before_graph6, after_graph6;
  IndexKind kind = IndexKind::Sz_e_star;
  Q4 value_before, value_after, actual_delta;  // before - after
  std::optional<Q4> predicted_delta;
  std::optional<int> predicted_sign;
  bool allow_equal = false;
  bool agrees = false;
};

TransformReport check(const UnicyclicSpec& g, const Rewrite& r, IndexKind kind);
TransformReport check(const UnicyclicSpec& g, const Rewrite& r);

// Named two-graph comparisons: both sides are built from the integer args and
// compared on Sz_e_star. Same report shape as check().
//
//   g3_rebalance_42      (l1,l2,a)      C3 path/broom edge shift, sign only.
//   g3_rebalance_43      (l1,l2,a)      C3 path/broom edge shift, exact.
//   g3_11_vs_12_44i      (l1,l2,a)      pendants on cycle vs on branch.
//   g3_21_vs_22_44ii     (l1,l2,a)      double broom vs split pendants.
//   g3_11_vs_21_44iii    (l1,l2,a)      one-branch vs two-branch carrier.
//   g4_21_rebalance_54   (l1,l2,a,b,i)  adjacent-corner path edge shift.
//   g4_21_vs_11_55       (l1,l2,a,b,i)  corner pendant folds into v_1 path.
//   g4_21_vs_11_i_l2_56  (l1,l2,b)      same at i=l2, a=0.
//   g4_32_rebalance_57   (l1,l2,a,b,i)  opposite-corner path edge shift.
//   g4_32_vs_21_58       (l1,l2,a,b,i)  opposite- to adjacent-corner fold.
//   g4_32_vs_21_d_n3_59  (d)            near-path duel, one interior pendant.
//   g4_32_vs_21_onepend_510 (d)         near-path duel, balanced arms.
//   g3_vs_g4_d_n2_61     (d)            d=n-2 champions across girths.
//   g4_vs_g3_d_n3_62     (d)            d=n-3 champions across girths.
//   g3_vs_g4_mid_63      (n,d)          balanced brooms across girths.
//   g4_32_vs_11_64       (n,d)          corner stack vs balanced split.
//   g4_32_pos_d4_65      (n)            d=4 pendant position duel.
//   g4_32_pos_d5_66      (n)            d=5 pendant position at i=3 vs best
//                                       of i=1,2.
//   g3_vs_g4_d3_67       (n)            d=3 champions across girths.
struct PairCheck {
  std::string name;
  std::map<std::string, int> args;
};

const std::vector<std::string>& pair_check_names();
TransformReport check_pair(const PairCheck& p);

// Draws a random in-domain instance of the named rewrite (random host spec +
// arguments) or pair check (random arguments within the stated ranges) and
// runs it on the given index kind (or the name's default kind). One entry
// point for the CLI batch mode and the sweep tests; deterministic for a
// given rng state.
TransformReport random_check(const std::string& name, std::mt19937_64& rng);
TransformReport random_check(const std::string& name, IndexKind kind,
                             std::mt19937_64& rng);

}  // namespace szlab
