// Acceptance gate: eight checks, one [PASS]/[FAIL] line each, exit code =
// number of failures. Three checks fail today in one pinned way each (two
// carried closed forms and one case boundary disagree with exact recompute;
// see README.md). `--expect-documented` exits 0 iff every check lands exactly
// in that documented state, so the test suite stays green without diluting
// the checks themselves.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "szlab/enumerate.hpp"
#include "szlab/families.hpp"
#include "szlab/graph6.hpp"
#include "szlab/indices.hpp"
#include "szlab/reports.hpp"
#include "szlab/transforms.hpp"

using namespace szlab;

namespace {

struct Outcome {
  bool pass = false;
  bool documented = false;  // matches the state README.md records
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Sz_e_star by definition == m^3/4 - (1/4) sum (m_u - m_v)^2, exactly,
//    on every tree and unicyclic graph with n <= 10.
Outcome criterion1() {
  std::uint64_t trees = 0, unis = 0, bad = 0;
  for (int n = 1; n <= 10; ++n)
    for (const RootedTree& rt : rooted_trees(n)) {
      ++trees;
      if (sz_e_star_closed_form(rt.tree) != index_suite(rt.tree).Sz_e_star)
        ++bad;
    }
  for (int n = 3; n <= 10; ++n)
    unicyclic_graphs(n, std::nullopt, std::nullopt,
                     [&](const UnicyclicSpec&, const Graph& g) {
                       ++unis;
                       if (sz_e_star_closed_form(g) != index_suite(g).Sz_e_star)
                         ++bad;
                     });
  Outcome o;
  o.pass = (bad == 0);
  o.documented = o.pass;
  o.detail = std::to_string(trees) + " rooted trees + " +
             std::to_string(unis) + " unicyclic classes, " +
             std::to_string(bad) + " mismatches";
  return o;
}

// 2. Every route in the cycle/branch decomposition report agrees on every
//    unicyclic graph with n <= 12.
Outcome criterion2() {
  std::uint64_t cnt = 0, bad = 0;
  for (int n = 3; n <= 12; ++n)
    unicyclic_graphs(n, std::nullopt, std::nullopt,
                     [&](const UnicyclicSpec& s, const Graph&) {
                       ++cnt;
                       if (!decompose_unicyclic(s).all_agree) ++bad;
                     });
  Outcome o;
  o.pass = (bad == 0);
  o.documented = o.pass;
  o.detail = std::to_string(cnt) + " unicyclic classes, " +
             std::to_string(bad) + " disagreements";
  return o;
}

// 3. On trees: W_e_line = W - n(n-1)/2 and Sz_e = W_e_min (n <= 10); on
//    every unicyclic graph with n <= 10, Sz_e > W_e_min strictly.
Outcome criterion3() {
  std::uint64_t trees = 0, unis = 0, bad = 0;
  for (int n = 2; n <= 10; ++n)
    for (const RootedTree& rt : rooted_trees(n)) {
      ++trees;
      IndexSuite s = index_suite(rt.tree);
      if (s.W_e_line != s.W - static_cast<std::int64_t>(n) * (n - 1) / 2) ++bad;
      if (s.Sz_e != s.W_e_min) ++bad;
    }
  for (int n = 3; n <= 10; ++n)
    unicyclic_graphs(n, std::nullopt, std::nullopt,
                     [&](const UnicyclicSpec&, const Graph& g) {
                       ++unis;
                       IndexSuite s = index_suite(g);
                       if (!(s.Sz_e > s.W_e_min)) ++bad;
                     });
  Outcome o;
  o.pass = (bad == 0);
  o.documented = o.pass;
  o.detail = std::to_string(trees) + " rooted trees + " +
             std::to_string(unis) + " unicyclic classes, " +
             std::to_string(bad) + " violations";
  return o;
}

// 4. 500 seeded random draws per rewrite and per pair check; exact delta for
//    closed-form predictions, sign match for sign predictions.
Outcome criterion4() {
  constexpr int kDraws = 500;
  std::mt19937_64 rng(20250819);
  std::map<std::string, int> disagree;
  bool relations_hold = true;  // the two known offsets, on every disagreement
  std::uint64_t total = 0;
  std::vector<std::string> names = rewrite_names();
  for (const std::string& n : pair_check_names()) names.push_back(n);
  for (const std::string& name : names)
    for (int i = 0; i < kDraws; ++i) {
      TransformReport r = random_check(name, rng);
      ++total;
      if (r.agrees) continue;
      ++disagree[name];
      if (name == "g4_21_vs_11_55") {
        // carried form undercounts by a multiple of the arm gap
        if (!(r.predicted_delta &&
              r.actual_delta - *r.predicted_delta > Q4::from_int(0)))
          relations_hold = false;
      } else if (name == "g4_vs_g3_d_n3_62") {
        // even-d carried form overshoots by exactly 1/4
        if (!(r.predicted_delta &&
              *r.predicted_delta - r.actual_delta == Q4::from_quarters(1)))
          relations_hold = false;
      }
    }
  Outcome o;
  o.pass = disagree.empty();
  o.documented = relations_hold && disagree.size() == 2 &&
                 disagree.count("g4_21_vs_11_55") == 1 &&
                 disagree.count("g4_vs_g3_d_n3_62") == 1;
  o.detail = std::to_string(total) + " draws over " +
             std::to_string(names.size()) + " names";
  if (!disagree.empty()) {
    o.detail += "; disagreements:";
    for (const auto& [name, k] : disagree)
      o.detail += " " + name + " (" + std::to_string(k) + "/" +
                  std::to_string(kDraws) + ")";
  }
  return o;
}

// 5. Pinned duel values: d = n-2 champions at d = 14, 16; d = n-3 champions
//    at d = 14, 15; balanced brooms at n = 16; corner-stack sign flip at
//    n = 16 between floor(d/2) = 2 and 3.
Outcome criterion5() {
  struct Pin {
    std::string label;
    bool ok;
    std::string got;
  };
  std::vector<Pin> pins;
  auto q = [](const Q4& v) { return v.to_string(); };

  auto pair_delta = [](const std::string& name,
                       std::map<std::string, int> args) {
    return check_pair({name, std::move(args)}).actual_delta;
  };

  Q4 v = pair_delta("g3_vs_g4_d_n2_61", {{"d", 14}});
  pins.push_back({"61 d=14 = -95/4 < 0",
                  v == Q4::from_quarters(-95) && v < Q4::from_int(0), q(v)});
  v = pair_delta("g3_vs_g4_d_n2_61", {{"d", 16}});
  pins.push_back({"61 d=16 = -123/4 < 0",
                  v == Q4::from_quarters(-123) && v < Q4::from_int(0), q(v)});
  v = pair_delta("g4_vs_g3_d_n3_62", {{"d", 14}});
  pins.push_back({"62 d=14 = 69/4 > 0",
                  v == Q4::from_quarters(69) && v > Q4::from_int(0), q(v)});
  v = pair_delta("g4_vs_g3_d_n3_62", {{"d", 15}});
  pins.push_back({"62 d=15 = 67/4 > 0",
                  v == Q4::from_quarters(67) && v > Q4::from_int(0), q(v)});
  for (int d : {4, 6, 8, 12}) {
    v = pair_delta("g3_vs_g4_mid_63", {{"n", 16}, {"d", d}});
    pins.push_back({"63 n=16 d=" + std::to_string(d) + " = 13/4 > 0",
                    v == Q4::from_quarters(13) && v > Q4::from_int(0), q(v)});
  }
  struct Flip {
    int d;
    std::int64_t want;
  };
  for (Flip f : {Flip{4, -14}, Flip{5, -14}, Flip{6, 4}}) {
    v = pair_delta("g4_32_vs_11_64", {{"n", 16}, {"d", f.d}});
    bool side = f.want < 0 ? v < Q4::from_int(0) : v > Q4::from_int(0);
    pins.push_back({"64 n=16 d=" + std::to_string(f.d) + " = " +
                        std::to_string(f.want),
                    v == Q4::from_int(f.want) && side, q(v)});
  }

  Outcome o;
  int bad = 0;
  bool only_documented_miss = true;
  for (const Pin& p : pins) {
    if (p.ok) continue;
    ++bad;
    if (!(p.label.rfind("62 d=14", 0) == 0 && p.got == "68/4"))
      only_documented_miss = false;
    o.detail += (o.detail.empty() ? "" : "; ") + p.label + ", got " + p.got;
  }
  o.pass = (bad == 0);
  o.documented = (bad == 1) && only_documented_miss;
  if (o.pass)
    o.detail = std::to_string(pins.size()) + " pinned values reproduced";
  return o;
}

// 6. Full sweep at n = 16 and n = 17: for every d in [3, n-2] the reference
//    family attains the exact minimum of Sz_e_star over the (n, d) class,
//    minimizers unique except the documented d = n-2 square family, and
//    every minimizer has girth 3 or 4.
Outcome criterion6() {
  Outcome o;
  o.pass = true;
  o.documented = true;
  for (int n : {16, 17}) {
    VerificationReport rep = verify_theorem1(n);
    o.pass = o.pass && rep.pass;
    const std::int64_t found_q = (n == 16) ? 1124 : 1237;
    const std::int64_t pred_q = (n == 16) ? 1140 : 1253;
    bool shape = !rep.pass && rep.girth_bound_ok && rep.co_minimal_family_ok;
    int unmatched = 0;
    std::string witness;
    for (const VerificationRow& row : rep.rows)
      if (!row.matched) {
        ++unmatched;
        shape = shape && row.d == 6 && row.unique &&
                row.minimum == Q4::from_quarters(found_q);
        if (!row.minimizers.empty()) witness = row.minimizers.front().graph6;
      }
    shape = shape && unmatched == 1 &&
            index_suite(assemble(extremal(n, 6))).Sz_e_star ==
                Q4::from_quarters(pred_q);
    o.documented = o.documented && shape;
    if (!rep.pass) {
      o.detail += (o.detail.empty() ? "" : "; ") + ("n=" + std::to_string(n)) +
                  ": " + std::to_string(unmatched) +
                  " unmatched diameter(s), found " +
                  Q4::from_quarters(found_q).to_string() + " by " + witness +
                  " vs family " + Q4::from_quarters(pred_q).to_string() +
                  " at d=6 over " + std::to_string(rep.classes_examined) +
                  " classes";
    }
  }
  if (o.pass) o.detail = "every diameter matched at n = 16 and 17";
  return o;
}

// 7. Engine enumeration == labeled brute-force oracle for n <= 8 (class
//    counts, minima, minimizers up to isomorphism), and reports are
//    byte-identical across worker counts.
Outcome criterion7() {
  std::uint64_t checks = 0, bad = 0;
  for (int n = 3; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const auto& [d, bm] : oracle::brute_all(n)) {
      total += bm.classes;
      SearchReport r = minimize_index(n, d, IndexKind::Sz_e_star, {1, ""});
      ++checks;
      if (r.examined != bm.classes || !r.minimum || *r.minimum != bm.minimum ||
          r.minimizers.size() != bm.minimizers.size()) {
        ++bad;
        continue;
      }
      std::vector<bool> used(bm.minimizers.size(), false);
      for (const Minimizer& m : r.minimizers) {
        Graph g = from_graph6(m.graph6);
        bool hit = false;
        for (std::size_t i = 0; i < bm.minimizers.size(); ++i)
          if (!used[i] && oracle::isomorphic(g, bm.minimizers[i])) {
            used[i] = hit = true;
            break;
          }
        if (!hit) ++bad;
      }
    }
    ++checks;
    if (total != count_unicyclic(n)) ++bad;
  }
  for (auto [n, d] : {std::pair{12, 6}, std::pair{12, 7}, std::pair{10, 4}}) {
    SearchReport one = minimize_index(n, d, IndexKind::Sz_e_star, {1, ""});
    SearchReport four = minimize_index(n, d, IndexKind::Sz_e_star, {4, ""});
    ++checks;
    if (render(one, Format::Json) != render(four, Format::Json) ||
        render(one, Format::Csv) != render(four, Format::Csv))
      ++bad;
  }
  Outcome o;
  o.pass = (bad == 0);
  o.documented = o.pass;
  o.detail = std::to_string(checks) + " cross-checks, " + std::to_string(bad) +
             " failures";
  return o;
}

// 8. For n = 6..9 the diameter-2 class contains exactly one graph: the
//    triangle with all n-3 pendants at one vertex.
Outcome criterion8() {
  std::uint64_t bad = 0;
  for (int n = 6; n <= 9; ++n) {
    std::vector<Graph> found;
    unicyclic_graphs(n, 2, std::nullopt,
                     [&](const UnicyclicSpec&, const Graph& g) {
                       found.push_back(g);
                     });
    Graph want = assemble(g3_family(11, 0, 0, n - 3));
    if (found.size() != 1 || !oracle::isomorphic(found[0], want)) ++bad;
  }
  Outcome o;
  o.pass = (bad == 0);
  o.documented = o.pass;
  o.detail = "orders 6..9, " + std::to_string(bad) + " misclassified";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool expect_documented = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-documented") {
      expect_documented = true;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", a.c_str());
      return 2;
    }
  }

  struct Entry {
    const char* label;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"Sz_e_star closed form equals the definitional sum (trees and "
       "unicyclic, n <= 10)",
       criterion1},
      {"all decomposition routes agree (unicyclic, n <= 12)", criterion2},
      {"tree identities W_e_line = W - C(n,2), Sz_e = W_e_min; strict gap off "
       "trees (n <= 10)",
       criterion3},
      {"rewrite and pair-check predictions over 500 seeded draws per name",
       criterion4},
      {"pinned duel values at d = n-2, n-3, mid-range, and the position flip",
       criterion5},
      {"full sweep at n = 16, 17: reference family minimizes Sz_e_star at "
       "every diameter",
       criterion6},
      {"enumeration equals the labeled brute-force oracle (n <= 8); reports "
       "identical across worker counts",
       criterion7},
      {"diameter-2 classification, n = 6..9: one class, all pendants on one "
       "triangle vertex",
       criterion8},
  };

  int failures = 0;
  bool all_documented = true;
  for (int i = 0; i < 8; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = entries[i].run();
    if (!o.pass) ++failures;
    all_documented = all_documented && o.documented;
    std::printf("[%s] criterion %d: %s — %s [%.1fs]\n",
                o.pass ? "PASS" : "FAIL", i + 1, entries[i].label,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/8 passed\n", 8 - failures);
  if (expect_documented) {
    std::printf("documented state: %s\n",
                all_documented ? "reproduced" : "NOT reproduced");
    return all_documented ? 0 : 1;
  }
  return failures;
}
