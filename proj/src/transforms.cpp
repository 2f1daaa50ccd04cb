#include "szlab/transforms.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "szlab/canonical.hpp"
#include "szlab/error.hpp"
#include "szlab/graph6.hpp"

namespace szlab {
namespace {

[[noreturn]] void fail_pre(const std::string& what) {
  throw Error(ErrorKind::PreconditionViolated, what);
}

void need(bool ok, const std::string& what) {
  if (!ok) fail_pre(what);
}

int cyc_dist(int g, int i, int j) {
  int d = std::abs(i - j);
  return std::min(d, g - d);
}

RootedTree trivial() { return broom(0, 0, 0); }

// ---- rooted-tree shape parsers -------------------------------------------

struct RootedView {
  std::vector<int> parent;
  std::vector<std::vector<int>> kids;
};

RootedView view_of(const RootedTree& t) {
  RootedView w;
  const int n = t.order();
  w.parent.assign(n, -1);
  w.kids.assign(n, {});
  std::vector<char> seen(n, 0);
  std::vector<int> q{t.root};
  seen[t.root] = 1;
  for (std::size_t h = 0; h < q.size(); ++h) {
    int v = q[h];
    for (int u : t.tree.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        w.parent[u] = v;
        w.kids[v].push_back(u);
        q.push_back(u);
      }
  }
  return w;
}

// Length of the bare chain hanging below child c; nullopt if it branches.
std::optional<int> chain_below(const RootedView& w, int c) {
  int len = 1, cur = c;
  while (!w.kids[cur].empty()) {
    if (w.kids[cur].size() > 1) return std::nullopt;
    cur = w.kids[cur][0];
    ++len;
  }
  return len;
}

// Double broom P^a_{k1,k2}. Normal form: every length-1 chain counts as a
// pendant, so k1 >= k2 >= 2 or 0; more than two real chains is not a broom.
struct BroomShape {
  int k1 = 0, k2 = 0, pendants = 0;
};

std::optional<BroomShape> parse_broom(const RootedTree& t) {
  auto w = view_of(t);
  BroomShape s;
  std::vector<int> longs;
  for (int c : w.kids[t.root]) {
    auto len = chain_below(w, c);
    if (!len) return std::nullopt;
    if (*len == 1)
      ++s.pendants;
    else
      longs.push_back(*len);
  }
  if (longs.size() > 2) return std::nullopt;
  std::sort(longs.begin(), longs.end(), std::greater<>());
  if (longs.size() > 0) s.k1 = longs[0];
  if (longs.size() > 1) s.k2 = longs[1];
  return s;
}

// S_{p+1} rooted at its center; returns p (0 for the one-vertex tree).
std::optional<int> parse_star(const RootedTree& t) {
  auto w = view_of(t);
  for (int c : w.kids[t.root])
    if (!w.kids[c].empty()) return std::nullopt;
  return t.order() - 1;
}

// Caterpillar over the root path u_0..u_l (u_l = root): every off-path vertex
// is a leaf on the path. a[j] = pendants at u_j; a[0] == 0 by construction.
struct CatShape {
  std::vector<int> backbone;  // local ids, u_0 first
  std::vector<int> a;
  int l() const { return static_cast<int>(backbone.size()) - 1; }
};

std::optional<CatShape> parse_caterpillar(const RootedTree& t) {
  auto w = view_of(t);
  std::vector<int> spine_rev, a_rev;
  int cur = t.root;
  while (true) {
    std::vector<int> leaves, inner;
    for (int c : w.kids[cur]) (w.kids[c].empty() ? leaves : inner).push_back(c);
    if (inner.size() > 1) return std::nullopt;
    if (!inner.empty()) {
      spine_rev.push_back(cur);
      a_rev.push_back(static_cast<int>(leaves.size()));
      cur = inner[0];
      continue;
    }
    if (leaves.empty()) {
      spine_rev.push_back(cur);  // cur is already the far end u_0
      a_rev.push_back(0);
    } else {
      spine_rev.push_back(cur);  // one leaf continues the backbone as u_0
      a_rev.push_back(static_cast<int>(leaves.size()) - 1);
      spine_rev.push_back(leaves[0]);
      a_rev.push_back(0);
    }
    break;
  }
  CatShape s;
  s.backbone.assign(spine_rev.rbegin(), spine_rev.rend());
  s.a.assign(a_rev.rbegin(), a_rev.rend());
  return s;
}

// Path w_0..w_l2 with one pendant block of b leaves at w_i.
struct DecShape {
  int l2 = 0, b = 0, i = 0;
};

std::optional<DecShape> parse_decorated(const RootedTree& t) {
  auto cat = parse_caterpillar(t);
  if (!cat) return std::nullopt;
  DecShape s;
  s.l2 = cat->l();
  for (int j = 0; j <= cat->l(); ++j)
    if (cat->a[j] > 0) {
      if (s.b > 0) return std::nullopt;
      s.b = cat->a[j];
      s.i = j;
    }
  return s;
}

// ---- assembled-graph helpers ---------------------------------------------

// Mirrors assemble(): tree `slot` occupies a contiguous block, root first.
int assembled_id(const UnicyclicSpec& spec, int slot, int local) {
  int off = 0;
  for (int s = 0; s < slot; ++s) off += spec.trees[s].order();
  const RootedTree& t = spec.trees[slot];
  if (local == t.root) return off;
  return off + (local < t.root ? local + 1 : local);
}

// Edge count of the component of g - x - y that contains s.
int component_edges(const Graph& g, int x, int y, int s) {
  std::vector<char> in(g.n, 0);
  in[s] = 1;
  std::vector<int> q{s};
  for (std::size_t h = 0; h < q.size(); ++h)
    for (int u : g.adj[q[h]])
      if (u != x && u != y && !in[u]) {
        in[u] = 1;
        q.push_back(u);
      }
  int edges = 0;
  for (auto [u, v] : g.edges) edges += (in[u] && in[v]);
  return edges;
}

bool same_graph(const UnicyclicSpec& a, const UnicyclicSpec& b) {
  return unicyclic_code(assemble(a)) == unicyclic_code(assemble(b));
}

void need_slot(const UnicyclicSpec& g, int slot) {
  if (slot < 0 || slot >= g.g)
    throw Error(ErrorKind::BadParams,
                "slot " + std::to_string(slot) + " outside 0.." +
                    std::to_string(g.g - 1));
}

// ---- the nine rewrites -----------------------------------------------------

Applied star_collapse(const UnicyclicSpec& g, const Rewrite& r) {
  int slot = r.arg_or("slot", 0);
  need_slot(g, slot);
  Applied out;
  out.after = g;
  out.after.trees[slot] = broom(0, 0, g.trees[slot].order() - 1);
  out.predicted.sign = same_graph(g, out.after) ? 0 : 1;
  return out;
}

Applied reroot_tndd(const UnicyclicSpec& g, const Rewrite& r) {
  int slot = r.arg_or("slot", 0);
  need_slot(g, slot);
  const RootedTree& t = g.trees[slot];
  int dt = distances(t.tree).diameter;
  need(dt >= 2, "reroot_tndd_31ii needs branch-tree diameter >= 2, got " +
                    std::to_string(dt));
  Applied out;
  out.after = g;
  out.after.trees[slot] = t_ndd(t.order(), dt);
  out.predicted.sign = same_graph(g, out.after) ? 0 : 1;
  return out;
}

Applied flatten_caterpillar(const UnicyclicSpec& g, const Rewrite& r) {
  int slot = r.arg_or("slot", 0);
  need_slot(g, slot);
  const RootedTree& t = g.trees[slot];
  auto w = view_of(t);
  const int n = t.order();

  // Deepest vertex, ties to the earliest found; its root path is the spine.
  std::vector<int> depth(n, 0), bfs{t.root};
  int deepest = t.root;
  for (std::size_t h = 0; h < bfs.size(); ++h) {
    int v = bfs[h];
    for (int u : w.kids[v]) {
      depth[u] = depth[v] + 1;
      if (depth[u] > depth[deepest]) deepest = u;
      bfs.push_back(u);
    }
  }
  std::vector<int> path;  // u_0 .. u_l
  for (int v = deepest; v != -1; v = w.parent[v]) path.push_back(v);

  std::vector<int> sub(n, 1);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (w.parent[*it] != -1) sub[w.parent[*it]] += sub[*it];

  std::vector<char> on_path(n, 0);
  for (int v : path) on_path[v] = 1;
  std::vector<int> a;
  a.reserve(path.size());
  for (int v : path) {
    int hang = 0;
    for (int c : w.kids[v])
      if (!on_path[c]) hang += sub[c];
    a.push_back(hang);
  }

  Applied out;
  out.after = g;
  out.after.trees[slot] = caterpillar(a);
  out.predicted.sign = same_graph(g, out.after) ? 0 : 1;
  return out;
}

Applied shift_pendants(const UnicyclicSpec& g, const Rewrite& r) {
  int slot = r.arg_or("slot", 0);
  need_slot(g, slot);
  int k = r.arg("k");
  int dir = r.arg_or("direction", 1);
  if (dir != 1 && dir != -1)
    throw Error(ErrorKind::BadParams, "direction must be +1 or -1");

  auto cat = parse_caterpillar(g.trees[slot]);
  if (!cat)
    fail_pre("shift_pendants_33 needs a caterpillar branch tree at slot " +
             std::to_string(slot));
  const int l = cat->l();
  need(1 <= k && k <= l - 1, "pendant slot k=" + std::to_string(k) +
                                 " outside 1..l-1 (backbone length l=" +
                                 std::to_string(l) + ")");

  const Graph big = assemble(g);
  const int m = big.m();
  const int uk = assembled_id(g, slot, cat->backbone[k]);
  const int uk1 = assembled_id(g, slot, cat->backbone[k + 1]);
  const int uk0 = assembled_id(g, slot, cat->backbone[k - 1]);
  const int xk = component_edges(big, uk, uk1, uk0) + 1;
  const int ak = cat->a[k], ak1 = cat->a[k + 1];
  const int yk = m - xk - ak - ak1 - 1;

  auto a2 = cat->a;
  std::int64_t delta = 0;
  if (dir > 0) {
    need(ak > 0, "forward shift needs pendants at u_k");
    need(yk + ak1 > xk, "forward shift needs Y_k + a_{k+1} > X_k, got Y_k=" +
                            std::to_string(yk) + " a_{k+1}=" +
                            std::to_string(ak1) + " X_k=" + std::to_string(xk));
    delta = std::int64_t{1} * ak * (yk + ak1 - xk);
    a2[k] = 0;
    a2[k + 1] += ak;
  } else {
    need(ak1 > 0, "backward shift needs pendants at u_{k+1}");
    need(xk + ak > yk, "backward shift needs X_k + a_k > Y_k, got X_k=" +
                           std::to_string(xk) + " a_k=" + std::to_string(ak) +
                           " Y_k=" + std::to_string(yk));
    delta = std::int64_t{1} * ak1 * (xk + ak - yk);
    a2[k + 1] = 0;
    a2[k] += ak1;
  }

  Applied out;
  out.after = g;
  out.after.trees[slot] = caterpillar(a2);
  out.predicted.delta = Q4::from_int(delta);
  return out;
}

Applied merge_stars(const UnicyclicSpec& g, const Rewrite& r) {
  int k = r.arg("k"), l = r.arg("l");
  if (k < 1 || k > g.g || l < 1 || l > g.g || k == l)
    throw Error(ErrorKind::BadParams, "merge_stars_34 needs distinct slots k,l in 1.." +
                                          std::to_string(g.g));
  auto bk = parse_broom(g.trees[k - 1]);
  auto bl = parse_broom(g.trees[l - 1]);
  if (!bk) fail_pre("merge_stars_34 needs a double broom at slot " + std::to_string(k));
  if (!bl) fail_pre("merge_stars_34 needs a double broom at slot " + std::to_string(l));
  const int a = bk->pendants, b = bl->pendants;
  need(a >= 1, "merge_stars_34 needs pendants at slot " + std::to_string(k));
  need(b >= 1, "merge_stars_34 needs pendants at slot " + std::to_string(l));

  auto weight2 = [&](int i0) {  // 2*(2 N_i + delta |V(T_i)| / 2)
    std::int64_t N = 0;
    for (int j = 0; j < g.g; ++j)
      if (j != i0) N += std::int64_t{1} * g.trees[j].order() * cyc_dist(g.g, i0, j);
    return 4 * N + std::int64_t{g.g % 2} * g.trees[i0].order();
  };
  const std::int64_t wk = weight2(k - 1), wl = weight2(l - 1);
  const int dkl = cyc_dist(g.g, k - 1, l - 1);
  const int delta_g = g.g % 2;

  int dir = r.arg_or("direction", 0);
  const bool to_k = dir > 0 || (dir == 0 && wl >= wk);

  Applied out;
  out.after = g;
  std::int64_t q = 0;
  if (to_k) {
    out.after.trees[k - 1] = broom(bk->k1, bk->k2, a + b);
    out.after.trees[l - 1] = broom(bl->k1, bl->k2, 0);
    q = std::int64_t{1} * b * b * (8 * dkl - 2 * delta_g) + 2 * b * (wl - wk);
  } else {
    out.after.trees[l - 1] = broom(bl->k1, bl->k2, a + b);
    out.after.trees[k - 1] = broom(bk->k1, bk->k2, 0);
    q = std::int64_t{1} * a * a * (8 * dkl - 2 * delta_g) + 2 * a * (wk - wl);
  }
  out.predicted.delta = Q4::from_quarters(q);
  return out;
}

Applied contract_cycle(const UnicyclicSpec& g, const Rewrite& r) {
  need(g.g >= 5, "contract_cycle_35 needs girth >= 5, got " + std::to_string(g.g));
  const int tag = r.arg("case_tag");
  const RootedTree& t1 = g.trees[0];
  const RootedTree& t2 = g.trees[1];
  const RootedTree& tg = g.trees[g.g - 1];

  RootedTree folded;
  if (tag == 1) {
    auto b1 = parse_broom(t1);
    auto s2 = parse_star(t2);
    if (!b1 || b1->k1 < 1) fail_pre("case 1 needs a broom with a real path at slot 1");
    if (!s2) fail_pre("case 1 needs a star at slot 2");
    need(tg.order() == 1, "case 1 needs a trivial tree at the last slot");
    folded = broom(b1->k1, b1->k2, b1->pendants + *s2 + 2);
  } else if (tag == 2) {
    auto s1 = parse_star(t1);
    auto b2 = parse_broom(t2);
    auto sg = parse_star(tg);
    if (!s1) fail_pre("case 2 needs a star at slot 1");
    if (!b2 || b2->k2 != 0) fail_pre("case 2 needs a single-path broom at slot 2");
    if (!sg) fail_pre("case 2 needs a star at the last slot");
    folded = broom(b2->k1, 0, *s1 + b2->pendants + *sg + 2);
  } else if (tag == 3) {
    auto b1 = parse_broom(t1);
    auto s2 = parse_star(t2);
    auto sg = parse_star(tg);
    if (!b1 || b1->k2 != 0) fail_pre("case 3 needs a single-path broom at slot 1");
    if (!s2) fail_pre("case 3 needs a star at slot 2");
    if (!sg) fail_pre("case 3 needs a star at the last slot");
    std::int64_t mid = 0;
    for (int j = 2; j < g.g - 1; ++j) mid += g.trees[j].edge_count();
    need(mid >= b1->k1,
         "case 3 needs the middle branch trees to carry at least l1 edges (" +
             std::to_string(mid) + " < " + std::to_string(b1->k1) + ")");
    folded = broom(b1->k1 + 1, 0, b1->pendants + *s2 + *sg + 1);
  } else {
    throw Error(ErrorKind::BadParams, "contract_cycle_35 case_tag must be 1, 2 or 3");
  }

  Applied out;
  out.after.g = g.g - 2;
  out.after.trees.push_back(std::move(folded));
  for (int j = 2; j < g.g - 1; ++j) out.after.trees.push_back(g.trees[j]);
  out.predicted.sign = 1;
  return out;
}

Applied endblock_shift(const UnicyclicSpec& g, const Rewrite&) {
  Applied out;
  out.after.g = g.g;
  out.after.trees.push_back(merge_at_root(g.trees));
  for (int j = 1; j < g.g; ++j) out.after.trees.push_back(trivial());
  out.predicted.sign = same_graph(g, out.after) ? 0 : 1;
  return out;
}

Applied rotate_path(const UnicyclicSpec& g, const Rewrite&) {
  need(g.g == 3, "rotate_path_41 needs girth 3, got " + std::to_string(g.g));
  auto b1 = parse_broom(g.trees[0]);
  if (!b1 || b1->k2 != 0) fail_pre("rotate_path_41 needs a single-path broom at slot 1");
  auto s2 = parse_star(g.trees[1]);
  if (!s2) fail_pre("rotate_path_41 needs a star at slot 2");
  auto dec = parse_decorated(g.trees[2]);
  if (!dec) fail_pre("rotate_path_41 needs a pendant-decorated path at slot 3");

  const int l1 = b1->k1, a = b1->pendants, b = *s2;
  const int l2 = dec->l2, c = dec->b, i = dec->i;
  if (c > 0)
    need(i < l2, "rotate_path_41 needs the pendant block strictly inside the path");
  need(l2 >= l1 + 1, "rotate_path_41 needs l2 >= l1 + 1, got l2=" +
                         std::to_string(l2) + " l1=" + std::to_string(l1));

  Applied out;
  out.after = g;
  out.after.trees[0] = broom(l1 + 1, 0, a);
  out.after.trees[2] = decorated_path(l2 - 1, c, i);
  out.predicted.delta =
      Q4::from_halves(std::int64_t{2 * b + 3} * (c + l2 - l1 - 1) +
                      std::int64_t{a} * (1 + 2 * c + 2 * (l2 - l1)));
  return out;
}

Applied c4_consolidate(const UnicyclicSpec& g, const Rewrite& r) {
  need(g.g == 4, "c4_consolidate_51 needs girth 4, got " + std::to_string(g.g));
  const int tag = r.arg("case_tag");
  const std::int64_t m1 = g.trees[0].edge_count(), m2 = g.trees[1].edge_count(),
                     m3 = g.trees[2].edge_count(), m4 = g.trees[3].edge_count();
  const int n1 = g.trees[0].order(), n2 = g.trees[1].order(),
            n3 = g.trees[2].order(), n4 = g.trees[3].order();

  Applied out;
  out.after.g = 4;
  std::int64_t delta = 0;
  if (tag == 1) {
    need(n1 > 1, "case 1 needs a branch tree at v_1");
    need(n2 > 1 || n3 > 1 || n4 > 1, "case 1 needs a second branch tree");
    out.after.trees = {merge_at_root(g.trees), trivial(), trivial(), trivial()};
    delta = 2 * ((m1 + m2) * (m3 + m4) + (m1 + m4) * (m2 + m3));
  } else if (tag == 2) {
    need(n1 > 1 && n2 > 1, "case 2 needs branch trees at v_1 and v_2");
    need(n3 > 1 || n4 > 1, "case 2 needs a branch tree at v_3 or v_4");
    out.after.trees = {merge_at_root({g.trees[0], g.trees[2], g.trees[3]}),
                       g.trees[1], trivial(), trivial()};
    delta = 4 * m1 * m3 + 2 * m4 * (m1 + m2 + m3);
  } else if (tag == 3) {
    need(n4 == 1, "case 3 needs a trivial tree at v_4");
    need(n2 > 1, "case 3 needs a branch tree at v_2");
    need(n1 <= n3, "case 3 needs |V(T_1)| <= |V(T_3)|");
    out.after.trees = {merge_at_root({g.trees[0], g.trees[1]}), trivial(),
                       g.trees[2], trivial()};
    delta = 2 * m2 * (m1 - m3);
  } else {
    throw Error(ErrorKind::BadParams, "c4_consolidate_51 case_tag must be 1, 2 or 3");
  }
  out.predicted.delta = Q4::from_int(delta);
  return out;
}

void check_spec(const UnicyclicSpec& g) {
  if (g.g < 3 || static_cast<int>(g.trees.size()) != g.g)
    throw Error(ErrorKind::InvalidSpec,
                "spec must carry one rooted tree per cycle vertex");
}

}  // namespace

int Rewrite::arg(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end())
    throw Error(ErrorKind::BadParams,
                "rewrite " + name + " needs argument \"" + key + "\"");
  return it->second;
}

int Rewrite::arg_or(const std::string& key, int fallback) const {
  auto it = args.find(key);
  return it == args.end() ? fallback : it->second;
}

const std::vector<std::string>& rewrite_names() {
  static const std::vector<std::string> names = {
      "star_collapse_31i",  "reroot_tndd_31ii", "flatten_caterpillar_31iii",
      "shift_pendants_33",  "merge_stars_34",   "contract_cycle_35",
      "endblock_shift_27",  "rotate_path_41",   "c4_consolidate_51"};
  return names;
}

const std::vector<IndexKind>& rewrite_kinds(const std::string& name) {
  static const std::vector<IndexKind> both = {IndexKind::Sz_e_star,
                                              IndexKind::Sz_e};
  static const std::vector<IndexKind> star_only = {IndexKind::Sz_e_star};
  static const std::vector<IndexKind> edge_only = {IndexKind::Sz_e};
  if (name == "endblock_shift_27") return edge_only;
  if (name == "merge_stars_34" || name == "rotate_path_41" ||
      name == "c4_consolidate_51")
    return star_only;
  const auto& all = rewrite_names();
  if (std::find(all.begin(), all.end(), name) != all.end()) return both;
  throw Error(ErrorKind::BadParams, "unknown rewrite \"" + name + "\"");
}

Applied apply(const UnicyclicSpec& g, const Rewrite& r, IndexKind kind) {
  check_spec(g);
  const auto& kinds = rewrite_kinds(r.name);
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw Error(ErrorKind::BadParams,
                "rewrite " + r.name + " carries no prediction for " +
                    index_kind_name(kind));
  if (r.name == "star_collapse_31i") return star_collapse(g, r);
  if (r.name == "reroot_tndd_31ii") return reroot_tndd(g, r);
  if (r.name == "flatten_caterpillar_31iii") return flatten_caterpillar(g, r);
  if (r.name == "shift_pendants_33") return shift_pendants(g, r);
  if (r.name == "merge_stars_34") return merge_stars(g, r);
  if (r.name == "contract_cycle_35") return contract_cycle(g, r);
  if (r.name == "endblock_shift_27") return endblock_shift(g, r);
  if (r.name == "rotate_path_41") return rotate_path(g, r);
  if (r.name == "c4_consolidate_51") return c4_consolidate(g, r);
  throw Error(ErrorKind::BadParams, "unknown rewrite \"" + r.name + "\"");
}

namespace {

TransformReport evaluate(const std::string& name, const Graph& before,
                         const Graph& after, IndexKind kind,
                         const Prediction& pred) {
  TransformReport rep;
  rep.name = name;
  rep.before_graph6 = to_graph6(before);
  rep.after_graph6 = to_graph6(after);
  rep.kind = kind;
  rep.value_before = index_value(index_suite(before), kind);
  rep.value_after = index_value(index_suite(after), kind);
  rep.actual_delta = rep.value_before - rep.value_after;
  rep.predicted_delta = pred.delta;
  rep.predicted_sign = pred.sign;
  rep.allow_equal = pred.allow_equal;
  if (pred.delta) {
    rep.agrees = (rep.actual_delta == *pred.delta);
  } else {
    const Q4 zero;
    int s = rep.actual_delta < zero ? -1 : (zero < rep.actual_delta ? 1 : 0);
    rep.agrees = (s == *pred.sign) || (pred.allow_equal && s == 0);
  }
  return rep;
}

}  // namespace

TransformReport check(const UnicyclicSpec& g, const Rewrite& r, IndexKind kind) {
  Applied ap = apply(g, r, kind);
  const Graph before = assemble(g);
  const Graph after = assemble(ap.after);
  if (before.n != after.n)
    throw Error(ErrorKind::InvalidSpec, "rewrite " + r.name + " changed the order");
  const int expect_girth = (r.name == "contract_cycle_35") ? g.g - 2 : g.g;
  if (unique_cycle(after).girth() != expect_girth)
    throw Error(ErrorKind::InvalidSpec, "rewrite " + r.name + " broke the girth contract");
  return evaluate(r.name, before, after, kind, ap.predicted);
}

TransformReport check(const UnicyclicSpec& g, const Rewrite& r) {
  return check(g, r, rewrite_kinds(r.name)[0]);
}

// ---- named graph-pair checks ----------------------------------------------

namespace {

int parg(const PairCheck& p, const std::string& key) {
  auto it = p.args.find(key);
  if (it == p.args.end())
    throw Error(ErrorKind::BadParams,
                "pair check " + p.name + " needs argument \"" + key + "\"");
  return it->second;
}

UnicyclicSpec c3(RootedTree a, RootedTree b, RootedTree c) {
  UnicyclicSpec s;
  s.g = 3;
  s.trees = {std::move(a), std::move(b), std::move(c)};
  return s;
}

struct PairInstance {
  UnicyclicSpec lhs, rhs;
  Prediction pred;
};

PairInstance build_pair(const PairCheck& p) {
  PairInstance out;
  auto& pred = out.pred;
  const std::string& nm = p.name;

  if (nm == "g3_rebalance_42") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a");
    need(l1 >= 0 && a >= 0, "g3_rebalance_42 needs l1,a >= 0");
    need(l2 >= l1 + 3, "g3_rebalance_42 needs l2 >= l1 + 3");
    out.lhs = c3(broom(l2, 0, 0), broom(l1, 0, a), trivial());
    out.rhs = c3(broom(l2 - 1, 0, 0), broom(l1 + 1, 0, a), trivial());
    pred.sign = 1;
  } else if (nm == "g3_rebalance_43") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a");
    need(l1 >= 0 && a >= 0, "g3_rebalance_43 needs l1,a >= 0");
    need(l2 >= l1 + 3, "g3_rebalance_43 needs l2 >= l1 + 3");
    out.lhs = c3(broom(l1, 0, 0), broom(l2, 0, a), trivial());
    out.rhs = c3(broom(l1 + 1, 0, 0), broom(l2 - 1, 0, a), trivial());
    pred.delta = Q4::from_halves(std::int64_t{a} * (2 * (l2 - l1) - 5) +
                                 3 * std::int64_t{l2 - l1 - 1});
  } else if (nm == "g3_11_vs_12_44i") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a");
    out.lhs = g3_family(11, l1, l2, a);
    out.rhs = g3_family(12, l1, l2, a);
    pred.delta = Q4::from_halves(-3 * std::int64_t{a} * l1);
  } else if (nm == "g3_21_vs_22_44ii") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a");
    need(a >= 1, "g3_21_vs_22_44ii needs a >= 1");
    out.lhs = g3_family(21, l1, l2, a);
    out.rhs = g3_family(22, l1, l2, a);
    pred.sign = (a == 1) ? 0 : -1;
  } else if (nm == "g3_11_vs_21_44iii") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a");
    need(a >= 1, "g3_11_vs_21_44iii needs a >= 1");
    out.lhs = g3_family(11, l1, l2, a);
    out.rhs = g3_family(21, l1, l2, a);
    pred.delta = Q4::from_halves(std::int64_t{l2} * (a + l1 - 4));
  } else if (nm == "g4_21_rebalance_54") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a"),
              b = parg(p, "b"), i = parg(p, "i");
    need(l2 >= l1 && l1 >= 0, "g4_21_rebalance_54 needs l2 >= l1 >= 0");
    need(0 < i && i < l2, "g4_21_rebalance_54 needs 0 < i < l2");
    out.lhs = g4_family(2, 1, l1, l2, a, b, i);
    out.rhs = g4_family(2, 1, l1 + 1, l2 - 1, a, b, i);
    pred.delta = Q4::from_int(std::int64_t{a} * (b + l2 + 1 - l1) + 2 * b +
                              2 * std::int64_t{l2 - l1 - 1});
  } else if (nm == "g4_21_vs_11_55") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a"),
              b = parg(p, "b"), i = parg(p, "i");
    need(l2 >= l1 && a >= 1, "g4_21_vs_11_55 needs l2 >= l1 and a >= 1");
    need(1 <= i && i <= l2, "g4_21_vs_11_55 needs 1 <= i <= l2");
    need(a + b + l1 + l2 + 4 >= 14, "g4_21_vs_11_55 needs order >= 14");
    out.lhs = g4_family(2, 1, l1, l2, a, b, i);
    out.rhs = g4_family(1, 1, l1 + 1, l2, a - 1, b, i);
    pred.delta = Q4::from_int(std::int64_t{l1} * (a + b + l2 - 3) +
                              2 * std::int64_t{a} * b + std::int64_t{a} * (l2 - l1));
  } else if (nm == "g4_21_vs_11_i_l2_56") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), b = parg(p, "b");
    need(l2 >= l1 && l1 >= 1 && b >= 1,
         "g4_21_vs_11_i_l2_56 needs l2 >= l1 >= 1 and b >= 1");
    need(b + l1 + l2 + 4 >= 14, "g4_21_vs_11_i_l2_56 needs order >= 14");
    out.lhs = g4_family(2, 1, l1, l2, 0, b, l2);
    out.rhs = g4_family(1, 1, l1 + 1, l2, b - 1, 0, 0);
    pred.delta = Q4::from_int(std::int64_t{l1} * (b + l2 - 3));
  } else if (nm == "g4_32_rebalance_57") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a"),
              b = parg(p, "b"), i = parg(p, "i");
    need(l2 >= l1 && l1 >= 1, "g4_32_rebalance_57 needs l2 >= l1 >= 1");
    need(0 < i && i < l2, "g4_32_rebalance_57 needs 0 < i < l2");
    out.lhs = g4_family(3, 2, l1, l2, a, b, i);
    out.rhs = g4_family(3, 2, l1 - 1, l2 + 1, a, b, i);
    pred.delta = Q4::from_int(std::int64_t{a} * (l1 - b - l2 - 1));
  } else if (nm == "g4_32_vs_21_58") {
    const int l1 = parg(p, "l1"), l2 = parg(p, "l2"), a = parg(p, "a"),
              b = parg(p, "b"), i = parg(p, "i");
    need(l2 >= l1 && l1 >= 1 && a >= 1,
         "g4_32_vs_21_58 needs l2 >= l1 >= 1 and a >= 1");
    need(1 <= i && i <= l2, "g4_32_vs_21_58 needs 1 <= i <= l2");
    need(a + b + l1 + l2 + 4 >= 14, "g4_32_vs_21_58 needs order >= 14");
    out.lhs = g4_family(3, 2, l1, l2, a, b, i);
    out.rhs = g4_family(2, 1, l1 + 1, l2, a - 1, b, i);
    pred.delta = Q4::from_int(std::int64_t{l1} * (l2 + a + b - 3));
  } else if (nm == "g4_32_vs_21_d_n3_59") {
    const int d = parg(p, "d");
    need(d + 3 >= 14, "g4_32_vs_21_d_n3_59 needs order d + 3 >= 14");
    const int k = d / 2;
    if (d % 2 == 0) {
      out.lhs = g4_family(3, 2, 0, 2 * k - 2, 0, 1, k + 1);
      out.rhs = g4_family(2, 1, k - 1, k, 0, 0, 0);
      pred.delta = Q4::from_int(std::int64_t{k} * k - 4 * k - 1);
    } else {
      out.lhs = g4_family(3, 2, 0, 2 * k - 1, 0, 1, k + 1);
      out.rhs = g4_family(2, 1, k, k, 0, 0, 0);
      pred.delta = Q4::from_int(std::int64_t{k} * k - 3 * k - 2);
    }
  } else if (nm == "g4_32_vs_21_onepend_510") {
    const int d = parg(p, "d");
    need(d + 3 > 14, "g4_32_vs_21_onepend_510 needs order d + 3 > 14");
    const int k = d / 2;
    if (d % 2 == 0) {
      out.lhs = g4_family(3, 2, k - 1, k - 1, 1, 0, 0);
      out.rhs = g4_family(2, 1, k - 1, k, 0, 0, 0);
      pred.delta = Q4::from_int(std::int64_t{k - 1} * (k - 3));
    } else {
      out.lhs = g4_family(3, 2, k - 1, k, 1, 0, 0);
      out.rhs = g4_family(2, 1, k, k, 0, 0, 0);
      pred.delta = Q4::from_int(std::int64_t{k - 1} * (k - 2));
    }
  } else if (nm == "g3_vs_g4_d_n2_61") {
    const int d = parg(p, "d");
    need(d + 2 > 15, "g3_vs_g4_d_n2_61 needs order d + 2 > 15");
    const int k = d / 2;
    if (d % 2 == 0) {
      out.lhs = c3(broom(k, 0, 0), broom(k - 1, 0, 0), trivial());
      pred.delta = Q4::from_quarters(2 * std::int64_t{k} - 2 * std::int64_t{k} * k - 11);
    } else {
      out.lhs = c3(broom(k, 0, 0), broom(k, 0, 0), trivial());
      pred.delta = Q4::from_halves(-(std::int64_t{k} * k + 6));
    }
    out.rhs = g4_family(3, 2, 0, d - 2, 0, 0, 0);
  } else if (nm == "g4_vs_g3_d_n3_62") {
    const int d = parg(p, "d");
    need(d + 3 > 14, "g4_vs_g3_d_n3_62 needs order d + 3 > 14");
    const int k = d / 2;
    if (d % 2 == 0) {
      out.lhs = g4_family(2, 1, k, k - 1, 0, 0, 0);
      out.rhs = c3(broom(k, k, 0), trivial(), trivial());
      pred.delta = Q4::from_quarters(8 * std::int64_t{k} + 13);
    } else {
      out.lhs = g4_family(2, 1, k, k, 0, 0, 0);
      out.rhs = c3(broom(k, k + 1, 0), trivial(), trivial());
      pred.delta = Q4::from_quarters(8 * std::int64_t{k} + 11);
    }
  } else if (nm == "g3_vs_g4_mid_63") {
    const int n = parg(p, "n"), d = parg(p, "d");
    need(n > 15, "g3_vs_g4_mid_63 needs n > 15");
    need(4 <= d && d <= n - 4, "g3_vs_g4_mid_63 needs 4 <= d <= n - 4");
    out.lhs = c3(broom(d / 2, d - d / 2, n - d - 3), trivial(), trivial());
    out.rhs = g4_family(1, 1, d / 2, d - d / 2, n - d - 4, 0, 0);
    pred.delta = Q4::from_quarters(std::int64_t{n} * n - 18 * std::int64_t{n} + 45);
  } else if (nm == "g4_32_vs_11_64") {
    const int n = parg(p, "n"), d = parg(p, "d");
    need(n > 15, "g4_32_vs_11_64 needs n > 15");
    need(4 <= d && d <= n - 4, "g4_32_vs_11_64 needs 4 <= d <= n - 4");
    out.lhs = g4_family(3, 2, 0, d - 2, 0, n - d - 2, d - d / 2);
    out.rhs = g4_family(1, 1, d / 2, d - d / 2, n - d - 4, 0, 0);
    const std::int64_t fd = d / 2;
    pred.delta = Q4::from_int((2 * fd - 5) * n - 2 * fd * fd - 4 * fd + 18);
  } else if (nm == "g4_32_pos_d4_65") {
    const int n = parg(p, "n");
    need(n > 15, "g4_32_pos_d4_65 needs n > 15");
    out.lhs = g4_family(3, 2, 0, 2, 0, n - 6, 2);
    out.rhs = g4_family(3, 2, 0, 2, 0, n - 6, 1);
    pred.sign = -1;
  } else if (nm == "g4_32_pos_d5_66") {
    const int n = parg(p, "n");
    need(n > 15, "g4_32_pos_d5_66 needs n > 15");
    out.lhs = g4_family(3, 2, 0, 3, 0, n - 7, 3);
    const UnicyclicSpec cand1 = g4_family(3, 2, 0, 3, 0, n - 7, 1);
    const UnicyclicSpec cand2 = g4_family(3, 2, 0, 3, 0, n - 7, 2);
    const Q4 v1 = index_suite(assemble(cand1)).Sz_e_star;
    const Q4 v2 = index_suite(assemble(cand2)).Sz_e_star;
    out.rhs = (v2 < v1) ? cand2 : cand1;
    pred.sign = -1;
  } else if (nm == "g3_vs_g4_d3_67") {
    const int n = parg(p, "n");
    need(n > 15, "g3_vs_g4_d3_67 needs n > 15");
    out.lhs = c3(broom(2, 1, n - 6), trivial(), trivial());
    UnicyclicSpec rhs;
    rhs.g = 4;
    rhs.trees = {broom(0, 0, n - 4), trivial(), trivial(), trivial()};
    out.rhs = std::move(rhs);
    pred.sign = 1;
  } else {
    throw Error(ErrorKind::BadParams, "unknown pair check \"" + nm + "\"");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& pair_check_names() {
  static const std::vector<std::string> names = {
      "g3_rebalance_42",      "g3_rebalance_43",     "g3_11_vs_12_44i",
      "g3_21_vs_22_44ii",     "g3_11_vs_21_44iii",   "g4_21_rebalance_54",
      "g4_21_vs_11_55",       "g4_21_vs_11_i_l2_56", "g4_32_rebalance_57",
      "g4_32_vs_21_58",       "g4_32_vs_21_d_n3_59", "g4_32_vs_21_onepend_510",
      "g3_vs_g4_d_n2_61",     "g4_vs_g3_d_n3_62",    "g3_vs_g4_mid_63",
      "g4_32_vs_11_64",       "g4_32_pos_d4_65",     "g4_32_pos_d5_66",
      "g3_vs_g4_d3_67"};
  return names;
}

TransformReport check_pair(const PairCheck& p) {
  PairInstance inst = build_pair(p);
  const Graph lhs = assemble(inst.lhs);
  const Graph rhs = assemble(inst.rhs);
  if (lhs.n != rhs.n)
    throw Error(ErrorKind::InvalidSpec, "pair check " + p.name + " order mismatch");
  return evaluate(p.name, lhs, rhs, IndexKind::Sz_e_star, inst.pred);
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RootedTree draw_tree(std::mt19937_64& rng, int order) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < order; ++v) e.emplace_back(draw(rng, 0, v - 1), v);
  return make_rooted_tree(build_graph(order, std::move(e)), 0);
}

UnicyclicSpec draw_spec(std::mt19937_64& rng, int g, int max_tree) {
  UnicyclicSpec s;
  s.g = g;
  for (int i = 0; i < g; ++i) s.trees.push_back(draw_tree(rng, draw(rng, 1, max_tree)));
  return s;
}

// One random in-domain draw for the named rewrite. May throw
// PreconditionViolated for data-dependent conditions; the caller retries.
TransformReport draw_rewrite(const std::string& name, IndexKind kind,
                             std::mt19937_64& rng) {
  if (name == "star_collapse_31i" || name == "flatten_caterpillar_31iii") {
    UnicyclicSpec s = draw_spec(rng, draw(rng, 3, 6), 6);
    return check(s, {name, {{"slot", draw(rng, 0, s.g - 1)}}}, kind);
  }
  if (name == "reroot_tndd_31ii") {
    UnicyclicSpec s = draw_spec(rng, draw(rng, 3, 6), 6);
    const int slot = draw(rng, 0, s.g - 1);
    s.trees[slot] = draw_tree(rng, draw(rng, 3, 7));  // order >= 3: diameter >= 2
    return check(s, {name, {{"slot", slot}}}, kind);
  }
  if (name == "shift_pendants_33") {
    const int l = draw(rng, 2, 5);
    std::vector<int> a(l + 1, 0);
    for (int j = 1; j <= l; ++j) a[j] = draw(rng, 0, 3);
    UnicyclicSpec s;
    s.g = draw(rng, 3, 5);
    s.trees.push_back(caterpillar(a));
    for (int i = 1; i < s.g; ++i) s.trees.push_back(draw_tree(rng, draw(rng, 1, 4)));
    return check(s,
                 {name,
                  {{"slot", 0},
                   {"k", draw(rng, 1, l - 1)},
                   {"direction", rng() % 2 ? 1 : -1}}},
                 kind);
  }
  if (name == "merge_stars_34") {
    const int g = draw(rng, 3, 6);
    UnicyclicSpec s;
    s.g = g;
    for (int i = 0; i < g; ++i)
      s.trees.push_back(broom(draw(rng, 0, 3), draw(rng, 0, 2), draw(rng, 0, 3)));
    int k = draw(rng, 1, g), l = draw(rng, 1, g);
    if (k == l) l = 1 + l % g;
    return check(s, {name, {{"k", k}, {"l", l}, {"direction", draw(rng, -1, 1)}}},
                 kind);
  }
  if (name == "contract_cycle_35") {
    const int g = draw(rng, 5, 7);
    const int tag = draw(rng, 1, 3);
    UnicyclicSpec s;
    s.g = g;
    if (tag == 1) {
      s.trees.push_back(broom(draw(rng, 1, 3), draw(rng, 0, 2), draw(rng, 0, 2)));
      s.trees.push_back(broom(0, 0, draw(rng, 0, 2)));
    } else if (tag == 2) {
      s.trees.push_back(broom(0, 0, draw(rng, 0, 2)));
      s.trees.push_back(broom(draw(rng, 0, 3), 0, draw(rng, 0, 2)));
    } else {
      s.trees.push_back(broom(draw(rng, 0, 2), 0, draw(rng, 0, 2)));
      s.trees.push_back(broom(0, 0, draw(rng, 0, 2)));
    }
    for (int i = 2; i < g - 1; ++i) s.trees.push_back(draw_tree(rng, draw(rng, 1, 4)));
    s.trees.push_back(broom(0, 0, tag == 1 ? 0 : draw(rng, 0, 2)));
    return check(s, {name, {{"case_tag", tag}}}, kind);
  }
  if (name == "endblock_shift_27")
    return check(draw_spec(rng, draw(rng, 3, 6), 6), {name, {}}, kind);
  if (name == "rotate_path_41") {
    const int l1 = draw(rng, 0, 3);
    const int l2 = l1 + draw(rng, 1, 3);
    const int c = draw(rng, 0, 3);
    UnicyclicSpec s;
    s.g = 3;
    s.trees = {broom(l1, 0, draw(rng, 0, 3)), broom(0, 0, draw(rng, 0, 3)),
               decorated_path(l2, c, c > 0 ? draw(rng, 1, std::max(1, l2 - 1)) : 0)};
    return check(s, {name, {}}, kind);
  }
  if (name == "c4_consolidate_51") {
    UnicyclicSpec s = draw_spec(rng, 4, 5);
    return check(s, {name, {{"case_tag", draw(rng, 1, 3)}}}, kind);
  }
  throw Error(ErrorKind::BadParams, "unknown rewrite \"" + name + "\"");
}

// Arguments for the named pair check, drawn inside its stated ranges.
PairCheck draw_pair(const std::string& name, std::mt19937_64& rng) {
  PairCheck p;
  p.name = name;
  auto& a = p.args;
  if (name == "g3_rebalance_42" || name == "g3_rebalance_43") {
    a["l1"] = draw(rng, 0, 4);
    a["l2"] = a["l1"] + 3 + draw(rng, 0, 4);
    a["a"] = draw(rng, 0, 4);
  } else if (name == "g3_11_vs_12_44i") {
    a["l1"] = draw(rng, 0, 5);
    a["l2"] = draw(rng, 0, 5);
    a["a"] = draw(rng, 0, 5);
  } else if (name == "g3_21_vs_22_44ii") {
    a["l1"] = draw(rng, 0, 5);
    a["l2"] = draw(rng, 0, 5);
    a["a"] = draw(rng, 1, 5);
  } else if (name == "g3_11_vs_21_44iii") {
    do {
      a["l1"] = draw(rng, 0, 8);
      a["l2"] = draw(rng, 0, 8);
      a["a"] = draw(rng, 1, 12);
    } while (a["a"] + a["l1"] + a["l2"] <= 10);
  } else if (name == "g4_21_rebalance_54" || name == "g4_32_rebalance_57") {
    const int lo = name == "g4_32_rebalance_57" ? 1 : 0;
    a["l1"] = draw(rng, lo, 4);
    a["l2"] = std::max(a["l1"], 2) + draw(rng, 0, 3);
    a["a"] = draw(rng, 0, 4);
    a["b"] = draw(rng, 0, 4);
    a["i"] = draw(rng, 1, a["l2"] - 1);
  } else if (name == "g4_21_vs_11_55" || name == "g4_32_vs_21_58") {
    const int lo = name == "g4_32_vs_21_58" ? 1 : 0;
    do {
      a["l1"] = draw(rng, lo, 5);
      a["l2"] = std::max(1, a["l1"]) + draw(rng, 0, 5);
      a["a"] = draw(rng, 1, 6);
      a["b"] = draw(rng, 0, 5);
    } while (a["a"] + a["b"] + a["l1"] + a["l2"] < 10);
    a["i"] = draw(rng, 1, a["l2"]);
  } else if (name == "g4_21_vs_11_i_l2_56") {
    do {
      a["l1"] = draw(rng, 1, 5);
      a["l2"] = a["l1"] + draw(rng, 0, 5);
      a["b"] = draw(rng, 1, 8);
    } while (a["b"] + a["l1"] + a["l2"] < 10);
  } else if (name == "g4_32_vs_21_d_n3_59" || name == "g4_32_vs_21_onepend_510" ||
             name == "g4_vs_g3_d_n3_62") {
    a["d"] = draw(rng, 12, 40);
  } else if (name == "g3_vs_g4_d_n2_61") {
    a["d"] = draw(rng, 14, 40);
  } else if (name == "g3_vs_g4_mid_63" || name == "g4_32_vs_11_64") {
    a["n"] = draw(rng, 16, 40);
    a["d"] = draw(rng, 4, a["n"] - 4);
  } else if (name == "g4_32_pos_d4_65" || name == "g4_32_pos_d5_66" ||
             name == "g3_vs_g4_d3_67") {
    a["n"] = draw(rng, 16, 60);
  } else {
    throw Error(ErrorKind::BadParams, "unknown pair check \"" + name + "\"");
  }
  return p;
}

bool is_rewrite_name(const std::string& name) {
  const auto& names = rewrite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

TransformReport random_check(const std::string& name, IndexKind kind,
                             std::mt19937_64& rng) {
  if (is_rewrite_name(name)) {
    const auto& kinds = rewrite_kinds(name);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
      throw Error(ErrorKind::BadParams, "rewrite " + name +
                                            " predicts nothing about " +
                                            index_kind_name(kind));
    for (int attempt = 0; attempt < 10000; ++attempt) {
      try {
        return draw_rewrite(name, kind, rng);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionViolated) throw;
      }
    }
    throw Error(ErrorKind::BadParams,
                "could not draw an in-domain instance of " + name);
  }
  if (kind != IndexKind::Sz_e_star)
    throw Error(ErrorKind::BadParams,
                "pair check " + name + " is defined on Sz_e_star only");
  return check_pair(draw_pair(name, rng));
}

TransformReport random_check(const std::string& name, std::mt19937_64& rng) {
  if (is_rewrite_name(name)) return random_check(name, rewrite_kinds(name)[0], rng);
  return random_check(name, IndexKind::Sz_e_star, rng);
}

}  // namespace szlab
