#include "szlab/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace szlab {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string rooted_tree_code(const Graph& tree, int root) {
  if (root < 0 || root >= tree.n)
    throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(root));
  if (tree.m() != tree.n - 1)
    throw Error(ErrorKind::BadParams, "rooted_tree_code requires a tree");
  if (tree.n > 254)
    throw Error(ErrorKind::TooLarge, "level codes support trees up to 254 vertices");

  std::function<std::string(int, int)> rec = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : tree.adj[v])
      if (w != parent) kids.push_back(rec(w, v));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::string code(1, '\x01');
    for (const auto& k : kids)
      for (char c : k) code.push_back(static_cast<char>(c + 1));
    return code;
  };
  return rec(root, -1);
}

CycleTrees decompose_cycle_trees(const Graph& g) {
  CycleTrees ct;
  ct.cycle = unique_cycle(g);
  std::vector<char> on_cycle(g.n, 0);
  for (int v : ct.cycle.vertices) on_cycle[v] = 1;

  for (int v : ct.cycle.vertices) {
    std::vector<int> order{v};
    std::vector<int> local_of(g.n, -1);
    local_of[v] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (int w : g.adj[order[h]]) {
        if (on_cycle[w] || local_of[w] >= 0) continue;
        local_of[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
    std::vector<std::pair<int, int>> tedges;
    for (std::size_t i = 1; i < order.size(); ++i) {
      for (int w : g.adj[order[i]]) {
        if (local_of[w] >= 0 && local_of[w] < static_cast<int>(i))
          tedges.emplace_back(local_of[w], static_cast<int>(i));
      }
    }
    ct.trees.push_back(build_graph(static_cast<int>(order.size()), std::move(tedges)));
    ct.local_to_global.push_back(std::move(order));
  }
  return ct;
}

std::string tree_code(const Graph& tree) {
  if (tree.m() != tree.n - 1)
    throw Error(ErrorKind::BadParams, "tree_code requires a tree");
  // Peel leaves round by round; the last one or two vertices are the center.
  std::vector<int> deg(tree.n);
  for (int v = 0; v < tree.n; ++v) deg[v] = static_cast<int>(tree.adj[v].size());
  std::vector<int> layer;
  for (int v = 0; v < tree.n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = tree.n;
  std::vector<char> gone(tree.n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = 1;
      --remaining;
      for (int w : tree.adj[v])
        if (!gone[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < tree.n; ++v) {
    if (gone[v]) continue;
    std::string c = rooted_tree_code(tree, v);
    if (best.empty() || c < best) best = std::move(c);
  }
  return std::string("T") + best;
}

namespace {

using SlotKey = std::pair<int, const std::string*>;  // (order, code)

bool key_less(const SlotKey& a, const SlotKey& b) {
  if (a.first != b.first) return a.first < b.first;
  return *a.second < *b.second;
}

// Lexicographically minimal dihedral transform of the slot-key sequence.
std::vector<int> minimal_dihedral_order(const std::vector<SlotKey>& keys) {
  const int g = static_cast<int>(keys.size());
  std::vector<int> best;
  auto consider = [&](int start, int step) {
    std::vector<int> cand(g);
    for (int t = 0; t < g; ++t) cand[t] = ((start + step * t) % g + g) % g;
    if (best.empty()) {
      best = cand;
      return;
    }
    for (int t = 0; t < g; ++t) {
      if (key_less(keys[cand[t]], keys[best[t]])) {
        best = cand;
        return;
      }
      if (key_less(keys[best[t]], keys[cand[t]])) return;
    }
  };
  for (int s = 0; s < g; ++s) {
    consider(s, 1);
    consider(s, -1);
  }
  return best;
}

}  // namespace

std::string unicyclic_code(const Graph& g) {
  CycleTrees ct = decompose_cycle_trees(g);
  const int girth = ct.cycle.girth();
  if (girth > 254)
    throw Error(ErrorKind::TooLarge, "unicyclic codes support girth up to 254");

  std::vector<std::string> codes;
  codes.reserve(girth);
  for (const auto& t : ct.trees) codes.push_back(rooted_tree_code(t, 0));
  std::vector<SlotKey> keys;
  keys.reserve(girth);
  for (const auto& c : codes) keys.emplace_back(static_cast<int>(c.size()), &c);

  const std::vector<int> order = minimal_dihedral_order(keys);
  std::string out("U");
  out.push_back(static_cast<char>(girth));
  for (int idx : order) {
    out += codes[idx];
    out.push_back('\0');
  }
  return out;
}

namespace {

// Iteratively re-rank colors by (color, sorted neighbor colors) until stable.
void refine_colors(const Graph& g, std::vector<int>& color) {
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> s{color[v]};
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, rk] : rank) rk = r++;
    bool changed = false;
    for (const auto& [s, v] : sig) {
      const int nc = rank[s];
      if (nc != color[v]) changed = true;
      color[v] = nc;
    }
    if (!changed) return;
  }
}

void canon_search(const Graph& g, std::vector<int> color, std::string& best) {
  refine_colors(g, color);

  // Branch on the first smallest non-singleton color class.
  int ncolors = 0;
  for (int v = 0; v < g.n; ++v) ncolors = std::max(ncolors, color[v] + 1);
  std::vector<std::vector<int>> cells(ncolors);
  for (int v = 0; v < g.n; ++v) cells[color[v]].push_back(v);
  int target = -1;
  for (int c = 0; c < ncolors; ++c) {
    if (cells[c].size() < 2) continue;
    if (target < 0 || cells[c].size() < cells[target].size()) target = c;
  }

  if (target < 0) {
    // Discrete coloring: vertex at canonical position color[v] is v.
    std::vector<int> at(g.n);
    for (int v = 0; v < g.n; ++v) at[color[v]] = v;
    std::string code;
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (g.has_edge(at[i], at[j]) ? 1 : 0);
        if (++nbits == 8) {
          code.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) code.push_back(static_cast<char>(acc << (8 - nbits)));
    if (best.empty() || code < best) best = std::move(code);
    return;
  }

  for (int v : cells[target]) {
    std::vector<int> next(color);
    for (int u = 0; u < g.n; ++u)
      if (next[u] > target || (next[u] == target && u != v)) ++next[u];
    canon_search(g, std::move(next), best);
  }
}

}  // namespace

std::string general_code(const Graph& g) {
  if (g.n > 10)
    throw Error(ErrorKind::TooLarge,
                "general canonical labeling capped at n <= 10, got n=" +
                    std::to_string(g.n));
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = static_cast<int>(g.adj[v].size());
  std::string best;
  canon_search(g, std::move(color), best);
  std::string out("G");
  out.push_back(static_cast<char>(g.n));
  out += best;
  return out;
}

CanonicalCode canonical_code(const Graph& g) {
  if (g.m() == g.n - 1) return {tree_code(g)};
  if (g.m() == g.n) return {unicyclic_code(g)};
  return {general_code(g)};
}

}  // namespace szlab
