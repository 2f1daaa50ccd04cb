#include "szlab/families.hpp"

#include <algorithm>
#include <sstream>

namespace szlab {

RootedTree make_rooted_tree(Graph tree, int root) {
  if (tree.m() != tree.n - 1)
    throw Error(ErrorKind::InvalidSpec, "pendant component must be a tree");
  if (root < 0 || root >= tree.n)
    throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(root));
  RootedTree rt;
  rt.canonical_level_code = rooted_tree_code(tree, root);
  rt.tree = std::move(tree);
  rt.root = root;
  return rt;
}

int UnicyclicSpec::order() const {
  int n = 0;
  for (const auto& t : trees) n += t.order();
  return n;
}

Graph assemble(const UnicyclicSpec& spec) {
  if (spec.g < 3)
    throw Error(ErrorKind::InvalidSpec, "cycle length must be >= 3");
  if (static_cast<int>(spec.trees.size()) != spec.g)
    throw Error(ErrorKind::InvalidSpec,
                "expected " + std::to_string(spec.g) + " pendant trees, got " +
                    std::to_string(spec.trees.size()));

  std::vector<int> offset(spec.g + 1, 0);
  for (int i = 0; i < spec.g; ++i) offset[i + 1] = offset[i] + spec.trees[i].order();
  const int n = offset[spec.g];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < spec.g; ++i)
    edges.emplace_back(offset[i], offset[(i + 1) % spec.g]);
  for (int i = 0; i < spec.g; ++i) {
    const RootedTree& t = spec.trees[i];
    // Root takes the block offset; the other locals follow in ascending order.
    auto remap = [&](int local) {
      if (local == t.root) return offset[i];
      return offset[i] + (local < t.root ? local + 1 : local);
    };
    for (auto [u, v] : t.tree.edges) edges.emplace_back(remap(u), remap(v));
  }
  return build_graph(n, std::move(edges));
}

UnicyclicSpec spec_of_graph(const Graph& g) {
  CycleTrees ct = decompose_cycle_trees(g);
  UnicyclicSpec spec;
  spec.g = ct.cycle.girth();
  for (auto& t : ct.trees) spec.trees.push_back(make_rooted_tree(std::move(t), 0));
  return spec;
}

namespace {

RootedTree tree_from_edges(int n, std::vector<std::pair<int, int>> edges) {
  return make_rooted_tree(build_graph(n, std::move(edges)), 0);
}

RootedTree trivial_tree() { return tree_from_edges(1, {}); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

}  // namespace

RootedTree merge_at_root(const std::vector<RootedTree>& parts) {
  std::vector<std::pair<int, int>> edges;
  int base = 1;
  for (const auto& p : parts) {
    auto remap = [&](int local) {
      if (local == p.root) return 0;
      return base + (local < p.root ? local : local - 1);
    };
    for (auto [u, v] : p.tree.edges) edges.emplace_back(remap(u), remap(v));
    base += p.order() - 1;
  }
  return make_rooted_tree(build_graph(base, std::move(edges)), 0);
}

RootedTree broom(int k1, int k2, int i) {
  require(k1 >= 0 && k2 >= 0 && i >= 0, "broom needs k1,k2,i >= 0");
  const int n = k1 + k2 + i + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int j = 0; j < k1; ++j) edges.emplace_back(j == 0 ? 0 : j, j + 1);
  for (int j = 0; j < k2; ++j) edges.emplace_back(j == 0 ? 0 : k1 + j, k1 + j + 1);
  for (int j = 0; j < i; ++j) edges.emplace_back(0, k1 + k2 + 1 + j);
  return tree_from_edges(n, std::move(edges));
}

RootedTree caterpillar(const std::vector<int>& a) {
  require(!a.empty(), "caterpillar needs at least one backbone vertex");
  for (int x : a) require(x >= 0, "caterpillar pendant counts must be >= 0");
  const int l = static_cast<int>(a.size()) - 1;
  int n = l + 1;
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < l; ++j) edges.emplace_back(j, j + 1);
  for (int j = 0; j <= l; ++j)
    for (int p = 0; p < a[j]; ++p) edges.emplace_back(j, n++);
  Graph g = build_graph(n, std::move(edges));
  return make_rooted_tree(std::move(g), l);
}

RootedTree t_ndd(int n, int d) {
  if (!(2 <= d && d <= n - 1))
    throw Error(ErrorKind::BadParams,
                "t_ndd needs 2 <= d <= n-1, got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  return broom(d / 2, d - d / 2, n - d - 1);
}

RootedTree decorated_path(int l2, int b, int i) {
  require(l2 >= 0 && b >= 0, "decorated_path needs l2,b >= 0");
  if (b == 0) i = 0;
  if (b > 0)
    require(1 <= i && i <= l2,
            "decorated_path pendant slot i=" + std::to_string(i) +
                " outside 1..l2=" + std::to_string(l2));
  int n = l2 + 1;
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < l2; ++j) edges.emplace_back(j, j + 1);
  for (int p = 0; p < b; ++p) edges.emplace_back(i, n++);
  Graph g = build_graph(n, std::move(edges));
  return make_rooted_tree(std::move(g), l2);
}

UnicyclicSpec g3_family(int variant, int l1, int l2, int a) {
  require(l1 >= 0 && l2 >= 0 && a >= 0, "g3 family needs l1,l2,a >= 0");
  UnicyclicSpec spec;
  spec.g = 3;
  switch (variant) {
    case 11:
      spec.trees = {broom(l1, 0, a), broom(l2, 0, 0), trivial_tree()};
      break;
    case 12:
      spec.trees = {broom(l1, 0, 0), broom(l2, 0, 0), broom(0, 0, a)};
      break;
    case 21:
      require(a >= 1, "g3 variant 21 needs a >= 1");
      spec.trees = {broom(l1, l2 + 1, a - 1), trivial_tree(), trivial_tree()};
      break;
    case 22:
      require(a >= 1, "g3 variant 22 needs a >= 1");
      spec.trees = {broom(l1, l2 + 1, 0), broom(0, 0, a - 1), trivial_tree()};
      break;
    default:
      throw Error(ErrorKind::BadParams,
                  "g3 variant must be 11, 12, 21 or 22, got " + std::to_string(variant));
  }
  return spec;
}

UnicyclicSpec g4_family(int variant, int k, int l1, int l2, int a, int b, int i) {
  require(variant >= 1 && variant <= 3, "g4 variant must be 1, 2 or 3");
  require(k >= 1 && k <= 4, "g4 pendant slot k must be in 1..4");
  require(l1 >= 0 && a >= 0, "g4 family needs l1,a >= 0");
  UnicyclicSpec spec;
  spec.g = 4;
  spec.trees = {trivial_tree(), trivial_tree(), trivial_tree(), trivial_tree()};

  const RootedTree tstar = decorated_path(l2, b, i);
  std::vector<std::vector<RootedTree>> parts(4);
  if (l1 > 0) parts[0].push_back(broom(l1, 0, 0));
  if (variant == 1)
    parts[0].push_back(tstar);
  else if (variant == 2)
    parts[1].push_back(tstar);
  else
    parts[2].push_back(tstar);
  if (a > 0) parts[k - 1].push_back(broom(0, 0, a));

  for (int s = 0; s < 4; ++s)
    if (!parts[s].empty()) spec.trees[s] = merge_at_root(parts[s]);
  return spec;
}

UnicyclicSpec extremal(int n, int d) {
  if (n <= 15)
    throw Error(ErrorKind::BadParams, "extremal is stated for n > 15, got n=" +
                                          std::to_string(n));
  if (!(3 <= d && d <= n - 2))
    throw Error(ErrorKind::BadParams, "extremal needs 3 <= d <= n-2, got d=" +
                                          std::to_string(d));
  UnicyclicSpec spec;
  if (d == n - 2) {
    spec.g = 3;
    spec.trees = {broom((d - 1) - (d - 1) / 2, 0, 0), broom((d - 1) / 2, 0, 0),
                  trivial_tree()};
  } else if (d == n - 3) {
    spec.g = 3;
    spec.trees = {broom(d / 2, d - d / 2, n - d - 3), trivial_tree(), trivial_tree()};
  } else if (d >= 6) {
    spec.g = 4;
    spec.trees = {broom(d / 2, d - d / 2, n - d - 4), trivial_tree(), trivial_tree(),
                  trivial_tree()};
  } else if (d >= 4) {
    spec.g = 4;
    spec.trees = {broom(d - 2, 0, n - d - 2), trivial_tree(), trivial_tree(),
                  trivial_tree()};
  } else {
    spec.g = 4;
    spec.trees = {broom(0, 0, n - 4), trivial_tree(), trivial_tree(), trivial_tree()};
  }
  return spec;
}

FamilyParams FamilyParams::parse(const std::string& text) {
  std::istringstream is(text);
  FamilyParams p;
  if (!(is >> p.variant))
    throw Error(ErrorKind::ParseError, "empty family spec");
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
      throw Error(ErrorKind::ParseError, "family argument \"" + tok +
                                             "\" is not key=value");
    p.args[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return p;
}

std::string FamilyParams::to_string() const {
  std::string out = variant;
  for (const auto& [k, v] : args) out += " " + k + "=" + v;
  return out;
}

int FamilyParams::arg_int(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end())
    throw Error(ErrorKind::BadParams, "family spec missing argument " + key);
  try {
    std::size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw Error(ErrorKind::ParseError,
                "argument " + key + "=" + it->second + " is not an integer");
  }
}

std::vector<int> FamilyParams::arg_int_list(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end())
    throw Error(ErrorKind::BadParams, "family spec missing argument " + key);
  std::vector<int> out;
  std::string tok;
  std::istringstream is(it->second);
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw Error(ErrorKind::ParseError,
                  "argument " + key + "=" + it->second + " is not an integer list");
    }
  }
  return out;
}

std::optional<UnicyclicSpec> FamilyParams::build_spec() const {
  if (variant == "cycle") {
    const int n = arg_int("n");
    require(n >= 3, "cycle needs n >= 3");
    UnicyclicSpec spec;
    spec.g = n;
    for (int i = 0; i < n; ++i) spec.trees.push_back(trivial_tree());
    return spec;
  }
  if (variant == "g3")
    return g3_family(arg_int("variant"), arg_int("l1"), arg_int("l2"), arg_int("a"));
  if (variant == "g4") {
    const int vk = arg_int("variant");
    return g4_family(vk / 10, vk % 10, arg_int("l1"), arg_int("l2"), arg_int("a"),
                     arg_int("b"), arg_int("i"));
  }
  if (variant == "extremal") return extremal(arg_int("n"), arg_int("d"));
  return std::nullopt;
}

Graph FamilyParams::build() const {
  if (auto spec = build_spec()) return assemble(*spec);
  if (variant == "path") {
    const int n = arg_int("n");
    require(n >= 1, "path needs n >= 1");
    return broom(n - 1, 0, 0).tree;
  }
  if (variant == "star") {
    const int n = arg_int("n");
    require(n >= 1, "star needs n >= 1");
    return broom(0, 0, n - 1).tree;
  }
  if (variant == "broom") return broom(arg_int("k1"), arg_int("k2"), arg_int("i")).tree;
  if (variant == "caterpillar") return caterpillar(arg_int_list("a")).tree;
  if (variant == "t_ndd") return t_ndd(arg_int("n"), arg_int("d")).tree;
  throw Error(ErrorKind::BadParams, "unknown family variant \"" + variant + "\"");
}

}  // namespace szlab
