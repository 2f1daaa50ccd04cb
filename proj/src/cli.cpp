#include "szlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "szlab/canonical.hpp"
#include "szlab/enumerate.hpp"
#include "szlab/error.hpp"
#include "szlab/graph6.hpp"
#include "szlab/reports.hpp"
#include "szlab/transforms.hpp"

namespace szlab {
namespace {

struct Sink {
  Format format = Format::Text;
  std::string path;  // empty: the out string

  void deliver(const std::string& bytes, std::string& out) const {
    if (path.empty()) {
      out += bytes;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
    f << bytes;
    if (!f) throw Error(ErrorKind::IoError, "short write to " + path);
  }
};

// At most one of graph6 / edge-list file / family spec (CLI-level excludes);
// whether one is required at all depends on the subcommand.
struct InputSource {
  std::string graph6;
  std::string edges_path;
  std::string family;

  bool present() const {
    return !graph6.empty() || !edges_path.empty() || !family.empty();
  }

  Graph load() const {
    if (!present())
      throw Error(ErrorKind::BadParams,
                  "need an input graph: --graph6 / --edges / --family");
    if (!graph6.empty()) return from_graph6(graph6);
    if (!edges_path.empty()) {
      std::ifstream f(edges_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::IoError, "cannot read " + edges_path);
      std::ostringstream buf;
      buf << f.rdbuf();
      return from_edge_list(buf.str());
    }
    return FamilyParams::parse(family).build();
  }

  // The C_g(T_1..T_g) form; family specs that already carry one keep it.
  UnicyclicSpec load_spec() const {
    if (!family.empty()) {
      if (auto s = FamilyParams::parse(family).build_spec()) return *s;
    }
    return spec_of_graph(load());
  }

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph6", graph6, "graph6 string");
    auto* e = cmd->add_option("--edges", edges_path,
                              "edge-list file (\"n m\" then m lines \"u v\")");
    auto* f = cmd->add_option("--family", family,
                              "family spec, e.g. \"extremal n=16 d=14\"");
    g->excludes(e)->excludes(f);
    e->excludes(f);
  }
};

std::map<std::string, int> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, int> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= kv.size())
      throw Error(ErrorKind::BadParams, "--param " + kv + " is not key=value");
    try {
      std::size_t pos = 0;
      int v = std::stoi(kv.substr(eq + 1), &pos);
      if (pos != kv.size() - eq - 1) throw std::invalid_argument("");
      out[kv.substr(0, eq)] = v;
    } catch (...) {
      throw Error(ErrorKind::ParseError,
                  "--param " + kv + " value is not an integer");
    }
  }
  return out;
}

// ----------------------------------------------------------- subcommand state

struct Options {
  std::string format_name = "text";
  Sink sink;
  int limit_n = 20;
  bool allow_large = false;
  int workers = 0;
  std::uint64_t seed = 20250819;

  InputSource input;  // index / transform / identities

  std::string family_spec;

  std::string rewrite_name;
  std::string pair_name;
  std::vector<std::string> params;
  std::string kind_name;
  int random_draws = 0;

  int n = 0;
  int d = 0;
  bool theorem1 = false;
  bool identity_suites = false;
  int max_n = 10;
  std::string checkpoint;

  void guard_size(int order) const {
    if (order > limit_n && !allow_large)
      throw Error(ErrorKind::TooLarge,
                  "refusing enumeration at n = " + std::to_string(order) +
                      " (limit " + std::to_string(limit_n) +
                      "); pass --allow-large to override");
  }
};

int cmd_index(const Options& o, std::string& out) {
  const Graph g = o.input.load();
  o.sink.deliver(render(index_suite(g), parse_format(o.format_name)), out);
  return 0;
}

int cmd_family(const Options& o, std::string& out) {
  FamilyParams fp = FamilyParams::parse(o.family_spec);
  const Graph g = fp.build();
  const DistanceMatrix dm = distances(g);
  std::optional<int> girth;
  if (g.m() == g.n) girth = unique_cycle(g).girth();
  const Format f = parse_format(o.format_name);
  std::string bytes;
  switch (f) {
    case Format::Json: {
      Json j{{"family", fp.to_string()},
             {"graph6", to_graph6(g)},
             {"order", g.n},
             {"diameter", dm.diameter}};
      j["girth"] = girth ? Json(*girth) : Json();
      bytes = j.dump(2) + "\n";
      break;
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "family,graph6,order,diameter,girth\n"
         << '"' << fp.to_string() << "\"," << to_graph6(g) << ',' << g.n << ','
         << dm.diameter << ',' << (girth ? std::to_string(*girth) : "") << "\n";
      bytes = os.str();
      break;
    }
    case Format::Text: {
      std::ostringstream os;
      os << to_graph6(g) << "\n"
         << "order=" << g.n << " diameter=" << dm.diameter;
      if (girth) os << " girth=" << *girth;
      os << "\n";
      bytes = os.str();
      break;
    }
  }
  o.sink.deliver(bytes, out);
  return 0;
}

int cmd_transform(const Options& o, std::string& out) {
  const Format f = parse_format(o.format_name);
  if (o.rewrite_name.empty() == o.pair_name.empty())
    throw Error(ErrorKind::BadParams,
                "exactly one of --rewrite/--pair is required");
  const std::string name = o.rewrite_name.empty() ? o.pair_name : o.rewrite_name;

  std::vector<TransformReport> reports;
  if (o.random_draws > 0) {
    std::mt19937_64 rng(o.seed);
    reports.reserve(static_cast<std::size_t>(o.random_draws));
    for (int i = 0; i < o.random_draws; ++i) {
      if (!o.kind_name.empty())
        reports.push_back(random_check(name, parse_index_kind(o.kind_name), rng));
      else
        reports.push_back(random_check(name, rng));
    }
  } else if (!o.rewrite_name.empty()) {
    Rewrite r{o.rewrite_name, parse_params(o.params)};
    const UnicyclicSpec spec = o.input.load_spec();
    if (!o.kind_name.empty())
      reports.push_back(check(spec, r, parse_index_kind(o.kind_name)));
    else
      reports.push_back(check(spec, r));
  } else {
    reports.push_back(check_pair({o.pair_name, parse_params(o.params)}));
  }

  o.sink.deliver(reports.size() == 1 ? render(reports[0], f)
                                     : render_batch(reports, f),
                 out);
  return std::all_of(reports.begin(), reports.end(),
                     [](const TransformReport& r) { return r.agrees; })
             ? 0
             : 1;
}

int cmd_search(const Options& o, std::string& out) {
  o.guard_size(o.n);
  SearchOptions so;
  so.workers = o.workers;
  so.checkpoint_path = o.checkpoint;
  const IndexKind kind =
      o.kind_name.empty() ? IndexKind::Sz_e_star : parse_index_kind(o.kind_name);
  SearchReport r = minimize_index(o.n, o.d, kind, so);
  o.sink.deliver(render(r, parse_format(o.format_name)), out);
  return 0;
}

// Redundant-evaluation suites: every unicyclic graph up to max_n through the
// decomposition routes plus the square-sum closed form, every tree up to
// max_n through the Wiener-type identities, and the piecewise cycle-distance
// table against plain BFS. Any graph where two routes differ is a failure and
// its graph6 lands in the report.
int cmd_verify_identities(const Options& o, std::string& out) {
  o.guard_size(o.max_n);
  const Format f = parse_format(o.format_name);
  std::uint64_t unicyclic_checked = 0, trees_checked = 0;
  std::vector<std::string> failures;

  for (int n = 3; n <= o.max_n; ++n) {
    unicyclic_graphs(n, std::nullopt, std::nullopt,
                     [&](const UnicyclicSpec& spec, const Graph& g) {
                       ++unicyclic_checked;
                       const DecompositionReport r = decompose_unicyclic(spec);
                       const IndexSuite s = index_suite(g);
                       const bool closed_ok =
                           sz_e_star_closed_form(g) == s.Sz_e_star;
                       // Edge-Szeged strictly dominates edge-Wiener once a
                       // cycle is present.
                       const bool dominance_ok = s.Sz_e > s.W_e_min;
                       if (!r.all_agree || !closed_ok || !dominance_ok)
                         failures.push_back(to_graph6(g));
                     });
  }
  for (int n = 1; n <= o.max_n; ++n) {
    std::set<std::string> seen;  // rooted classes collapse to free trees
    for (const RootedTree& t : rooted_trees(n)) {
      if (!seen.insert(tree_code(t.tree)).second) continue;
      ++trees_checked;
      const IndexSuite s = index_suite(t.tree);
      const bool wiener_ok =
          s.W_e_line == s.W - static_cast<std::int64_t>(n) * (n - 1) / 2;
      const bool edge_szeged_ok = s.Sz_e == s.W_e_min;
      const bool closed_ok = sz_e_star_closed_form(t.tree) == s.Sz_e_star;
      if (!wiener_ok || !edge_szeged_ok || !closed_ok)
        failures.push_back(to_graph6(t.tree));
    }
  }
  // Piecewise cycle-distance table against BFS on an actual cycle.
  bool table_ok = true;
  for (int g = 3; g <= std::max(6, 2 * o.max_n); ++g) {
    std::vector<std::pair<int, int>> ring;
    for (int i = 0; i < g; ++i) ring.emplace_back(i, (i + 1) % g);
    const DistanceMatrix dm = distances(build_graph(g, ring));
    for (int j = 2; j <= g - 1; ++j) {
      // positions are 1-indexed in the table; vertex i sits at position i+1
      auto [x, y] = cycle_distance_deltas(g, j);
      if (x != dm.at(1, j - 1) - dm.at(0, j - 1) + 1 ||
          y != dm.at(g - 1, j - 1) - dm.at(0, j - 1) + 1)
        table_ok = false;
    }
  }

  const bool pass = failures.empty() && table_ok;
  std::string bytes;
  if (f == Format::Json) {
    Json j{{"max_n", o.max_n},
           {"unicyclic_checked", unicyclic_checked},
           {"trees_checked", trees_checked},
           {"cycle_table_ok", table_ok},
           {"failures", failures},
           {"pass", pass}};
    bytes = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "identity suites up to n = " << o.max_n << "\n"
       << "unicyclic graphs checked  " << unicyclic_checked << "\n"
       << "trees checked             " << trees_checked << "\n"
       << "cycle-distance table      " << (table_ok ? "ok" : "MISMATCH")
       << "\n";
    for (const auto& g6 : failures) os << "FAIL " << g6 << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    bytes = os.str();
  }
  o.sink.deliver(bytes, out);
  return pass ? 0 : 1;
}

int cmd_verify(const Options& o, std::string& out) {
  if (o.theorem1 == o.identity_suites)
    throw Error(ErrorKind::BadParams,
                "exactly one of --theorem1/--identities is required");
  if (o.identity_suites) return cmd_verify_identities(o, out);
  o.guard_size(o.n);
  VerificationReport r = verify_theorem1(o.n, o.workers);
  o.sink.deliver(render(r, parse_format(o.format_name)), out);
  return r.pass ? 0 : 1;
}

int cmd_identities(const Options& o, std::string& out) {
  const Format f = parse_format(o.format_name);
  if (o.n > 0 && o.input.present())
    throw Error(ErrorKind::BadParams,
                "--n batches a whole order; drop the input graph");
  if (o.n > 0) {
    o.guard_size(o.n);
    std::vector<DecompositionReport> batch;
    unicyclic_graphs(o.n, std::nullopt, std::nullopt,
                     [&](const UnicyclicSpec& spec, const Graph&) {
                       batch.push_back(decompose_unicyclic(spec));
                     });
    o.sink.deliver(render_batch(batch, f), out);
    return std::all_of(batch.begin(), batch.end(),
                       [](const DecompositionReport& r) { return r.all_agree; })
               ? 0
               : 1;
  }
  DecompositionReport r = decompose_unicyclic(o.input.load_spec());
  o.sink.deliver(render(r, f), out);
  return r.all_agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out,
            std::string& err) {
  CLI::App app{"exact unicyclic graph index laboratory"};
  app.fallthrough();  // global flags may appear after the subcommand
  app.require_subcommand(1);
  Options o;

  app.add_option("--format", o.format_name, "json | csv | text")
      ->capture_default_str();
  app.add_option("--out", o.sink.path, "write the report to this file");
  app.add_option("--limit-n", o.limit_n, "enumeration size guard")
      ->capture_default_str();
  app.add_flag("--allow-large", o.allow_large, "override the size guard");
  app.add_option("--workers", o.workers,
                 "worker threads (0: SZLAB_WORKERS env var, else hardware)");
  app.add_option("--seed", o.seed, "seed for randomized batches")
      ->capture_default_str();

  auto* c_index = app.add_subcommand("index", "all indices of one graph");
  o.input.attach(c_index);

  auto* c_family =
      app.add_subcommand("family", "build a named family graph, print graph6");
  c_family->add_option("spec", o.family_spec, "e.g. \"extremal n=16 d=14\"")
      ->required();

  auto* c_transform = app.add_subcommand(
      "transform", "apply a rewrite or pair check; compare prediction");
  o.input.attach(c_transform);
  c_transform->add_option("--rewrite", o.rewrite_name, "rewrite name");
  c_transform->add_option("--pair", o.pair_name, "pair check name");
  c_transform->add_option("--param", o.params, "rewrite argument key=value")
      ->take_all();
  c_transform->add_option("--kind", o.kind_name, "index kind");
  c_transform->add_option("--random", o.random_draws,
                          "run this many seeded random in-domain draws");

  auto* c_search = app.add_subcommand("search", "exact minimum over one (n,d)");
  c_search->add_option("--n", o.n, "order")->required();
  c_search->add_option("--d", o.d, "diameter")->required();
  c_search->add_option("--kind", o.kind_name, "index kind (default Sz_e_star)");
  c_search->add_option("--checkpoint", o.checkpoint,
                       "JSON-lines checkpoint path");

  auto* c_verify = app.add_subcommand(
      "verify", "per-diameter minimizer table or identity suites");
  c_verify->add_flag("--theorem1", o.theorem1,
                     "compare per-d minimizers against the extremal table");
  c_verify->add_option("--n", o.n, "order for --theorem1");
  c_verify->add_flag("--identities", o.identity_suites,
                     "redundant-evaluation suites over a size range");
  c_verify->add_option("--max-n", o.max_n, "identity sweep bound")
      ->capture_default_str();

  auto* c_identities = app.add_subcommand(
      "identities", "decomposition report for one graph or a whole order");
  o.input.attach(c_identities);
  c_identities->add_option("--n", o.n,
                           "batch over every unicyclic graph of this order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    int code = app.exit(e, os, es);
    out += os.str();
    err += es.str();
    return code;
  }

  try {
    if (c_index->parsed()) return cmd_index(o, out);
    if (c_family->parsed()) return cmd_family(o, out);
    if (c_transform->parsed()) return cmd_transform(o, out);
    if (c_search->parsed()) return cmd_search(o, out);
    if (c_verify->parsed()) return cmd_verify(o, out);
    if (c_identities->parsed()) return cmd_identities(o, out);
    err += "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    Format f = Format::Text;
    try {
      f = parse_format(o.format_name);
    } catch (...) {
    }
    out += render_error(e, f);
    return 1;
  } catch (const std::exception& e) {
    err += std::string("error: ") + e.what() + "\n";
    return 1;
  }
}

}  // namespace szlab
