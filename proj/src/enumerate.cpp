#include "szlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "szlab/graph6.hpp"

namespace szlab {

TreePool::TreePool(int max_size) : max_size_(max_size) {
  if (max_size < 1)
    throw Error(ErrorKind::BadParams, "tree pool needs max_size >= 1");
  first_.assign(max_size + 2, 0);

  TreeClass leaf;
  leaf.size = 1;
  leaf.code = std::string(1, '\x01');
  leaf.parent.assign(1, 0);
  classes_.push_back(std::move(leaf));
  first_[1] = 0;
  first_[2] = 1;

  for (int k = 2; k <= max_size; ++k) {
    std::vector<TreeClass> batch;
    std::vector<int> chosen;

    auto make_class = [&]() {
      std::vector<int> kids(chosen);
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return classes_[a].code > classes_[b].code;
      });
      TreeClass c;
      c.size = k;
      c.code = std::string(1, '\x01');
      c.parent.assign(k, 0);
      int off = 1, best1 = 0, best2 = 0;
      for (int id : kids) {
        const TreeClass& ch = classes_[id];
        for (char b : ch.code) c.code.push_back(static_cast<char>(b + 1));
        c.parent[off] = 0;
        for (int t = 1; t < ch.size; ++t)
          c.parent[off + t] = static_cast<std::uint8_t>(off + ch.parent[t]);
        c.root_trans += ch.root_trans + ch.size;
        c.height = std::max(c.height, ch.height + 1);
        c.diam = std::max(c.diam, ch.diam);
        const int reach = ch.height + 1;
        if (reach > best1) {
          best2 = best1;
          best1 = reach;
        } else if (reach > best2) {
          best2 = reach;
        }
        off += ch.size;
      }
      c.diam = std::max(c.diam, best1 + best2);
      batch.push_back(std::move(c));
    };

    // Children as a multiset: ids non-increasing, sizes summing to k-1.
    // Classes of size <= r are exactly the ids below first_[r+1].
    std::function<void(int, int)> rec = [&](int remaining, int max_id) {
      if (remaining == 0) {
        make_class();
        return;
      }
      for (int id = std::min(max_id, first_[remaining + 1] - 1); id >= 0; --id) {
        chosen.push_back(id);
        rec(remaining - classes_[id].size, id);
        chosen.pop_back();
      }
    };
    rec(k - 1, static_cast<int>(classes_.size()) - 1);

    std::sort(batch.begin(), batch.end(),
              [](const TreeClass& a, const TreeClass& b) { return a.code < b.code; });
    for (auto& c : batch) classes_.push_back(std::move(c));
    first_[k + 1] = static_cast<int>(classes_.size());
  }
}

RootedTree TreePool::materialize(int id) const {
  if (id < 0 || id >= total())
    throw Error(ErrorKind::IndexOutOfRange, "tree class " + std::to_string(id));
  const TreeClass& c = classes_[id];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(c.size - 1);
  for (int t = 1; t < c.size; ++t) edges.emplace_back(c.parent[t], t);
  return make_rooted_tree(build_graph(c.size, std::move(edges)), 0);
}

std::vector<RootedTree> rooted_trees(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "rooted_trees needs n >= 1");
  TreePool pool(n);
  std::vector<RootedTree> out;
  out.reserve(pool.count(n));
  for (int id = pool.first(n); id < pool.first(n) + pool.count(n); ++id)
    out.push_back(pool.materialize(id));
  return out;
}

namespace {

int cycle_dist(int g, int a, int b) {
  int diff = a > b ? a - b : b - a;
  return diff < g - diff ? diff : g - diff;
}

// Is w the lexicographically smallest word over its rotations and
// reflections? Class ids are ordered by (size, code), matching the slot-key
// order used by unicyclic_code.
bool is_minimal_dihedral(const std::vector<int>& w) {
  const int g = static_cast<int>(w.size());
  for (int start = 0; start < g; ++start) {
    for (int step : {1, -1}) {
      if (start == 0 && step == 1) continue;
      for (int t = 0; t < g; ++t) {
        const int other = w[((start + step * t) % g + g) % g];
        if (other < w[t]) return false;
        if (other > w[t]) break;
      }
    }
  }
  return true;
}

struct Block {
  int g = 0;
  int lo = 0, hi = 0;  // composition index range within this girth
};

struct EnumPlan {
  int n = 0;
  std::optional<int> d, girth;
  int g_lo = 3, g_hi = 3;
  // comps[g - g_lo]: ordered size compositions (parts >= 1, sum n) with the
  // first part minimal (a necklace-minimal tuple must start at a minimal
  // slot, so other compositions cannot yield an emission).
  std::vector<std::vector<std::vector<int>>> comps;
  std::vector<Block> blocks;
};

EnumPlan make_plan(int n, std::optional<int> d, std::optional<int> girth) {
  if (n < 3) throw Error(ErrorKind::BadParams, "unicyclic graphs need n >= 3");
  if (d && *d < 1) throw Error(ErrorKind::BadParams, "diameter must be >= 1");
  if (girth && (*girth < 3 || *girth > n))
    throw Error(ErrorKind::BadParams, "girth outside 3..n");

  EnumPlan plan;
  plan.n = n;
  plan.d = d;
  plan.girth = girth;
  plan.g_lo = girth ? *girth : 3;
  plan.g_hi = girth ? *girth : n;
  // Antipodal cycle vertices force diameter >= floor(g/2).
  if (d) plan.g_hi = std::min(plan.g_hi, 2 * (*d) + 1);
  if (plan.g_hi < plan.g_lo) {
    plan.g_hi = plan.g_lo - 1;  // empty plan
    return plan;
  }

  plan.comps.resize(plan.g_hi - plan.g_lo + 1);
  for (int g = plan.g_lo; g <= plan.g_hi; ++g) {
    auto& list = plan.comps[g - plan.g_lo];
    std::vector<int> cur(g);
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == g - 1) {
        cur[slot] = left;
        int mn = n;
        for (int x : cur) mn = std::min(mn, x);
        if (cur[0] == mn) list.push_back(cur);
        return;
      }
      for (int s = 1; s <= left - (g - 1 - slot); ++s) {
        cur[slot] = s;
        rec(slot + 1, left - s);
      }
    };
    rec(0, n);

    const int total = static_cast<int>(list.size());
    const int chunk = std::max(1, (total + 23) / 24);
    for (int lo = 0; lo < total; lo += chunk)
      plan.blocks.push_back({g, lo, std::min(lo + chunk, total)});
  }
  return plan;
}

// Runs one block, invoking emit(chosen ids, diameter, graph) for every
// necklace-canonical class tuple that passes the filters.
template <typename EmitFn>
void run_block(const TreePool& pool, const EnumPlan& plan, const Block& b,
               EmitFn&& emit) {
  const int g = b.g;
  const auto& comp_list = plan.comps[g - plan.g_lo];
  std::vector<int> chosen(g);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> offset(g + 1);

  for (int ci = b.lo; ci < b.hi; ++ci) {
    const std::vector<int>& parts = comp_list[ci];
    const int hcap = plan.d ? *plan.d - g / 2 : std::numeric_limits<int>::max();

    std::function<void(int)> rec = [&](int slot) {
      if (slot == g) {
        if (!is_minimal_dihedral(chosen)) return;

        int diam = 0;
        for (int i = 0; i < g; ++i) {
          const TreeClass& ti = pool.cls(chosen[i]);
          diam = std::max(diam, ti.diam);
          for (int j = i + 1; j < g; ++j)
            diam = std::max(diam, ti.height + pool.cls(chosen[j]).height +
                                      cycle_dist(g, i, j));
        }
        if (plan.d && diam != *plan.d) return;

        offset[0] = 0;
        for (int i = 0; i < g; ++i)
          offset[i + 1] = offset[i] + pool.cls(chosen[i]).size;
        edges.clear();
        for (int i = 0; i < g; ++i)
          edges.emplace_back(offset[i], offset[(i + 1) % g]);
        for (int i = 0; i < g; ++i) {
          const TreeClass& c = pool.cls(chosen[i]);
          for (int t = 1; t < c.size; ++t)
            edges.emplace_back(offset[i] + c.parent[t], offset[i] + t);
        }
        Graph graph = build_graph(plan.n, edges);
        emit(chosen, diam, graph);
        return;
      }
      const int size = parts[slot];
      const int id_lo = pool.first(size), id_hi = id_lo + pool.count(size);
      for (int id = id_lo; id < id_hi; ++id) {
        if (slot > 0 && size == parts[0] && id < chosen[0]) continue;
        if (plan.d) {
          const TreeClass& c = pool.cls(id);
          if (c.height > hcap || c.diam > *plan.d) continue;
          bool ok = true;
          for (int j = 0; j < slot && ok; ++j) {
            if (pool.cls(chosen[j]).height + c.height + cycle_dist(g, j, slot) >
                *plan.d)
              ok = false;
          }
          if (!ok) continue;
        }
        chosen[slot] = id;
        rec(slot + 1);
      }
    };
    rec(0);
  }
}

std::string necklace_code(const TreePool& pool, int g,
                          const std::vector<int>& chosen) {
  std::string out("U");
  out.push_back(static_cast<char>(g));
  for (int id : chosen) {
    out += pool.cls(id).code;
    out.push_back('\0');
  }
  return out;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SZLAB_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string hex_of(const std::string& bytes) { return CanonicalCode{bytes}.hex(); }

}  // namespace

void unicyclic_graphs(
    int n, std::optional<int> d, std::optional<int> girth,
    const std::function<void(const UnicyclicSpec&, const Graph&)>& fn) {
  const EnumPlan plan = make_plan(n, d, girth);
  if (plan.g_hi < plan.g_lo) return;
  const TreePool pool(n - plan.g_lo + 1);
  for (const Block& b : plan.blocks) {
    run_block(pool, plan, b,
              [&](const std::vector<int>& chosen, int, const Graph& graph) {
                UnicyclicSpec spec;
                spec.g = b.g;
                for (int id : chosen) spec.trees.push_back(pool.materialize(id));
                fn(spec, graph);
              });
  }
}

std::uint64_t count_unicyclic(int n, std::optional<int> d,
                              std::optional<int> girth) {
  std::uint64_t count = 0;
  const EnumPlan plan = make_plan(n, d, girth);
  if (plan.g_hi < plan.g_lo) return 0;
  const TreePool pool(n - plan.g_lo + 1);
  for (const Block& b : plan.blocks)
    run_block(pool, plan, b,
              [&](const std::vector<int>&, int, const Graph&) { ++count; });
  return count;
}

namespace {

struct MinCell {
  std::int64_t min_q = std::numeric_limits<std::int64_t>::max();
  std::vector<std::pair<std::string, std::string>> mins;  // (code, graph6)

  void offer(std::int64_t q, const std::string& code, const std::string& g6) {
    if (q < min_q) {
      min_q = q;
      mins.clear();
    }
    if (q == min_q) mins.emplace_back(code, g6);
  }
  void merge(const MinCell& o) {
    if (o.min_q < min_q) {
      min_q = o.min_q;
      mins = o.mins;
    } else if (o.min_q == min_q &&
               min_q != std::numeric_limits<std::int64_t>::max()) {
      mins.insert(mins.end(), o.mins.begin(), o.mins.end());
    }
  }
};

std::vector<Minimizer> finish_minimizers(
    std::vector<std::pair<std::string, std::string>> mins) {
  std::sort(mins.begin(), mins.end());
  mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
  std::vector<Minimizer> out;
  out.reserve(mins.size());
  for (auto& [code, g6] : mins) out.push_back({hex_of(code), g6});
  return out;
}

}  // namespace

SearchReport minimize_index(int n, int d, IndexKind kind,
                            const SearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const EnumPlan plan = make_plan(n, d, std::nullopt);
  const int nblocks = static_cast<int>(plan.blocks.size());

  struct BlockResult {
    bool done = false;
    std::uint64_t count = 0;
    MinCell cell;
  };
  std::vector<BlockResult> results(nblocks);

  // Resume: one line per finished block keyed by block_id.
  std::ofstream ckpt_out;
  std::mutex ckpt_mu;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded())
        throw Error(ErrorKind::ParseError, "bad checkpoint line: " + line);
      if (j.value("n", -1) != n || j.value("d", -1) != d)
        throw Error(ErrorKind::InvalidSpec,
                    "checkpoint belongs to a different search (n=" +
                        std::to_string(j.value("n", -1)) + ", d=" +
                        std::to_string(j.value("d", -1)) + ")");
      const int id = j.value("block_id", -1);
      if (id < 0 || id >= nblocks)
        throw Error(ErrorKind::InvalidSpec,
                    "checkpoint block_id " + std::to_string(id) + " out of range");
      BlockResult& r = results[id];
      r.done = true;
      r.count = j.value("count", std::uint64_t{0});
      if (!j["min_quarters"].is_null()) {
        r.cell.min_q = j["min_quarters"].get<std::int64_t>();
        for (const auto& s : j["minimizer_graph6"]) {
          const Graph graph = from_graph6(s.get<std::string>());
          r.cell.mins.emplace_back(unicyclic_code(graph), s.get<std::string>());
        }
      }
    }
    ckpt_out.open(opts.checkpoint_path, std::ios::app);
    if (!ckpt_out)
      throw Error(ErrorKind::IoError, "cannot open " + opts.checkpoint_path);
  }

  const TreePool pool(std::max(1, n - plan.g_lo + 1));
  std::atomic<int> next{0};
  const int workers = std::min(resolve_workers(opts.workers), std::max(1, nblocks));

  auto work = [&]() {
    for (;;) {
      const int bi = next.fetch_add(1);
      if (bi >= nblocks) return;
      BlockResult& r = results[bi];
      if (r.done) continue;
      run_block(pool, plan, plan.blocks[bi],
                [&](const std::vector<int>& chosen, int, const Graph& graph) {
                  ++r.count;
                  const IndexSuite s = index_suite(graph, distances(graph));
                  const std::int64_t q = index_value(s, kind).quarters();
                  if (q <= r.cell.min_q)
                    r.cell.offer(q, necklace_code(pool, plan.blocks[bi].g, chosen),
                                 to_graph6(graph));
                });
      r.done = true;
      if (ckpt_out.is_open()) {
        nlohmann::json j;
        j["n"] = n;
        j["d"] = d;
        j["g"] = plan.blocks[bi].g;
        j["block_id"] = bi;
        if (r.cell.min_q == std::numeric_limits<std::int64_t>::max()) {
          j["min_quarters"] = nullptr;
          j["minimizer_graph6"] = nlohmann::json::array();
        } else {
          j["min_quarters"] = r.cell.min_q;
          auto arr = nlohmann::json::array();
          for (const auto& [code, g6] : r.cell.mins) arr.push_back(g6);
          j["minimizer_graph6"] = arr;
        }
        j["count"] = r.count;
        std::lock_guard<std::mutex> lk(ckpt_mu);
        ckpt_out << j.dump() << "\n" << std::flush;
      }
    }
  };

  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  SearchReport rep;
  rep.n = n;
  rep.d = d;
  rep.kind = kind;
  MinCell all;
  for (const BlockResult& r : results) {
    rep.examined += r.count;
    all.merge(r.cell);
  }
  if (all.min_q == std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::EmptyClass,
                "no unicyclic graph has n=" + std::to_string(n) +
                    ", d=" + std::to_string(d));
  rep.minimum = Q4::from_quarters(all.min_q);
  rep.minimizers = finish_minimizers(std::move(all.mins));
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport verify_theorem1(int n, int workers) {
  if (n < 16)
    throw Error(ErrorKind::BadParams,
                "the characterization is asserted for n >= 16, got n=" +
                    std::to_string(n));
  const auto t0 = std::chrono::steady_clock::now();
  const EnumPlan plan = make_plan(n, std::nullopt, std::nullopt);
  const int nblocks = static_cast<int>(plan.blocks.size());

  struct DGKey {
    int d, girth;
    bool operator<(const DGKey& o) const {
      return d != o.d ? d < o.d : girth < o.girth;
    }
  };
  struct Cell {
    std::uint64_t count = 0;
    MinCell min;
  };
  std::vector<std::map<DGKey, Cell>> results(nblocks);

  const TreePool pool(n - 2);
  std::atomic<int> next{0};
  const int nworkers = std::min(resolve_workers(workers), std::max(1, nblocks));

  auto work = [&]() {
    for (;;) {
      const int bi = next.fetch_add(1);
      if (bi >= nblocks) return;
      auto& cells = results[bi];
      const int g = plan.blocks[bi].g;
      run_block(pool, plan, plan.blocks[bi],
                [&](const std::vector<int>& chosen, int diam, const Graph& graph) {
                  const IndexSuite s = index_suite(graph, distances(graph));
                  Cell& cell = cells[{diam, g}];
                  ++cell.count;
                  const std::int64_t q = s.Sz_e_star.quarters();
                  if (q <= cell.min.min_q)
                    cell.min.offer(q, necklace_code(pool, g, chosen),
                                   to_graph6(graph));
                });
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < nworkers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  std::map<DGKey, Cell> merged;
  VerificationReport rep;
  rep.n = n;
  for (const auto& cells : results) {
    for (const auto& [key, cell] : cells) {
      Cell& m = merged[key];
      m.count += cell.count;
      rep.classes_examined += cell.count;
      m.min.merge(cell.min);
    }
  }

  bool all_matched = true, all_unique = true;
  rep.girth_bound_ok = true;
  for (int d = 3; d <= n - 2; ++d) {
    VerificationRow row;
    row.d = d;

    MinCell global;
    for (const auto& [key, cell] : merged) {
      if (key.d != d) continue;
      row.classes += cell.count;
      global.merge(cell.min);
    }

    const bool empty = global.min_q == std::numeric_limits<std::int64_t>::max();
    if (!empty) {
      row.minimum = Q4::from_quarters(global.min_q);
      row.minimizers = finish_minimizers(std::move(global.mins));
    }
    for (const auto& m : row.minimizers) {
      const int girth = unique_cycle(from_graph6(m.graph6)).girth();
      row.minimizer_girths.push_back(girth);
      ++rep.girth_histogram[girth];
      if (girth != 3 && girth != 4) rep.girth_bound_ok = false;
    }

    const Graph predicted = assemble(extremal(n, d));
    row.predicted_graph6 = to_graph6(predicted);
    const std::string pred_code = hex_of(unicyclic_code(predicted));
    row.matched = false;
    for (const auto& m : row.minimizers)
      if (m.code_hex == pred_code) row.matched = true;
    row.unique = row.minimizers.size() == 1;
    all_matched = all_matched && row.matched;
    all_unique = all_unique && row.unique;
    rep.rows.push_back(std::move(row));
  }

  // Girth-4 co-minimal family at d = n-2: exactly the graphs with two bare
  // paths at opposite square corners, one per split of the n-4 path edges.
  {
    MinCell g4min;
    const auto it = merged.find({n - 2, 4});
    if (it != merged.end()) g4min.merge(it->second.min);
    std::vector<std::string> found;
    if (g4min.min_q != std::numeric_limits<std::int64_t>::max())
      for (auto& [code, g6] : g4min.mins) found.push_back(code);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<std::string> expect;
    for (int r1 = 0; 2 * r1 <= n - 4; ++r1) {
      const Graph graph = assemble(g4_family(3, 2, r1, n - 4 - r1, 0, 0, 0));
      expect.push_back(unicyclic_code(graph));
      rep.co_minimal_family_graph6.push_back(to_graph6(graph));
    }
    std::sort(expect.begin(), expect.end());
    rep.co_minimal_family_ok = found == expect;
  }

  rep.pass = all_matched && all_unique && rep.girth_bound_ok &&
             rep.co_minimal_family_ok;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace szlab
