#include "szlab/graph.hpp"

#include <algorithm>
#include <string>

namespace szlab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Loop: return "Loop";
    case ErrorKind::ParallelEdge: return "ParallelEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NoCycle: return "NoCycle";
    case ErrorKind::NotUnicyclic: return "NotUnicyclic";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EdgeNotFound: return "EdgeNotFound";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n <= 0) throw Error(ErrorKind::BadParams, "graph order must be positive");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::BadParams,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") references a vertex id outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (std::size_t i = 1; i < edge_list.size(); ++i) {
    if (edge_list[i] == edge_list[i - 1])
      throw Error(ErrorKind::ParallelEdge,
                  "duplicate edge (" + std::to_string(edge_list[i].first) + "," +
                      std::to_string(edge_list[i].second) + ")");
  }

  Graph g;
  g.n = n;
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());

  // Connectivity check by BFS from 0.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int w : g.adj[queue[h]]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v])
      throw Error(ErrorKind::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from 0");
  }
  return g;
}

DistanceMatrix distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<std::size_t>(g.n) * g.n, -1);
  dm.row_sum.assign(g.n, 0);
  std::vector<int> queue;
  queue.reserve(g.n);
  for (int s = 0; s < g.n; ++s) {
    int* row = dm.d.data() + static_cast<std::size_t>(s) * g.n;
    queue.clear();
    queue.push_back(s);
    row[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int w : g.adj[u]) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
    std::int64_t sum = 0;
    for (int v = 0; v < g.n; ++v) {
      sum += row[v];
      if (row[v] > dm.diameter) dm.diameter = row[v];
    }
    dm.row_sum[s] = sum;
  }
  return dm;
}

bool CycleInfo::on_cycle(int v) const {
  for (int u : vertices)
    if (u == v) return true;
  return false;
}

CycleInfo unique_cycle(const Graph& g) {
  if (g.m() == g.n - 1) throw Error(ErrorKind::NoCycle, "graph is a tree");
  if (g.m() != g.n)
    throw Error(ErrorKind::NotUnicyclic,
                "connected graph with m=" + std::to_string(g.m()) +
                    " != n=" + std::to_string(g.n));

  // Peel leaves; what survives is exactly the unique cycle.
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = static_cast<int>(g.adj[v].size());
  std::vector<int> stack;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] == 1) stack.push_back(v);
  std::vector<char> removed(g.n, 0);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    removed[v] = 1;
    for (int w : g.adj[v]) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }

  int start = -1;
  for (int v = 0; v < g.n; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }

  CycleInfo ci;
  int prev = -1, cur = start;
  do {
    ci.vertices.push_back(cur);
    int next = -1;
    for (int w : g.adj[cur]) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return ci;
}

std::pair<int, int> cycle_distance_deltas(int g, int j) {
  if (g < 3) throw Error(ErrorKind::BadParams, "cycle length must be >= 3");
  if (j < 2 || j > g - 1)
    throw Error(ErrorKind::IndexOutOfRange,
                "position j=" + std::to_string(j) + " outside 2..g-1");
  auto dc = [g](int a, int b) {
    int diff = a > b ? a - b : b - a;
    return diff < g - diff ? diff : g - diff;
  };
  const int d1 = dc(1, j);
  return {dc(2, j) - d1 + 1, dc(g, j) - d1 + 1};
}

}  // namespace szlab
