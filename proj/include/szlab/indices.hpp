#pragma once

#include <cstdint>

#include "szlab/families.hpp"
#include "szlab/graph.hpp"
#include "szlab/q4.hpp"

namespace szlab {

// Vertex split of an edge uv: vertices strictly closer to u / to v / tied.
struct VertexPartition {
  int n_u = 0, n_v = 0, n_0 = 0;
};

// Edge split of an edge uv by min-over-endpoints edge-to-vertex distance.
// The edge itself is tied (distance 0 to both ends), so m_0 >= 1 always and
// m_u + m_v + m_0 == m.
struct EdgePartition {
  int m_u = 0, m_v = 0, m_0 = 0;
};

VertexPartition vertex_partition(const Graph& g, const DistanceMatrix& dm, int u,
                                 int v);
EdgePartition edge_partition(const Graph& g, const DistanceMatrix& dm, int u, int v);

// The full suite of distance indices, all exact.
//   W        sum of vertex distances
//   W_e_min  edge-Wiener, min-over-endpoints convention
//   W_e_line edge-Wiener, line-graph convention (= W_e_min + C(m,2))
//   Sz       sum over edges of n_u * n_v
//   Sz_star  sum over edges of (n_u + n_0/2)(n_v + n_0/2)
//   Sz_e     sum over edges of m_u * m_v
//   Sz_e_star sum over edges of (m_u + m_0/2)(m_v + m_0/2)
struct IndexSuite {
  std::int64_t W = 0;
  std::int64_t W_e_min = 0;
  std::int64_t W_e_line = 0;
  Q4 Sz;
  Q4 Sz_star;
  std::int64_t Sz_e = 0;
  Q4 Sz_e_star;
};

IndexSuite index_suite(const Graph& g, const DistanceMatrix& dm);
IndexSuite index_suite(const Graph& g);

// Sz_e_star == m^3/4 - (1/4) * sum over edges of (m_u - m_v)^2, valid for any
// connected graph because every edge partition sums to m.
Q4 sz_e_star_closed_form(const Graph& g, const DistanceMatrix& dm);
Q4 sz_e_star_closed_form(const Graph& g);

enum class IndexKind { W, W_e_min, W_e_line, Sz, Sz_star, Sz_e, Sz_e_star };
const char* index_kind_name(IndexKind k);
IndexKind parse_index_kind(const std::string& name);
Q4 index_value(const IndexSuite& s, IndexKind k);

// Redundant evaluation of Sz_e and Sz_e_star along independent routes for a
// unicyclic graph given as C_g(T_1..T_g); all routes must agree exactly.
struct DecompositionReport {
  int n = 0;
  int g = 0;
  int delta_g = 0;  // 1 for odd girth
  Q4 direct;        // Sz_e_star straight from edge partitions
  Q4 via_lemma21;   // from Sz_e plus the odd/even correction
  Q4 via_cor23;     // from Sz plus root transmissions
  Q4 via_s1s2;      // S1+S2 fed through the same correction
  std::int64_t sz_e_direct = 0;
  std::int64_t via_lemma22 = 0;  // Sz_e from Sz plus transmissions
  std::int64_t s1 = 0;           // tree-edge contribution, closed form
  std::int64_t s2 = 0;           // cycle-edge contribution, closed form
  std::int64_t s1_direct = 0;
  std::int64_t s2_direct = 0;
  bool all_agree = false;
};

DecompositionReport decompose_unicyclic(const UnicyclicSpec& spec);

}  // namespace szlab
