#include "szlab/graph6.hpp"

#include <sstream>
#include <vector>

namespace szlab {

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw Error(ErrorKind::TooLarge, "graph6 encoder supports n <= 258047");
  }

  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size())
      throw Error(ErrorKind::ParseError, "graph6 string truncated");
    const int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126)
      throw Error(ErrorKind::ParseError,
                  "graph6 byte out of range at offset " + std::to_string(pos - 1));
    return c - 63;
  };

  int n;
  if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
      throw Error(ErrorKind::TooLarge, "graph6 decoder supports n <= 258047");
    const int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n <= 0) throw Error(ErrorKind::ParseError, "graph6 order must be positive");

  std::vector<std::pair<int, int>> edges;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
      --nbits;
    }
  }
  if (pos != s.size())
    throw Error(ErrorKind::ParseError, "trailing bytes after graph6 payload");
  return build_graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  int n = 0, m = 0;
  if (!(is >> n >> m))
    throw Error(ErrorKind::ParseError, "edge list must start with \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v))
      throw Error(ErrorKind::ParseError,
                  "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (is >> extra)
    throw Error(ErrorKind::ParseError, "trailing input after the edge list");
  return build_graph(n, std::move(edges));
}

}  // namespace szlab
