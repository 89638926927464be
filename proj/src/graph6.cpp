#include "qspec/graph6.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace qspec {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 258047: '~' then three 6-bit chunks, most significant first.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  long n;
  int first = take();
  if (first < 63) {
    n = first;
  } else {
    int a = take(), b = take(), c = take();
    n = (static_cast<long>(a) << 12) | (b << 6) | c;
  }
  if (n < 1 || n > Graph::kMaxN)
    throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                " outside supported range [1, 64]");
  Graph g(static_cast<int>(n));
  long bits_needed = n * (n - 1) / 2;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = take();
        nbits = 6;
      }
      --bits_needed;
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  }
  (void)bits_needed;
  if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  Graph g(n);
  for (int k = 0; k < m; ++k) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace qspec
