#ifndef QSPEC_GRAPH_HPP
#define QSPEC_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qspec {

// Simple undirected graph on 0-indexed vertices, adjacency stored as
// per-vertex bitmasks. Hard cap of 64 vertices (census and family sweeps
// never exceed it).
class Graph {
 public:
  static constexpr int kMaxN = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxN)
      throw std::invalid_argument("Graph: order must be in [1, 64], got " +
                                  std::to_string(n));
    adj_.assign(static_cast<size_t>(n), 0);
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if ((adj_[static_cast<size_t>(u)] >> v) & 1u)
      throw std::invalid_argument("Graph: duplicate edge rejected");
    adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
    ++m_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!((adj_[static_cast<size_t>(u)] >> v) & 1u))
      throw std::invalid_argument("Graph: removing absent edge");
    adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
    adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
    --m_;
  }

  uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbor_mask(v)); }

  int min_degree() const {
    int d = n_ - 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (uint64_t m = neighbor_mask(v); m; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (uint64_t m = adj_[static_cast<size_t>(u)] >> (u + 1); m; m &= m - 1)
        out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
  }

  Graph complement() const {
    Graph c(n_);
    uint64_t all = (n_ == 64) ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
    for (int v = 0; v < n_; ++v)
      c.adj_[static_cast<size_t>(v)] =
          all & ~adj_[static_cast<size_t>(v)] & ~(uint64_t{1} << v);
    c.m_ = n_ * (n_ - 1) / 2 - m_;
    return c;
  }

  // perm[old] = new vertex id; perm must be a permutation of [0, n).
  Graph relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw std::invalid_argument("relabeled: permutation size mismatch");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[static_cast<size_t>(u)],
                                           perm[static_cast<size_t>(v)]);
    return h;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(n_) + ")");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<uint64_t> adj_;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Connected with |E| = |V| + 1.
bool is_bicyclic(const Graph& g);

// Breadth-first shortest path from u to v, inclusive of both endpoints.
// Deterministic: lowest-index neighbor expanded first. Throws if unreachable.
std::vector<int> shortest_path(const Graph& g, int u, int v);

// BFS distance; -1 if unreachable.
int distance(const Graph& g, int u, int v);

// ---- stock constructions ----
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, hub 0

// K_{1,n-1} plus edges joining two disjoint pairs of pendant vertices (n >= 5).
Graph star_plus_2e(int n);

// Two hubs joined by three internally disjoint paths of lengths a <= b <= c;
// at most one length may be 1.
Graph theta_graph(int a, int b, int c);

// Two cycles of lengths a, b >= 3 sharing exactly one vertex.
Graph infinity_graph(int a, int b);

// Two disjoint cycles of lengths a, b >= 3 joined by a path of length ell >= 1.
Graph b_graph(int a, int b, int ell);

}  // namespace qspec

#endif
