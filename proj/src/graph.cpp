#include "qspec/graph.hpp"

#include <algorithm>
#include <queue>

namespace qspec {

namespace {

// Iterative mask-based BFS from vertex s; returns visited mask.
uint64_t bfs_mask(const Graph& g, int s) {
  uint64_t seen = uint64_t{1} << s;
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1)
      next |= g.neighbor_mask(std::countr_zero(m));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  uint64_t all = (g.order() == 64) ? ~uint64_t{0}
                                   : ((uint64_t{1} << g.order()) - 1);
  return bfs_mask(g, 0) == all;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          q.push(v);
        } else if (color[static_cast<size_t>(v)] ==
                   color[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_bicyclic(const Graph& g) {
  return g.edge_count() == g.order() + 1 && is_connected(g);
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
  std::vector<int> parent(static_cast<size_t>(g.order()), -2);
  parent[static_cast<size_t>(u)] = -1;
  std::queue<int> q;
  q.push(u);
  while (!q.empty() && parent[static_cast<size_t>(v)] == -2) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {  // neighbors() ascends, so ties go low-index
      if (parent[static_cast<size_t>(b)] == -2) {
        parent[static_cast<size_t>(b)] = a;
        q.push(b);
      }
    }
  }
  if (parent[static_cast<size_t>(v)] == -2)
    throw std::invalid_argument("shortest_path: vertices in different components");
  std::vector<int> path;
  for (int a = v; a != -1; a = parent[static_cast<size_t>(a)]) path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

int distance(const Graph& g, int u, int v) {
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(g.order()), -1);
  dist[static_cast<size_t>(u)] = 0;
  std::queue<int> q;
  q.push(u);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {
      if (dist[static_cast<size_t>(b)] == -1) {
        dist[static_cast<size_t>(b)] = dist[static_cast<size_t>(a)] + 1;
        if (b == v) return dist[static_cast<size_t>(b)];
        q.push(b);
      }
    }
  }
  return -1;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph star_plus_2e(int n) {
  if (n < 5) throw std::invalid_argument("star_plus_2e: need n >= 5");
  Graph g = star_graph(n);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  return g;
}

Graph theta_graph(int a, int b, int c) {
  if (!(1 <= a && a <= b && b <= c))
    throw std::invalid_argument("theta_graph: need 1 <= a <= b <= c");
  if (b == 1) throw std::invalid_argument("theta_graph: two length-1 paths form a multi-edge");
  int n = 2 + (a - 1) + (b - 1) + (c - 1);
  Graph g(n);
  int next = 2;  // hubs are 0 and 1
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph infinity_graph(int a, int b) {
  if (a < 3 || b < 3) throw std::invalid_argument("infinity_graph: cycles need length >= 3");
  int n = a + b - 1;
  Graph g(n);
  int next = 1;  // shared vertex is 0
  for (int len : {a, b}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 0);
  }
  return g;
}

Graph b_graph(int a, int b, int ell) {
  if (a < 3 || b < 3) throw std::invalid_argument("b_graph: cycles need length >= 3");
  if (ell < 1) throw std::invalid_argument("b_graph: path needs length >= 1");
  int n = a + b + ell - 1;
  Graph g(n);
  for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);  // first cycle 0..a-1
  int hub2 = a;                                            // second cycle a..a+b-1
  for (int i = 0; i < b; ++i) g.add_edge(a + i, a + (i + 1) % b);
  // path of length ell from vertex 0 to hub2 through fresh vertices
  int prev = 0;
  int next = a + b;
  for (int i = 1; i < ell; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, hub2);
  return g;
}

}  // namespace qspec
