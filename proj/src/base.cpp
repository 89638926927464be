#include "qspec/base.hpp"

#include <algorithm>
#include <array>

namespace qspec {

std::string BaseKind::to_string() const {
  switch (kind) {
    case Kind::Theta:
      return "theta(" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
    case Kind::Infinity:
      return "infinity(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::BGraph:
      return "b(" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
  }
  return "?";
}

Graph bicyclic_base(const Graph& g) {
  int n = g.order();
  std::vector<bool> alive(static_cast<size_t>(n), true);
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (alive[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] <= 1) {
        alive[static_cast<size_t>(v)] = false;
        changed = true;
        for (int u : g.neighbors(v))
          if (alive[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
      }
    }
  }
  std::vector<int> idx(static_cast<size_t>(n), -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<size_t>(v)]) idx[static_cast<size_t>(v)] = k++;
  Graph core(k);
  for (auto [u, v] : g.edges())
    if (alive[static_cast<size_t>(u)] && alive[static_cast<size_t>(v)])
      core.add_edge(idx[static_cast<size_t>(u)], idx[static_cast<size_t>(v)]);
  return core;
}

BaseKind classify_base(const Graph& g) {
  if (!is_bicyclic(g))
    throw std::invalid_argument("classify_base: graph is not bicyclic");
  Graph core = bicyclic_base(g);
  int n = core.order();

  std::vector<int> branch;  // vertices of degree >= 3 in the core
  for (int v = 0; v < n; ++v)
    if (core.degree(v) >= 3) branch.push_back(v);

  if (branch.size() == 1) {
    // infinity-graph: one degree-4 vertex; removing it leaves two paths,
    // the interiors of the two cycles.
    int w = branch[0];
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
      if (s == w || comp[static_cast<size_t>(s)] != -1) continue;
      int c = static_cast<int>(sizes.size());
      sizes.push_back(0);
      std::vector<int> stack{s};
      comp[static_cast<size_t>(s)] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++sizes[static_cast<size_t>(c)];
        for (int x : core.neighbors(u)) {
          if (x != w && comp[static_cast<size_t>(x)] == -1) {
            comp[static_cast<size_t>(x)] = c;
            stack.push_back(x);
          }
        }
      }
    }
    if (sizes.size() != 2)
      throw std::logic_error("classify_base: malformed infinity core");
    int a = sizes[0] + 1, b = sizes[1] + 1;
    if (a > b) std::swap(a, b);
    return {BaseKind::Kind::Infinity, a, b, 0};
  }

  if (branch.size() != 2)
    throw std::logic_error("classify_base: unexpected branch vertex count");
  int u = branch[0], v = branch[1];

  // Components of core - {u, v}; note per component which hubs it touches.
  std::vector<int> comp(static_cast<size_t>(n), -1);
  struct Part {
    int size = 0;
    bool touches_u = false;
    bool touches_v = false;
  };
  std::vector<Part> parts;
  for (int s = 0; s < n; ++s) {
    if (s == u || s == v || comp[static_cast<size_t>(s)] != -1) continue;
    int c = static_cast<int>(parts.size());
    parts.push_back({});
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = c;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      ++parts[static_cast<size_t>(c)].size;
      for (int x : core.neighbors(w)) {
        if (x == u) parts[static_cast<size_t>(c)].touches_u = true;
        else if (x == v) parts[static_cast<size_t>(c)].touches_v = true;
        else if (comp[static_cast<size_t>(x)] == -1) {
          comp[static_cast<size_t>(x)] = c;
          stack.push_back(x);
        }
      }
    }
  }

  bool hubs_adjacent = core.has_edge(u, v);
  bool all_span = std::all_of(parts.begin(), parts.end(), [](const Part& p) {
    return p.touches_u && p.touches_v;
  });

  if (all_span) {
    // theta: every component is the interior of a u-v path.
    std::vector<int> lens;
    if (hubs_adjacent) lens.push_back(1);
    for (const Part& p : parts) lens.push_back(p.size + 1);
    if (lens.size() != 3)
      throw std::logic_error("classify_base: malformed theta core");
    std::sort(lens.begin(), lens.end());
    return {BaseKind::Kind::Theta, lens[0], lens[1], lens[2]};
  }

  // b-graph: one cycle hangs off each hub; the spanning component (or the
  // direct u-v edge) is the connecting path.
  int a = 0, b = 0, ell = hubs_adjacent ? 1 : 0;
  for (const Part& p : parts) {
    if (p.touches_u && p.touches_v) ell = p.size + 1;
    else if (p.touches_u) a = p.size + 1;
    else if (p.touches_v) b = p.size + 1;
    else throw std::logic_error("classify_base: stray component");
  }
  if (a == 0 || b == 0 || ell == 0)
    throw std::logic_error("classify_base: malformed b core");
  if (a > b) std::swap(a, b);
  return {BaseKind::Kind::BGraph, a, b, ell};
}

Graph build_base(const BaseKind& k) {
  switch (k.kind) {
    case BaseKind::Kind::Theta:
      return theta_graph(k.a, k.b, k.c);
    case BaseKind::Kind::Infinity:
      return infinity_graph(k.a, k.b);
    case BaseKind::Kind::BGraph:
      return b_graph(k.a, k.b, k.c);
  }
  throw std::logic_error("build_base: bad kind");
}

}  // namespace qspec
