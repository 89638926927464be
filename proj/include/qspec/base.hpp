#ifndef QSPEC_BASE_HPP
#define QSPEC_BASE_HPP

#include <string>

#include "qspec/graph.hpp"

namespace qspec {

// The three bicyclic bases. Theta: three internally disjoint paths of
// lengths a <= b <= c between two hubs. Infinity: cycles a <= b sharing one
// vertex. BGraph: disjoint cycles a <= b joined by a path of length ell.
struct BaseKind {
  enum class Kind { Theta, Infinity, BGraph };
  Kind kind = Kind::Theta;
  int a = 0;
  int b = 0;
  int c = 0;  // third path length (Theta) or connecting path length (BGraph)

  bool operator==(const BaseKind&) const = default;
  std::string to_string() const;
};

// The minimal bicyclic subgraph of g obtained by repeatedly deleting pendant
// vertices (the 2-core), on its own vertex set relabeled to [0, k).
Graph bicyclic_base(const Graph& g);

// Classifies the base of a bicyclic graph. Throws if !is_bicyclic(g).
BaseKind classify_base(const Graph& g);

Graph build_base(const BaseKind& k);

}  // namespace qspec

#endif
