#ifndef QSPEC_CANONICAL_HPP
#define QSPEC_CANONICAL_HPP

#include <string>
#include <vector>

#include "qspec/graph.hpp"

namespace qspec {

// Relabeling-invariant encoding: two graphs have equal forms iff isomorphic.
// bytes = order byte followed by the packed upper triangle of the
// lexicographically minimal adjacency matrix over the labelings explored by
// the refinement search.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Canonical labeling (perm[old] = new) realizing the minimal encoding.
// Computed by iterative neighborhood-degree refinement with backtracking;
// discovered automorphisms prune sibling branches. Throws if g.order() > max_n.
std::vector<int> canonical_labeling(const Graph& g, int max_n = 20);

CanonicalForm canonical_form(const Graph& g, int max_n = 20);

bool is_isomorphic(const Graph& a, const Graph& b, int max_n = 20);

}  // namespace qspec

#endif
