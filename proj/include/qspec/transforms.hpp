#ifndef QSPEC_TRANSFORMS_HPP
#define QSPEC_TRANSFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qspec/graph.hpp"
#include "qspec/spectra.hpp"

namespace qspec {

// One graft rewrite: the removed edge, the added edge, and the two squared
// sums whose comparison chose the branch (lhs is the v1-branch value).
struct TransformStep {
  std::pair<int, int> deleted_edge;
  std::pair<int, int> added_edge;
  double lhs = 0;
  double rhs = 0;
};

// Audit line: "step k: del (u,v) add (a,b) lhs=<val> rhs=<val> rayleigh=<val>"
std::string format_step(int k, const TransformStep& s, double rayleigh_after);

// (x_i + x_j)^2 <= max((x_i + x_1)^2, (x_i + x_n)^2), the bound behind both
// graft transformations. Test oracle only; the steps never assume it.
bool lemma21_max_bound(double xi, double xj, double x1, double xn);

// Path-shortening graft along a shortest v1..vn path: delete the second path
// edge, reattach to whichever extreme vertex gives the larger squared sum
// (v1-branch on ties). Requires max(x) > 0 > min(x) and d(v1, vn) >= 3.
std::pair<Graph, TransformStep> t1_step(const Graph& g, const SpectralVector& x);

// Pendant rehoming: move the lowest-index eligible pendant (neither it nor
// its support in {v1, vn}) to v1 or vn per the squared-sum comparison.
std::pair<Graph, TransformStep> t2_step(const Graph& g, const SpectralVector& x);

struct TraceResult {
  Graph result;
  std::vector<TransformStep> steps;
};

// Repeats t1_step until d(v1, vn) <= 2. max_steps < 0 means 10 * |E|.
TraceResult t1_closure(const Graph& g, const SpectralVector& x, int max_steps = -1);

}  // namespace qspec

#endif
