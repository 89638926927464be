#include "qspec/transforms.hpp"

#include <cmath>
#include <sstream>

namespace qspec {

std::string format_step(int k, const TransformStep& s, double rayleigh_after) {
  std::ostringstream out;
  out << "step " << k << ": del (" << s.deleted_edge.first << ","
      << s.deleted_edge.second << ") add (" << s.added_edge.first << ","
      << s.added_edge.second << ") lhs=" << s.lhs << " rhs=" << s.rhs
      << " rayleigh=" << rayleigh_after;
  return out.str();
}

bool lemma21_max_bound(double xi, double xj, double xmax, double xmin) {
  double lhs = (xi + xj) * (xi + xj);
  double a = (xi + xmax) * (xi + xmax);
  double b = (xi + xmin) * (xi + xmin);
  return lhs <= std::max(a, b);
}

namespace {

// Extreme vertices of x: lowest index among maximizers / minimizers.
// Both steps need a strict sign split max > 0 > min.
std::pair<int, int> extremes(const SpectralVector& x) {
  int v1 = x.argmax();
  int vn = x.argmin();
  if (!(x.values[static_cast<size_t>(v1)] > 0 &&
        x.values[static_cast<size_t>(vn)] < 0))
    throw std::invalid_argument("graft step: need max(x) > 0 > min(x)");
  return {v1, vn};
}

}  // namespace

std::pair<Graph, TransformStep> t1_step(const Graph& g, const SpectralVector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("t1_step: dimension mismatch");
  if (!is_connected(g)) throw std::invalid_argument("t1_step: graph must be connected");
  auto [v1, vn] = extremes(x);
  std::vector<int> path = shortest_path(g, v1, vn);
  if (path.size() < 4)
    throw std::invalid_argument("t1_step: need d(v1, vn) >= 3, got " +
                                std::to_string(path.size() - 1));
  int l1 = path[1], l2 = path[2];

  double lhs = x.values[static_cast<size_t>(v1)] + x.values[static_cast<size_t>(l2)];
  lhs *= lhs;
  double rhs = x.values[static_cast<size_t>(vn)] + x.values[static_cast<size_t>(l1)];
  rhs *= rhs;

  Graph h = g;
  h.remove_edge(l1, l2);
  TransformStep step;
  step.deleted_edge = {l1, l2};
  step.lhs = lhs;
  step.rhs = rhs;
  int au = (lhs >= rhs) ? v1 : vn;
  int av = (lhs >= rhs) ? l2 : l1;
  if (h.has_edge(au, av))
    throw std::invalid_argument("t1_step: edge to add already present");
  h.add_edge(au, av);
  step.added_edge = {au, av};
  return {std::move(h), step};
}

std::pair<Graph, TransformStep> t2_step(const Graph& g, const SpectralVector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("t2_step: dimension mismatch");
  auto [v1, vn] = extremes(x);
  int vs = -1, vt = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1 || v == v1 || v == vn) continue;
    int t = g.neighbors(v)[0];
    if (t == v1 || t == vn) continue;
    vs = v;
    vt = t;
    break;
  }
  if (vs < 0) throw std::invalid_argument("t2_step: no eligible pendant vertex");

  double xs = x.values[static_cast<size_t>(vs)];
  double lhs = x.values[static_cast<size_t>(v1)] + xs;
  lhs *= lhs;
  double rhs = x.values[static_cast<size_t>(vn)] + xs;
  rhs *= rhs;

  Graph h = g;
  h.remove_edge(vt, vs);
  TransformStep step;
  step.deleted_edge = {vt, vs};
  step.lhs = lhs;
  step.rhs = rhs;
  int target = (lhs >= rhs) ? v1 : vn;
  if (h.has_edge(target, vs))
    throw std::invalid_argument("t2_step: edge to add already present");
  h.add_edge(target, vs);
  step.added_edge = {target, vs};
  return {std::move(h), step};
}

TraceResult t1_closure(const Graph& g, const SpectralVector& x, int max_steps) {
  if (max_steps < 0) max_steps = 10 * g.edge_count();
  TraceResult tr{g, {}};
  auto [v1, vn] = extremes(x);
  while (distance(tr.result, v1, vn) >= 3) {
    if (static_cast<int>(tr.steps.size()) >= max_steps) {
      std::ostringstream msg;
      msg << "t1_closure: exceeded " << max_steps << " steps; trace:";
      for (size_t k = 0; k < tr.steps.size(); ++k)
        msg << '\n' << format_step(static_cast<int>(k), tr.steps[k], 0.0);
      throw std::runtime_error(msg.str());
    }
    auto [h, step] = t1_step(tr.result, x);
    tr.result = std::move(h);
    tr.steps.push_back(step);
  }
  return tr;
}

}  // namespace qspec
