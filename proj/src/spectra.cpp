#include "qspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qspec {

SymMatrix signless_laplacian(const Graph& g) {
  int n = g.order();
  SymMatrix q(n);
  for (int v = 0; v < n; ++v) q.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) q.set(u, v, 1);
  return q;
}

SymMatrix complement_q(const Graph& g) {
  int n = g.order();
  SymMatrix q = signless_laplacian(g);
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long long base = (i == j) ? (n - 2) + 1 : 1;  // (n-2)I + J
      out.set(i, j, base - q.at(i, j));
    }
  return out;
}

SpectralVector SpectralVector::from(std::vector<double> v) {
  SpectralVector x;
  x.values = std::move(v);
  x.sort_order.resize(x.values.size());
  std::iota(x.sort_order.begin(), x.sort_order.end(), 0);
  std::stable_sort(x.sort_order.begin(), x.sort_order.end(), [&](int a, int b) {
    return x.values[static_cast<size_t>(a)] > x.values[static_cast<size_t>(b)];
  });
  return x;
}

double SpectralVector::norm() const {
  double s = 0;
  for (double v : values) s += v * v;
  return std::sqrt(s);
}

bool SpectralVector::normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

int SpectralVector::argmin() const {
  int best = 0;
  for (int i = 1; i < size(); ++i)
    if (values[static_cast<size_t>(i)] < values[static_cast<size_t>(best)]) best = i;
  return best;
}

namespace {

struct JacobiOut {
  std::vector<double> eig;               // unsorted, per position
  std::vector<std::vector<double>> vec;  // vec[k] = eigenvector for eig[k]
};

// Cyclic Jacobi over the strict upper triangle in row-major order.
// Converges when the off-diagonal Frobenius norm drops below off_tol.
JacobiOut jacobi_full(const SymMatrix& m, double off_tol = 1e-10,
                      int max_sweeps = 64) {
  int n = m.order();
  std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        static_cast<double>(m.at(i, j));
  std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
             a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return std::sqrt(2 * s);
  };

  double off = off_norm();
  for (int sweep = 0; sweep < max_sweeps && off > off_tol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[static_cast<size_t>(p)][static_cast<size_t>(q)];
        if (apq == 0.0) continue;
        double theta = (a[static_cast<size_t>(q)][static_cast<size_t>(q)] -
                        a[static_cast<size_t>(p)][static_cast<size_t>(p)]) /
                       (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[static_cast<size_t>(k)][static_cast<size_t>(p)];
          double akq = a[static_cast<size_t>(k)][static_cast<size_t>(q)];
          a[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * akp - s * akq;
          a[static_cast<size_t>(k)][static_cast<size_t>(q)] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[static_cast<size_t>(p)][static_cast<size_t>(k)];
          double aqk = a[static_cast<size_t>(q)][static_cast<size_t>(k)];
          a[static_cast<size_t>(p)][static_cast<size_t>(k)] = c * apk - s * aqk;
          a[static_cast<size_t>(q)][static_cast<size_t>(k)] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[static_cast<size_t>(k)][static_cast<size_t>(p)];
          double vkq = v[static_cast<size_t>(k)][static_cast<size_t>(q)];
          v[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * vkp - s * vkq;
          v[static_cast<size_t>(k)][static_cast<size_t>(q)] = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }
  if (off > off_tol) throw ConvergenceError(off);

  JacobiOut out;
  out.eig.resize(static_cast<size_t>(n));
  out.vec.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
  for (int k = 0; k < n; ++k) {
    out.eig[static_cast<size_t>(k)] = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i)
      out.vec[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          v[static_cast<size_t>(i)][static_cast<size_t>(k)];
  }
  return out;
}

}  // namespace

std::vector<double> jacobi_spectrum(const SymMatrix& m) {
  std::vector<double> eig = jacobi_full(m).eig;
  std::sort(eig.begin(), eig.end());
  return eig;
}

EigenResult least_eigenpair(const SymMatrix& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("least_eigenpair: tol must be positive");
  JacobiOut jo = jacobi_full(m);
  int n = m.order();
  int kmin = 0;
  for (int k = 1; k < n; ++k)
    if (jo.eig[static_cast<size_t>(k)] < jo.eig[static_cast<size_t>(kmin)]) kmin = k;

  std::vector<double> x = jo.vec[static_cast<size_t>(kmin)];
  double nrm = 0;
  for (double xv : x) nrm += xv * xv;
  nrm = std::sqrt(nrm);
  for (double& xv : x) xv /= nrm;
  // sign convention: largest-magnitude entry positive (first on ties)
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(x[static_cast<size_t>(i)]) > std::abs(x[static_cast<size_t>(imax)]))
      imax = i;
  if (x[static_cast<size_t>(imax)] < 0)
    for (double& xv : x) xv = -xv;

  double lambda = jo.eig[static_cast<size_t>(kmin)];
  double res = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j)
      row += static_cast<double>(m.at(i, j)) * x[static_cast<size_t>(j)];
    row -= lambda * x[static_cast<size_t>(i)];
    res += row * row;
  }
  res = std::sqrt(res);
  if (res > tol) throw ConvergenceError(res);

  bool degenerate = false;
  for (int k = 0; k < n; ++k)
    if (k != kmin && jo.eig[static_cast<size_t>(k)] - lambda < 1e-8) degenerate = true;

  EigenResult r;
  r.lambda = lambda;
  r.vector = SpectralVector::from(std::move(x));
  r.residual = res;
  r.degenerate = degenerate;
  return r;
}

double rayleigh(const Graph& g, const SpectralVector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("rayleigh: dimension mismatch");
  double s = 0;
  for (auto [u, v] : g.edges()) {
    double t = x.values[static_cast<size_t>(u)] + x.values[static_cast<size_t>(v)];
    s += t * t;
  }
  return s;
}

double quadratic_form(const SymMatrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.order())
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  double s = 0;
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      s += static_cast<double>(m.at(i, j)) * x[static_cast<size_t>(i)] *
           x[static_cast<size_t>(j)];
  return s;
}

double eigen_residual(const Graph& g, double lambda, const SpectralVector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("eigen_residual: dimension mismatch");
  double worst = 0;
  for (int i = 0; i < g.order(); ++i) {
    double lhs = (lambda - g.degree(i)) * x.values[static_cast<size_t>(i)];
    double rhs = 0;
    for (int j : g.neighbors(i)) rhs += x.values[static_cast<size_t>(j)];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

bool min_degree_bound_holds(const Graph& g, double tol) {
  if (!is_connected(g))
    throw std::invalid_argument("min_degree_bound_holds: graph must be connected");
  return least_eigenpair(signless_laplacian(g)).lambda <= g.min_degree() + tol;
}

}  // namespace qspec
