#ifndef QSPEC_SPECTRA_HPP
#define QSPEC_SPECTRA_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "qspec/graph.hpp"

namespace qspec {

// Dense symmetric matrix with exact integer entries (Q, D, complement
// identity). Floating point happens only inside the eigensolver.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {
    if (n < 1 || n > 256) throw std::invalid_argument("SymMatrix: order out of range");
  }

  int order() const { return n_; }

  long long at(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, long long v) {  // mirrored write
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  void add(int i, int j, long long v) { set(i, j, at(i, j) + v); }

  bool operator==(const SymMatrix&) const = default;

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::out_of_range("SymMatrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }

  int n_ = 0;
  std::vector<long long> a_;
};

// Q(G) = D(G) + A(G).
SymMatrix signless_laplacian(const Graph& g);

// (n-2)I + J - Q(g); equals signless_laplacian(g.complement()) entrywise.
SymMatrix complement_q(const Graph& g);

// Real vector indexed by vertices plus the permutation sorting values
// descending (ties by index), matching the X_1 >= ... >= X_n convention.
struct SpectralVector {
  std::vector<double> values;
  std::vector<int> sort_order;

  static SpectralVector from(std::vector<double> v);
  int size() const { return static_cast<int>(values.size()); }
  double norm() const;
  bool normalized(double tol = 1e-12) const;
  int argmax() const { return sort_order.front(); }
  // Lowest index among minimizers (sort_order keeps ties in index order for
  // the max end only, so recompute the min end explicitly).
  int argmin() const;
};

struct EigenResult {
  double lambda = 0;
  SpectralVector vector;
  double residual = 0;
  bool degenerate = false;  // next eigenvalue within 1e-8 of lambda
};

struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(double r)
      : std::runtime_error("eigensolver failed to converge; best off-norm " +
                           std::to_string(r)),
        best_residual(r) {}
  double best_residual;
};

// All eigenvalues, ascending. Cyclic Jacobi, deterministic sweep order.
std::vector<double> jacobi_spectrum(const SymMatrix& m);

// Least eigenvalue with unit eigenvector (largest-magnitude entry positive)
// and residual ||Mx - lambda x||_2, which must be <= tol.
EigenResult least_eigenpair(const SymMatrix& m, double tol = 1e-8);

// Sum over edges of (x_i + x_j)^2; equals x^T Q(g) x.
double rayleigh(const Graph& g, const SpectralVector& x);

double quadratic_form(const SymMatrix& m, std::span<const double> x);

// max_i |(lambda - d(v_i)) x_i - sum_{j in N(v_i)} x_j|.
double eigen_residual(const Graph& g, double lambda, const SpectralVector& x);

// lambda(Q(g)) <= min degree + tol.
bool min_degree_bound_holds(const Graph& g, double tol);

}  // namespace qspec

#endif
