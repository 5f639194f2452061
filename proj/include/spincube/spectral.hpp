#pragma once

#include "spincube/core.hpp"
#include "spincube/dynamics.hpp"

namespace spincube {

/// Eigenvalues (descending) with orthonormal eigenvectors of a symmetric
/// matrix; column k of eigenvectors pairs with eigenvalues[k]. Columns are
/// oriented so their first nonzero component is positive.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  int size() const { return eigenvectors.size(); }
  std::vector<double> eigenvector(int k) const;
  /// More than one eigenvalue within tol of the largest.
  bool degenerate_top(double tol = 1e-9) const;
};

/// Cyclic Jacobi diagonalization. tol bounds the off-diagonal Frobenius norm
/// relative to max(1, ||M||_F); throws numerical_error if 100 sweeps do not
/// reach it.
Spectrum eigen_decompose(const Matrix& m, double tol = 1e-12);

struct HeuristicResult {
  SpinVector start;        // sign pattern of the top eigenvector
  SpinVector fixed_point;
  double energy = 0.0;
  Trajectory trajectory;
  bool degenerate_top = false;
};

/// Top-eigenvector start, then serial dynamics: the eigen step sees the
/// canonicalized weights, the dynamics phase the network as given. Throws
/// heuristic_incomplete if the run hits its sweep limit.
HeuristicResult spectral_heuristic(const HopfieldNetwork& net,
                                   UpdateMode mode = UpdateMode::serial(),
                                   int max_sweeps = 0);

/// y^T M y written as mu_max + 2 mu_max (y-x0)^T x0 + (y-x0)^T M (y-x0),
/// with y = x/sqrt(n) and x0 the top eigenvector. The last two terms sum
/// to y^T M y - mu_max <= 0.
struct CornerDecomposition {
  double mu_max = 0.0;
  double cross_term = 0.0;
  double residual = 0.0;
  double total = 0.0;
  bool degenerate_top = false;  // mu_max tie: x0 taken as the first column
};

CornerDecomposition corner_decomposition(const Matrix& m, const SpinVector& x);
CornerDecomposition corner_decomposition(const Matrix& m, const Spectrum& spec,
                                         const SpinVector& x);

/// y^T M y as a probability-weighted average of eigenvalues: c = P^T y has
/// sum c_i^2 == 1 and expectation sum c_i^2 mu_i == y^T M y.
struct ExpectationView {
  std::vector<double> coefficients;
  std::vector<double> eigenvalues;
  double expectation = 0.0;
};

ExpectationView expectation_view(const Matrix& m, const SpinVector& x);
ExpectationView expectation_view(const Spectrum& spec, const SpinVector& x);

/// n * mu_max >= x^T M x for every corner x.
double corner_value_bound(const Matrix& m);
double corner_value_bound(const Spectrum& spec);

}  // namespace spincube
