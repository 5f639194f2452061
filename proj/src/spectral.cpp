#include "spincube/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spincube {

std::vector<double> Spectrum::eigenvector(int k) const {
  std::vector<double> v(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(i)] = eigenvectors(i, k);
  return v;
}

bool Spectrum::degenerate_top(double tol) const {
  return eigenvalues.size() > 1 && eigenvalues[0] - eigenvalues[1] <= tol;
}

namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double acc = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j) acc += a(i, j) * a(i, j);
  return std::sqrt(acc);
}

double frobenius(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.entries()) acc += v * v;
  return std::sqrt(acc);
}

void orient_column(Matrix& p, int k) {
  for (int i = 0; i < p.size(); ++i) {
    const double v = p(i, k);
    if (std::abs(v) > 1e-9) {
      if (v < 0.0)
        for (int r = 0; r < p.size(); ++r) p(r, k) = -p(r, k);
      return;
    }
  }
}

}  // namespace

Spectrum eigen_decompose(const Matrix& m, double tol) {
  if (!m.is_symmetric())
    throw std::invalid_argument("eigen decomposition: matrix is not symmetric");
  if (!(tol > 0.0)) throw std::invalid_argument("eigen decomposition: tol must be > 0");

  const int n = m.size();
  Matrix a = m;
  Matrix p = Matrix::identity(n);
  const double threshold = tol * std::max(1.0, frobenius(m));
  constexpr int kMaxSweeps = 100;

  bool converged = off_diagonal_frobenius(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int q = 1; q < n; ++q) {
      for (int pp = 0; pp < q; ++pp) {
        const double apq = a(pp, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(pp, pp)) / (2.0 * apq);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        a(pp, pp) -= t * apq;
        a(q, q) += t * apq;
        a(pp, q) = 0.0;
        a(q, pp) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != pp && i != q) {
            const double aip = a(i, pp), aiq = a(i, q);
            a(i, pp) = c * aip - s * aiq;
            a(pp, i) = a(i, pp);
            a(i, q) = s * aip + c * aiq;
            a(q, i) = a(i, q);
          }
          const double vip = p(i, pp), viq = p(i, q);
          p(i, pp) = c * vip - s * viq;
          p(i, q) = s * vip + c * viq;
        }
      }
    }
    converged = off_diagonal_frobenius(a) <= threshold;
  }
  if (!converged)
    throw numerical_error("eigen decomposition: off-diagonal norm " +
                          format_real(off_diagonal_frobenius(a)) +
                          " above tolerance after 100 sweeps");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) > a(y, y); });

  Spectrum out{std::vector<double>(static_cast<std::size_t>(n)), Matrix(n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[static_cast<std::size_t>(k)] = a(src, src);
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = p(i, src);
    orient_column(out.eigenvectors, k);
  }
  return out;
}

HeuristicResult spectral_heuristic(const HopfieldNetwork& net, UpdateMode mode,
                                   int max_sweeps) {
  if (mode.kind != UpdateMode::Kind::Serial)
    throw std::invalid_argument("spectral heuristic: serial mode required");
  const CanonicalMatrix canonical = canonicalize(net.weights());
  const Spectrum spec = eigen_decompose(canonical.matrix());
  const SpinVector start = sign_map(std::span<const double>(spec.eigenvector(0)));
  Trajectory traj = run(net, start, mode, max_sweeps);
  if (traj.outcome != Outcome::FixedPoint)
    throw heuristic_incomplete("spectral heuristic: sweep limit reached after " +
                               std::to_string(traj.sweeps) + " sweeps");
  const SpinVector fixed = traj.final_state();
  const double e = traj.energies.back();
  return {start, fixed, e, std::move(traj), spec.degenerate_top()};
}

CornerDecomposition corner_decomposition(const Matrix& m, const SpinVector& x) {
  return corner_decomposition(m, eigen_decompose(m), x);
}

CornerDecomposition corner_decomposition(const Matrix& m, const Spectrum& spec,
                                         const SpinVector& x) {
  if (m.size() != x.size())
    throw std::invalid_argument("corner decomposition: dimension mismatch");
  const int n = m.size();
  const double root = std::sqrt(static_cast<double>(n));
  const std::vector<double> x0 = spec.eigenvector(0);
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] = x[i] / root - x0[static_cast<std::size_t>(i)];
  CornerDecomposition out;
  out.mu_max = spec.eigenvalues[0];
  out.cross_term = 2.0 * out.mu_max *
                   dot(std::span<const double>(d), std::span<const double>(x0));
  out.residual = quadratic_form(m, std::span<const double>(d));
  out.total = out.mu_max + out.cross_term + out.residual;
  out.degenerate_top = spec.degenerate_top();
  return out;
}

ExpectationView expectation_view(const Matrix& m, const SpinVector& x) {
  return expectation_view(eigen_decompose(m), x);
}

ExpectationView expectation_view(const Spectrum& spec, const SpinVector& x) {
  if (spec.size() != x.size())
    throw std::invalid_argument("expectation view: dimension mismatch");
  const int n = spec.size();
  const double root = std::sqrt(static_cast<double>(n));
  ExpectationView out;
  out.eigenvalues = spec.eigenvalues;
  out.coefficients.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double c = 0.0;
    for (int i = 0; i < n; ++i) c += spec.eigenvectors(i, k) * x[i] / root;
    out.coefficients[static_cast<std::size_t>(k)] = c;
  }
  double e = 0.0;
  for (int k = 0; k < n; ++k)
    e += out.coefficients[static_cast<std::size_t>(k)] *
         out.coefficients[static_cast<std::size_t>(k)] *
         out.eigenvalues[static_cast<std::size_t>(k)];
  out.expectation = e;
  return out;
}

double corner_value_bound(const Matrix& m) {
  return corner_value_bound(eigen_decompose(m));
}

double corner_value_bound(const Spectrum& spec) {
  return spec.size() * spec.eigenvalues[0];
}

}  // namespace spincube
