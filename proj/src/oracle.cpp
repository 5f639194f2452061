#include "spincube/oracle.hpp"

#include <algorithm>
#include <bit>

namespace spincube {

namespace {

void check_budget(const Matrix& m, int max_n) {
  if (!m.is_symmetric())
    throw std::invalid_argument("corner scan: matrix is not symmetric");
  if (m.size() > max_n)
    throw budget_error("corner scan: n = " + std::to_string(m.size()) +
                       " exceeds the budget of " + std::to_string(max_n));
}

// Walks the 2^(n-1) corners with spin 0 pinned to +1, Gray-code order, and
// hands each visitor the current spins and the maintained product w = M x.
// One flip costs O(n): flipping spin j adds -2*x_j_old * (row j of M) to w.
template <typename Visit>
void scan_canonical_corners(const Matrix& m, Visit&& visit) {
  const int n = m.size();
  std::vector<int> x(static_cast<std::size_t>(n), 1);
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    auto r = m.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) acc += r[j];
    w[static_cast<std::size_t>(i)] = acc;
  }
  visit(std::as_const(x), std::as_const(w));
  const std::uint64_t corners = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t k = 1; k < corners; ++k) {
    // Successive Gray codes differ in bit ctz(k); bit b drives spin b+1.
    const int j = std::countr_zero(k) + 1;
    const double xj = x[static_cast<std::size_t>(j)];
    auto r = m.row(j);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= 2.0 * xj * r[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(j)] = -x[static_cast<std::size_t>(j)];
    visit(std::as_const(x), std::as_const(w));
  }
}

double corner_value(const std::vector<int>& x, const std::vector<double>& w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * w[i];
  return acc;
}

}  // namespace

OracleResult brute_force_optimum(const Matrix& m, Sense sense, int max_n) {
  check_budget(m, max_n);
  OracleResult result;
  bool first = true;
  const double flip = sense == Sense::Max ? 1.0 : -1.0;
  scan_canonical_corners(m, [&](const std::vector<int>& x, const std::vector<double>& w) {
    ++result.corners_scanned;
    const double v = corner_value(x, w);
    if (first || flip * v > flip * result.optimum_value) {
      result.optimum_value = v;
      result.optimizers.clear();
      result.optimizers.emplace_back(std::vector<int>(x));
      first = false;
    } else if (v == result.optimum_value) {
      result.optimizers.emplace_back(std::vector<int>(x));
    }
  });
  return result;
}

std::vector<StableVectorEntry> enumerate_stable_vectors(const Matrix& m,
                                                        StableKind kind, int max_n) {
  check_budget(m, max_n);
  std::vector<StableVectorEntry> found;
  const bool anti = kind == StableKind::AntiStable;
  scan_canonical_corners(m, [&](const std::vector<int>& x, const std::vector<double>& w) {
    // sign(0)=+1 is not negation-symmetric, so test the corner and its
    // negation: either hit makes the canonical representative a finding.
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < x.size() && (plus || minus); ++i) {
      const int want = anti ? -x[i] : x[i];
      if (sign_of(w[i]) != want) plus = false;
      if (sign_of(-w[i]) != -want) minus = false;
    }
    if (plus || minus)
      found.push_back({SpinVector(std::vector<int>(x)), corner_value(x, w)});
  });
  std::stable_sort(found.begin(), found.end(),
                   [](const StableVectorEntry& a, const StableVectorEntry& b) {
                     return a.value > b.value;
                   });
  return found;
}

}  // namespace spincube
