#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "spincube/core.hpp"

namespace spincube {

struct StabilityReport {
  SpinVector vector;
  bool stable = false;
  bool anti_stable = false;
  double value = 0.0;  // x^T M x at the queried vector

  /// "vector, stable, anti_stable, value"
  std::string to_line() const;
};

/// Pairwise-orthogonal hypercube patterns, at most one per dimension.
class PatternSet {
 public:
  explicit PatternSet(std::vector<SpinVector> patterns);

  int dimension() const { return patterns_.front().size(); }
  int count() const { return static_cast<int>(patterns_.size()); }
  const std::vector<SpinVector>& patterns() const { return patterns_; }
  /// s == N: the synthesized matrix is zero and pattern stability degrades
  /// to the sign(0) convention rather than a guarantee.
  bool complete_basis() const { return count() == dimension(); }

 private:
  std::vector<SpinVector> patterns_;
};

/// x == sign(Mx). M must be symmetric.
bool is_stable_vector(const Matrix& m, const SpinVector& x);

/// x == -sign(Mx). M must be symmetric.
bool is_anti_stable_vector(const Matrix& m, const SpinVector& x);

StabilityReport stability_report(const Matrix& m, const SpinVector& x);

/// W = sum_l (J_l J_l^T - I). Stored patterns are eigenvectors with
/// eigenvalue N - s and, for s < N, stable vectors of value N(N - s).
Matrix synthesize_memory(const PatternSet& p);

enum class EigenCornerClass { StableByEigen, AntiStableByEigen, NotAnEigenvector };

struct EigenCornerResult {
  EigenCornerClass classification = EigenCornerClass::NotAnEigenvector;
  double mu = 0.0;  // Rayleigh quotient x^T M x / n
};

/// Classifies a corner that is also an eigenvector: positive eigenvalue means
/// stable, negative anti-stable. mu within noise of zero is not classified.
/// Tolerance: ||Mx - mu x||_inf <= 1e-9 * max(1, ||Mx||_inf).
EigenCornerResult eigencorner_stability(const Matrix& m, const SpinVector& x);

struct AllOnesReport {
  StabilityReport report;
  bool constant_row_sums = false;      // every row sums to the same alpha
  double row_sum = 0.0;                // alpha when constant_row_sums
};

/// For entrywise non-negative M, the all-ones corner is stable with value
/// equal to the sum of all entries; constant row sums alpha make it an
/// eigenvector with eigenvalue alpha and value n*alpha.
AllOnesReport all_ones_check(const Matrix& m);

/// Rank of the set over the reals (Gaussian elimination, tol 1e-9).
std::size_t linearly_independent_count(std::span<const SpinVector> vectors);

// Pattern file: one '+'/'-' string per line, all of equal length.
std::vector<SpinVector> parse_patterns(std::istream& in);
std::vector<SpinVector> parse_patterns_file(const std::string& path);

}  // namespace spincube
