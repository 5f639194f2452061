#pragma once

#include <cstdint>
#include <vector>

#include "spincube/core.hpp"

namespace spincube {

/// Largest dimension an exhaustive corner scan will accept by default.
inline constexpr int kDefaultCornerBudget = 22;

enum class Sense { Max, Min };

struct OracleResult {
  double optimum_value = 0.0;
  std::vector<SpinVector> optimizers;  // negation-canonical: first spin +1
  std::uint64_t corners_scanned = 0;
};

/// Exact optimum of x^T M x over all corners, scanning the 2^(n-1)
/// negation-canonical representatives. M must be symmetric, n <= max_n.
OracleResult brute_force_optimum(const Matrix& m, Sense sense,
                                 int max_n = kDefaultCornerBudget);

enum class StableKind { Stable, AntiStable };

struct StableVectorEntry {
  SpinVector vector;
  double value = 0.0;
};

/// Every corner (reported negation-canonically) satisfying x == sign(Mx)
/// (Stable) or x == -sign(Mx) (AntiStable), sorted by value descending.
std::vector<StableVectorEntry> enumerate_stable_vectors(
    const Matrix& m, StableKind kind, int max_n = kDefaultCornerBudget);

}  // namespace spincube
