#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spincube {

// Exhaustive scan asked for more corners than the budget allows.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to meet its tolerance.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serial dynamics hit the sweep limit before reaching a fixed point.
struct heuristic_incomplete : numerical_error {
  using numerical_error::numerical_error;
};

/// Shared sign convention: sign(0) = +1.
inline int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

/// Corner of the {-1,+1}^n hypercube. Immutable after construction.
class SpinVector {
 public:
  explicit SpinVector(std::vector<int> spins);
  static SpinVector all_plus(int n);
  static SpinVector from_string(std::string_view s);  // '+' / '-' characters

  int size() const { return static_cast<int>(spins_.size()); }
  int operator[](int i) const { return spins_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& spins() const { return spins_; }
  std::vector<double> to_reals() const;
  SpinVector negated() const;
  /// Representative of the {x, -x} pair with first spin +1.
  SpinVector canonical() const;
  std::string to_string() const;

  bool operator==(const SpinVector&) const = default;

 private:
  std::vector<int> spins_;
};

/// Per-node thresholds; entries must be finite.
class ThresholdVector {
 public:
  explicit ThresholdVector(std::vector<double> values);
  static ThresholdVector zeros(int n);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const ThresholdVector&) const = default;

 private:
  std::vector<double> values_;
};

/// Dense square matrix, row-major, finite entries.
class Matrix {
 public:
  explicit Matrix(int n);  // zero-filled
  Matrix(int n, std::vector<double> entries);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return entries_[index(i, j)]; }
  double& operator()(int i, int j) { return entries_[index(i, j)]; }
  std::span<const double> row(int i) const;
  const std::vector<double>& entries() const { return entries_; }
  std::vector<std::vector<double>> rows() const;

  bool is_symmetric() const;      // exact entrywise test
  bool is_zero_diagonal() const;  // exact
  bool is_nonnegative() const;
  double trace() const;
  Matrix transposed() const;
  std::vector<double> apply(std::span<const double> x) const;  // M x
  std::vector<double> apply(const SpinVector& x) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> entries_;
};

/// Symmetric matrix with zero diagonal: the normal form all solvers consume.
class CanonicalMatrix {
 public:
  explicit CanonicalMatrix(Matrix m);

  int size() const { return m_.size(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  bool operator==(const CanonicalMatrix&) const = default;

 private:
  Matrix m_;
};

/// Strictly lower triangular matrix carrying the same hypercube form.
class VolterraMatrix {
 public:
  explicit VolterraMatrix(Matrix m);

  int size() const { return m_.size(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  bool operator==(const VolterraMatrix&) const = default;

 private:
  Matrix m_;
};

/// Normal form: symmetrize, then zero the diagonal. The dropped diagonal only
/// shifts corner values by trace((B + B^T)/2).
CanonicalMatrix canonicalize(const Matrix& b);

/// V[i][j] = 2 C[i][j] for i > j, else 0; x^T V x == x^T C x for all real x.
VolterraMatrix volterra_form(const CanonicalMatrix& c);

double quadratic_form(const Matrix& m, std::span<const double> x);
double quadratic_form(const Matrix& m, const SpinVector& x);

/// E = V^T S V - 2 V^T T. S must be symmetric.
double energy(const Matrix& s, const ThresholdVector& t, const SpinVector& v);

/// Component-wise sign with sign(0) = +1.
SpinVector sign_map(std::span<const double> v);

/// ||u|| * ||B u||; always >= u^T B u.
double cauchy_schwarz_bound(const Matrix& b, std::span<const double> u);

double norm2(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

// Matrix text format: first line n, then n whitespace-separated rows of n
// decimal reals; lines starting with '#' are comments.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);

/// Shortest-exact decimal for a double ("%.17g" round-trips).
std::string format_real(double v);

}  // namespace spincube
