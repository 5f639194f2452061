#include "spincube/stability.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace spincube {

namespace {

void require_symmetric(const Matrix& m, const char* who) {
  if (!m.is_symmetric())
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

void require_dims(const Matrix& m, const SpinVector& x, const char* who) {
  if (m.size() != x.size())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

std::string StabilityReport::to_line() const {
  return vector.to_string() + ", " + (stable ? "true" : "false") + ", " +
         (anti_stable ? "true" : "false") + ", " + format_real(value);
}

PatternSet::PatternSet(std::vector<SpinVector> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty())
    throw std::invalid_argument("pattern set: at least one pattern required");
  const int n = patterns_.front().size();
  if (static_cast<int>(patterns_.size()) > n)
    throw std::invalid_argument("pattern set: more patterns than dimensions");
  for (std::size_t a = 0; a < patterns_.size(); ++a) {
    if (patterns_[a].size() != n)
      throw std::invalid_argument("pattern set: pattern " + std::to_string(a) +
                                  " has mismatched length");
    for (std::size_t b = a + 1; b < patterns_.size(); ++b) {
      long dot = 0;
      for (int i = 0; i < n; ++i) dot += patterns_[a][i] * patterns_[b][i];
      if (dot != 0)
        throw std::invalid_argument("pattern set: patterns " + std::to_string(a) +
                                    " and " + std::to_string(b) +
                                    " are not orthogonal");
    }
  }
}

bool is_stable_vector(const Matrix& m, const SpinVector& x) {
  require_symmetric(m, "stable vector");
  require_dims(m, x, "stable vector");
  return sign_map(std::span<const double>(m.apply(x))) == x;
}

bool is_anti_stable_vector(const Matrix& m, const SpinVector& x) {
  require_symmetric(m, "anti-stable vector");
  require_dims(m, x, "anti-stable vector");
  return sign_map(std::span<const double>(m.apply(x))).negated() == x;
}

StabilityReport stability_report(const Matrix& m, const SpinVector& x) {
  require_symmetric(m, "stability report");
  require_dims(m, x, "stability report");
  const SpinVector s = sign_map(std::span<const double>(m.apply(x)));
  return {x, s == x, s.negated() == x, quadratic_form(m, x)};
}

Matrix synthesize_memory(const PatternSet& p) {
  const int n = p.dimension();
  const int s = p.count();
  Matrix w(n);
  for (const SpinVector& j : p.patterns())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) w(a, b) += j[a] * j[b];
  for (int a = 0; a < n; ++a) w(a, a) -= s;
  return w;
}

EigenCornerResult eigencorner_stability(const Matrix& m, const SpinVector& x) {
  require_symmetric(m, "eigencorner");
  require_dims(m, x, "eigencorner");
  const std::vector<double> mx = m.apply(x);
  const double mu = dot(std::span<const double>(mx),
                        std::span<const double>(x.to_reals())) /
                    m.size();
  double resid = 0.0, scale = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    resid = std::max(resid, std::abs(mx[static_cast<std::size_t>(i)] - mu * x[i]));
    scale = std::max(scale, std::abs(mx[static_cast<std::size_t>(i)]));
  }
  const double tol = 1e-9 * std::max(1.0, scale);
  EigenCornerResult out;
  out.mu = mu;
  if (resid > tol || std::abs(mu) <= tol) return out;  // not an eigenvector
  out.classification = mu > 0.0 ? EigenCornerClass::StableByEigen
                                : EigenCornerClass::AntiStableByEigen;
  return out;
}

AllOnesReport all_ones_check(const Matrix& m) {
  if (!m.is_nonnegative())
    throw std::invalid_argument("all-ones check: matrix has a negative entry");
  const int n = m.size();
  const SpinVector e = SpinVector::all_plus(n);
  const std::vector<double> me = m.apply(e);
  const SpinVector s = sign_map(std::span<const double>(me));

  AllOnesReport out{{e, s == e, s.negated() == e, quadratic_form(m, e)}, false, 0.0};
  // me[i] is the i-th row sum.
  const double alpha = me[0];
  bool constant = true;
  for (double r : me)
    if (std::abs(r - alpha) > 1e-9 * std::max(1.0, std::abs(alpha))) constant = false;
  out.constant_row_sums = constant;
  if (constant) out.row_sum = alpha;
  return out;
}

std::size_t linearly_independent_count(std::span<const SpinVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = static_cast<std::size_t>(vectors[0].size());
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  for (const SpinVector& v : vectors) {
    if (static_cast<std::size_t>(v.size()) != n)
      throw std::invalid_argument("independent count: mixed dimensions");
    rows.push_back(v.to_reals());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    if (std::abs(rows[pivot][col]) <= 1e-9) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<SpinVector> parse_patterns(std::istream& in) {
  std::vector<SpinVector> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    try {
      out.push_back(SpinVector::from_string(body));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (out.size() > 1 && out.back().size() != out.front().size())
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": pattern length differs from the first pattern");
  }
  if (out.empty()) throw std::invalid_argument("pattern file: no patterns");
  return out;
}

std::vector<SpinVector> parse_patterns_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_patterns(in);
}

}  // namespace spincube
