#include "spincube/core.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace spincube {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SpinVector::SpinVector(std::vector<int> spins) : spins_(std::move(spins)) {
  require(!spins_.empty(), "spin vector: dimension must be positive");
  for (std::size_t i = 0; i < spins_.size(); ++i)
    require(spins_[i] == 1 || spins_[i] == -1,
            "spin vector: component " + std::to_string(i) + " is not +/-1");
}

SpinVector SpinVector::all_plus(int n) {
  require(n > 0, "spin vector: dimension must be positive");
  return SpinVector(std::vector<int>(static_cast<std::size_t>(n), 1));
}

SpinVector SpinVector::from_string(std::string_view s) {
  std::vector<int> spins;
  spins.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+')
      spins.push_back(1);
    else if (s[i] == '-')
      spins.push_back(-1);
    else
      throw std::invalid_argument("spin string: character " + std::to_string(i) +
                                  " is not '+' or '-'");
  }
  return SpinVector(std::move(spins));
}

std::vector<double> SpinVector::to_reals() const {
  return std::vector<double>(spins_.begin(), spins_.end());
}

SpinVector SpinVector::negated() const {
  std::vector<int> s(spins_);
  for (int& v : s) v = -v;
  return SpinVector(std::move(s));
}

SpinVector SpinVector::canonical() const {
  return spins_[0] > 0 ? *this : negated();
}

std::string SpinVector::to_string() const {
  std::string s;
  s.reserve(spins_.size());
  for (int v : spins_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

ThresholdVector::ThresholdVector(std::vector<double> values)
    : values_(std::move(values)) {
  require(!values_.empty(), "threshold vector: dimension must be positive");
  for (std::size_t i = 0; i < values_.size(); ++i)
    require(std::isfinite(values_[i]),
            "threshold vector: component " + std::to_string(i) + " is not finite");
}

ThresholdVector ThresholdVector::zeros(int n) {
  require(n > 0, "threshold vector: dimension must be positive");
  return ThresholdVector(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

Matrix::Matrix(int n) : n_(n) {
  require(n > 0, "matrix: dimension must be positive");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

Matrix::Matrix(int n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
  require(n > 0, "matrix: dimension must be positive");
  require(entries_.size() ==
              static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
          "matrix: entry count does not match dimension");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    require(std::isfinite(entries_[k]),
            "matrix: entry " + std::to_string(k / static_cast<std::size_t>(n)) + "," +
                std::to_string(k % static_cast<std::size_t>(n)) + " is not finite");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  require(n > 0, "matrix: dimension must be positive");
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == rows.size(),
            "matrix: row " + std::to_string(i) + " has wrong length");
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(n, std::move(flat));
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::span<const double> Matrix::row(int i) const {
  return {entries_.data() + index(i, 0), static_cast<std::size_t>(n_)};
}

std::vector<std::vector<double>> Matrix::rows() const {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    auto r = row(i);
    out[static_cast<std::size_t>(i)].assign(r.begin(), r.end());
  }
  return out;
}

bool Matrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) != 0.0) return false;
  return true;
}

bool Matrix::is_nonnegative() const {
  for (double v : entries_)
    if (v < 0.0) return false;
  return true;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transposed() const {
  Matrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == n_, "matrix apply: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    auto r = row(i);
    for (int j = 0; j < n_; ++j) acc += r[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

std::vector<double> Matrix::apply(const SpinVector& x) const {
  return apply(std::span<const double>(x.to_reals()));
}

CanonicalMatrix::CanonicalMatrix(Matrix m) : m_(std::move(m)) {
  require(m_.is_symmetric(), "canonical matrix: not symmetric");
  require(m_.is_zero_diagonal(), "canonical matrix: nonzero diagonal");
}

VolterraMatrix::VolterraMatrix(Matrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.size(); ++i)
    for (int j = i; j < m_.size(); ++j)
      require(m_(i, j) == 0.0, "volterra matrix: entry above or on the diagonal");
}

CanonicalMatrix canonicalize(const Matrix& b) {
  const int n = b.size();
  Matrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = i == j ? 0.0 : 0.5 * (b(i, j) + b(j, i));
  return CanonicalMatrix(std::move(c));
}

VolterraMatrix volterra_form(const CanonicalMatrix& c) {
  const int n = c.size();
  Matrix v(n);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) v(i, j) = 2.0 * c(i, j);
  return VolterraMatrix(std::move(v));
}

double quadratic_form(const Matrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.size())
    throw std::invalid_argument("quadratic form: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    auto r = m.row(i);
    double rowacc = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) rowacc += r[j] * x[j];
    acc += x[static_cast<std::size_t>(i)] * rowacc;
  }
  return acc;
}

double quadratic_form(const Matrix& m, const SpinVector& x) {
  return quadratic_form(m, std::span<const double>(x.to_reals()));
}

double energy(const Matrix& s, const ThresholdVector& t, const SpinVector& v) {
  if (s.size() != t.size() || s.size() != v.size())
    throw std::invalid_argument("energy: dimension mismatch");
  if (!s.is_symmetric()) throw std::invalid_argument("energy: S is not symmetric");
  const std::vector<double> x = v.to_reals();
  double vt = 0.0;
  for (int i = 0; i < s.size(); ++i) vt += x[static_cast<std::size_t>(i)] * t[i];
  return quadratic_form(s, std::span<const double>(x)) - 2.0 * vt;
}

SpinVector sign_map(std::span<const double> v) {
  std::vector<int> spins(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]))
      throw std::invalid_argument("sign map: component " + std::to_string(i) +
                                  " is not finite");
    spins[i] = sign_of(v[i]);
  }
  return SpinVector(std::move(spins));
}

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double cauchy_schwarz_bound(const Matrix& b, std::span<const double> u) {
  const std::vector<double> v = b.apply(u);
  return norm2(u) * norm2(std::span<const double>(v));
}

namespace {

// Pulls the next non-comment, non-blank line and splits it into tokens.
bool next_data_line(std::istream& in, std::vector<std::string>& tokens, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    tokens.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return true;
  }
  return false;
}

double parse_double_token(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": '" + tok + "' is not a number");
  }
  if (pos != tok.size())
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": '" + tok + "' is not a number");
  return v;
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  int line_no = 0;
  if (!next_data_line(in, tokens, line_no))
    throw std::invalid_argument("matrix file: missing dimension line");
  if (tokens.size() != 1)
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": expected a single dimension value");
  long n = 0;
  try {
    n = std::stol(tokens[0]);
  } catch (const std::exception&) {
    n = -1;
  }
  if (n <= 0)
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": invalid dimension '" + tokens[0] + "'");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (long i = 0; i < n; ++i) {
    if (!next_data_line(in, tokens, line_no))
      throw std::invalid_argument("matrix file: missing row " + std::to_string(i));
    if (tokens.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("line " + std::to_string(line_no) + ": row " +
                                  std::to_string(i) + " has " +
                                  std::to_string(tokens.size()) + " values, expected " +
                                  std::to_string(n));
    for (const auto& tok : tokens) entries.push_back(parse_double_token(tok, line_no));
  }
  return Matrix(static_cast<int>(n), std::move(entries));
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.size() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j));
    }
    out << '\n';
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

}  // namespace spincube
