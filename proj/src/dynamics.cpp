#include "spincube/dynamics.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace spincube {

namespace {

constexpr int kFullHistoryLimit = 24;

double field_at(const Matrix& s, const ThresholdVector& t,
                const std::vector<int>& spins, int i) {
  auto r = s.row(i);
  double acc = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * spins[j];
  return acc - t[i];
}

}  // namespace

HopfieldNetwork::HopfieldNetwork(Matrix s, ThresholdVector t)
    : s_(std::move(s)), t_(std::move(t)) {
  if (!s_.is_symmetric())
    throw std::invalid_argument("network: synaptic matrix is not symmetric");
  if (s_.size() != t_.size())
    throw std::invalid_argument("network: threshold dimension does not match");
}

double local_field(const HopfieldNetwork& net, const SpinVector& v, int i) {
  if (v.size() != net.size())
    throw std::invalid_argument("local field: dimension mismatch");
  if (i < 0 || i >= net.size())
    throw std::out_of_range("local field: node index out of range");
  return field_at(net.weights(), net.thresholds(), v.spins(), i);
}

SpinVector step_serial(const HopfieldNetwork& net, const SpinVector& v, int i) {
  const int s = sign_of(local_field(net, v, i));
  std::vector<int> spins = v.spins();
  spins[static_cast<std::size_t>(i)] = s;
  return SpinVector(std::move(spins));
}

SpinVector step_parallel(const HopfieldNetwork& net, const SpinVector& v) {
  if (v.size() != net.size())
    throw std::invalid_argument("step: dimension mismatch");
  std::vector<int> next(static_cast<std::size_t>(net.size()));
  for (int i = 0; i < net.size(); ++i)
    next[static_cast<std::size_t>(i)] =
        sign_of(field_at(net.weights(), net.thresholds(), v.spins(), i));
  return SpinVector(std::move(next));
}

SpinVector step_subset(const HopfieldNetwork& net, const SpinVector& v,
                       std::span<const int> nodes) {
  if (v.size() != net.size())
    throw std::invalid_argument("step: dimension mismatch");
  std::vector<int> next = v.spins();
  for (int i : nodes) {
    if (i < 0 || i >= net.size())
      throw std::out_of_range("step: node index out of range");
    next[static_cast<std::size_t>(i)] =
        sign_of(field_at(net.weights(), net.thresholds(), v.spins(), i));
  }
  return SpinVector(std::move(next));
}

bool is_stable_state(const HopfieldNetwork& net, const SpinVector& v) {
  if (v.size() != net.size())
    throw std::invalid_argument("stable state: dimension mismatch");
  for (int i = 0; i < net.size(); ++i) {
    const double j = field_at(net.weights(), net.thresholds(), v.spins(), i);
    if (sign_of(j) != v[i]) return false;
  }
  return true;
}

std::pair<const SpinVector&, const SpinVector&> Trajectory::cycle() const {
  if (outcome != Outcome::TwoCycle || states.size() < 2)
    throw std::logic_error("trajectory: not a 2-cycle");
  return {states[states.size() - 1], states[states.size() - 2]};
}

namespace {

struct Recorder {
  const HopfieldNetwork& net;
  Trajectory& t;
  bool full_history;

  void record(const std::vector<int>& spins) {
    SpinVector v{std::vector<int>(spins)};
    t.energies.push_back(energy(net.weights(), net.thresholds(), v));
    if (!full_history && t.states.size() == 2) {
      t.states.erase(t.states.begin());
      t.truncated = true;
    }
    t.states.push_back(std::move(v));
  }
};

}  // namespace

Trajectory run(const HopfieldNetwork& net, const SpinVector& v0, UpdateMode mode,
               int max_sweeps) {
  if (v0.size() != net.size()) throw std::invalid_argument("run: dimension mismatch");
  if (max_sweeps == 0) max_sweeps = 1000 * net.size();
  if (max_sweeps < 1) throw std::invalid_argument("run: max_sweeps must be >= 1");
  if (mode.kind == UpdateMode::Kind::Serial) {
    for (int i = 0; i < net.size(); ++i)
      if (net.weights()(i, i) < 0.0)
        throw std::invalid_argument(
            "run: serial mode requires a non-negative diagonal (node " +
            std::to_string(i) + ")");
  }

  const int n = net.size();
  Trajectory traj;
  Recorder rec{net, traj, n <= kFullHistoryLimit};

  std::vector<int> state = v0.spins();
  rec.record(state);

  if (mode.kind == UpdateMode::Kind::Serial) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(mode.seed);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (mode.schedule == UpdateMode::Schedule::RandomPermutation)
        std::shuffle(order.begin(), order.end(), rng);
      int flips = 0;
      for (int i : order) {
        const int s = sign_of(field_at(net.weights(), net.thresholds(), state, i));
        if (s != state[static_cast<std::size_t>(i)]) {
          state[static_cast<std::size_t>(i)] = s;
          ++flips;
        }
      }
      ++traj.sweeps;
      rec.record(state);
      if (flips == 0) {
        traj.outcome = Outcome::FixedPoint;
        return traj;
      }
    }
    traj.outcome = Outcome::StepLimit;
    return traj;
  }

  // Fully parallel: stop on V(t)==V(t-1) or the 2-cycle V(t)==V(t-2).
  std::vector<int> prev2;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      next[static_cast<std::size_t>(i)] =
          sign_of(field_at(net.weights(), net.thresholds(), state, i));
    ++traj.sweeps;
    rec.record(next);
    if (next == state) {
      traj.outcome = Outcome::FixedPoint;
      return traj;
    }
    if (!prev2.empty() && next == prev2) {
      traj.outcome = Outcome::TwoCycle;
      return traj;
    }
    prev2 = std::move(state);
    state = std::move(next);
  }
  traj.outcome = Outcome::StepLimit;
  return traj;
}

HopfieldNetwork parse_network(std::istream& in) {
  Matrix s = parse_matrix(in);
  // Optional trailing thresholds line; default to zeros.
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<double> t;
    double v = 0.0;
    while (ss >> v) t.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest)
      throw std::invalid_argument("network file: bad threshold token '" + rest + "'");
    if (static_cast<int>(t.size()) != s.size())
      throw std::invalid_argument("network file: expected " + std::to_string(s.size()) +
                                  " thresholds, got " + std::to_string(t.size()));
    return HopfieldNetwork(std::move(s), ThresholdVector(std::move(t)));
  }
  const int n = s.size();
  return HopfieldNetwork(std::move(s), ThresholdVector::zeros(n));
}

HopfieldNetwork parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_network(in);
}

void write_network(std::ostream& out, const HopfieldNetwork& net) {
  write_matrix(out, net.weights());
  for (int i = 0; i < net.size(); ++i) {
    if (i) out << ' ';
    out << format_real(net.thresholds()[i]);
  }
  out << '\n';
}

void write_trajectory(std::ostream& out, const Trajectory& t) {
  const std::size_t offset = t.energies.size() - t.states.size();
  for (std::size_t k = 0; k < t.energies.size(); ++k) {
    out << k << ", " << format_real(t.energies[k]);
    if (k >= offset) out << ", " << t.states[k - offset].to_string();
    out << '\n';
  }
}

}  // namespace spincube
