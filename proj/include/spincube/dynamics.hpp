#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "spincube/core.hpp"

namespace spincube {

/// Network (S, T): symmetric synaptic weights plus per-node thresholds.
class HopfieldNetwork {
 public:
  HopfieldNetwork(Matrix s, ThresholdVector t);

  int size() const { return s_.size(); }
  const Matrix& weights() const { return s_; }
  const ThresholdVector& thresholds() const { return t_; }

 private:
  Matrix s_;
  ThresholdVector t_;
};

struct UpdateMode {
  enum class Kind { Serial, FullyParallel };
  enum class Schedule { RoundRobin, RandomPermutation };

  Kind kind = Kind::Serial;
  Schedule schedule = Schedule::RoundRobin;
  std::uint64_t seed = 0;  // used only by the random-permutation schedule

  static UpdateMode serial() { return {}; }
  static UpdateMode serial_random(std::uint64_t seed) {
    return {Kind::Serial, Schedule::RandomPermutation, seed};
  }
  static UpdateMode fully_parallel() { return {Kind::FullyParallel, {}, 0}; }
};

/// J_i = sum_j S[i][j] V_j - T_i.
double local_field(const HopfieldNetwork& net, const SpinVector& v, int i);

/// Serial primitive: recompute node i from V, leave the rest unchanged.
SpinVector step_serial(const HopfieldNetwork& net, const SpinVector& v, int i);

/// Synchronous step: every node recomputed from V simultaneously.
SpinVector step_parallel(const HopfieldNetwork& net, const SpinVector& v);

// Simultaneous update of an arbitrary node set K. |K|=1 is the serial
// primitive and K=all is the parallel step; intermediate sizes carry no
// convergence guarantee.
SpinVector step_subset(const HopfieldNetwork& net, const SpinVector& v,
                       std::span<const int> nodes);

/// True iff V == sign(S V - T), i.e. no mode can move the state.
bool is_stable_state(const HopfieldNetwork& net, const SpinVector& v);

enum class Outcome { FixedPoint, TwoCycle, StepLimit };

/// One state and one energy per sweep, V0 included. States are kept in full
/// only for n <= 24; larger runs keep the energies plus the last two states.
struct Trajectory {
  Outcome outcome = Outcome::StepLimit;
  std::vector<SpinVector> states;
  std::vector<double> energies;
  int sweeps = 0;
  bool truncated = false;

  const SpinVector& final_state() const { return states.back(); }
  /// The two alternating states of a 2-cycle, most recent first.
  std::pair<const SpinVector&, const SpinVector&> cycle() const;
};

/// Iterate until a fixed point (serial: first sweep with no flip; parallel:
/// V(t)==V(t-1)), a 2-cycle (parallel: V(t)==V(t-2)), or the sweep limit.
/// Serial mode requires a non-negative diagonal. max_sweeps 0 means 1000*n.
Trajectory run(const HopfieldNetwork& net, const SpinVector& v0, UpdateMode mode,
               int max_sweeps = 0);

// Network file: matrix text format for S, then optionally one line of n
// thresholds (zeros when absent).
HopfieldNetwork parse_network(std::istream& in);
HopfieldNetwork parse_network_file(const std::string& path);
void write_network(std::ostream& out, const HopfieldNetwork& net);

// One line per sweep: "step, energy, state".
void write_trajectory(std::ostream& out, const Trajectory& t);

}  // namespace spincube
