#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdl/generators.hpp"
#include "mdl/matrix.hpp"

namespace mdl {

// Generator compiled to doubles for simulation; exact arithmetic stays
// in the verification path.
class CompiledGenerator {
 public:
  explicit CompiledGenerator(const SparseGenerator& gen);
  std::size_t size() const { return exit_rate_.size(); }
  double exit_rate(std::size_t state) const { return exit_rate_[state]; }
  const std::vector<std::pair<std::size_t, double>>& moves(
      std::size_t state) const {
    return moves_[state];
  }
  double sup_norm() const;  // max over states of 2 * exit rate

 private:
  std::vector<double> exit_rate_;
  std::vector<std::vector<std::pair<std::size_t, double>>> moves_;
};

struct Trajectory {
  std::size_t start = 0;
  std::vector<std::pair<double, std::size_t>> events;  // (time, target)
  std::size_t final_state = 0;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Exponential-clock sampling of the chain up to t_max; deterministic
/// given (seed, chain, start). Ends early in absorbing states.
Trajectory run_trajectory(const CompiledGenerator& gen, std::size_t start,
                          double t_max, std::uint64_t seed);

/// Monte-Carlo estimates of E_x[D(X(t), y)] and E_y[D(x, Y(t))] from
/// independent trajectory batches (per-trajectory streams derived from
/// the seed, deterministic reduction).
std::pair<McEstimate, McEstimate> estimate_duality_gap(
    const CompiledGenerator& gen, const OperatorMatrix& d, std::size_t x,
    std::size_t y, double t, std::size_t n_traj, std::uint64_t seed);

struct SeriesExpectation {
  double value = 0.0;
  double remainder_bound = 0.0;
  long order = 0;
};

/// Σ_{k<=K} t^k/k! (L^k D)(x, y) with a sup-norm remainder bound;
/// throws if the bound at order K is not below `tol`.
SeriesExpectation exact_expectation(const CompiledGenerator& gen,
                                    const OperatorMatrix& d, std::size_t x,
                                    std::size_t y, double t, long max_order,
                                    double tol = 1e-9);

}  // namespace mdl
