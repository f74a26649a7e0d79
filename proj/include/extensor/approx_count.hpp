#pragma once

#include <cstdint>
#include <vector>

#include "extensor/kpath_oracle.hpp"

namespace extensor {

/// Default calibration constant: trials = ceil(C / epsilon^2).
inline constexpr double kCountCalibration = 60.0;

unsigned counting_trials(double epsilon, double calibration = kCountCalibration);

/// Uniform vector in {1, -1}^dims derived from (seed, trial, item).
CodeVector<IntegerRing> random_sign_vector(std::uint64_t seed, std::uint64_t trial, std::uint64_t item, unsigned dims);

/// k! as a double.
double factorial(unsigned k);

/// (-1)^{C(m,2)}: the sign of a wedge of m lifted codes.
inline int lift_sign(unsigned m) { return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1; }

struct CountOptions {
  unsigned k = 3;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  double calibration = kCountCalibration;
  bool parallel = true;
};

/// Approximate number of ordered k-vertex paths after an update batch.
///
/// Each trial is a deterministic-style state whose codes are lifts of random sign vectors;
/// the top coefficient, sign-corrected and divided by k!, is an unbiased estimate.
class CountingOracle {
 public:
  CountingOracle(const DirectedGraph& g, const CountOptions& opts);

  unsigned trials() const { return static_cast<unsigned>(states_.size()); }
  const std::vector<DeterministicState>& states() const { return states_; }

  std::vector<double> trial_values(const UpdateBatch& batch = {}) const;
  double estimate(const UpdateBatch& batch = {}) const;

 private:
  unsigned k_;
  std::vector<DeterministicState> states_;
};

}  // namespace extensor
