// Copyright 2026 The weur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Entropic steering test from Alice to Bob:
//
//   sum_theta w_theta H_alpha(B_theta | A_theta) >= q_alpha({B_theta, w_theta})
//
// with the state-independent q_alpha (alpha >= 2) or q_1 (alpha = 1) of
// Bob's measurements on the right. A violation certifies steerability.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weur/entropy.hpp"
#include "weur/qmat.hpp"

namespace weur {

/// Joint state on H_A (x) H_B, A the first tensor factor.
class BipartiteState {
 public:
  BipartiteState(int d_a, int d_b, DensityState state);

  int dim_a() const { return d_a_; }
  int dim_b() const { return d_b_; }
  const DensityState& state() const { return state_; }

 private:
  int d_a_;
  int d_b_;
  DensityState state_;
};

/// (|00> - |11>)/sqrt(2).
BipartiteState maximally_entangled_qubits();

/// p(a, b) = Re Tr[(A_a (x) B_b) rho]; rows index Alice's outcome.
RealMatrix joint_distribution(const BipartiteState& s, const Povm& alice, const Povm& bob);

/// H_alpha(B|A) = alpha/(1-alpha) log2 sum_j p_A(j) ||p(.|j)||_alpha, with the
/// alpha = 1 (average Shannon) and alpha = inf (-log2 sum_j max_i p(j, i))
/// limits. Rows with p_A(j) = 0 contribute nothing.
double conditional_renyi(const RealMatrix& joint, RenyiOrder alpha);

struct SteeringScenario {
  BipartiteState state;
  std::vector<Povm> alice;
  std::vector<Povm> bob;
  std::vector<double> weights;
  RenyiOrder alpha = RenyiOrder::infinity();
};

struct SteeringResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;
  double margin = 0.0;  // lhs - rhs; negative means violation
};

inline constexpr double kViolationTol = 1e-12;

/// Bob's POVMs must be ETE and alpha must be 1, >= 2 or infinite.
SteeringResult evaluate_criterion(const SteeringScenario& sc);

/// Which party holds the noisy copies eta M + (1-eta) Tr(M)/d * 1 in a noise
/// scan, and whose measurements feed the bound.
enum class NoisePlacement {
  /// Alice measures the noisy observables, Bob the clean ones; the bound uses
  /// Bob's clean measurements. For the maximally entangled state the joint
  /// distribution is the same as with the noise on Bob's side.
  kAlice,
  /// Alice clean, Bob noisy, bound from Bob's noisy measurements.
  kBobLiteral,
};

struct ThresholdOptions {
  double tol = 1e-4;
  NoisePlacement placement = NoisePlacement::kAlice;
  int monotonicity_grid = 50;
};

/// Left and right sides of the criterion when both parties measure
/// `observables` (one side noisy with visibility eta) on the maximally
/// entangled qubit pair.
SteeringResult noisy_criterion(std::span<const Povm> observables, std::span<const double> weights,
                               RenyiOrder alpha, double eta, NoisePlacement placement);

/// Smallest eta in [0, 1] at which the criterion is violated, by bisection
/// to within `tol`. Returns nullopt when even eta = 1 does not violate.
/// Throws NumericalError when the left side is not nonincreasing in eta.
std::optional<double> noise_threshold(std::span<const Povm> observables,
                                      std::span<const double> weights, RenyiOrder alpha,
                                      const ThresholdOptions& options = {});

struct WeightSearchOptions {
  int restarts = 32;
  std::uint64_t seed = 0x5eed5eedULL;
  double tol = 1e-4;            // tolerance of the reported thresholds
  double min_weight = 1e-4;
  NoisePlacement placement = NoisePlacement::kAlice;
};

struct WeightOptimum {
  std::vector<double> weights;
  std::optional<double> eta_opt;
  std::optional<double> eta_equal;
};

/// Minimizes noise_threshold over the interior of the weight simplex with a
/// multi-start pairwise-transfer pattern search. The equal-weight point is
/// always one of the starts, so eta_opt <= eta_equal + tol.
WeightOptimum optimize_weights(std::span<const Povm> observables, RenyiOrder alpha,
                               const WeightSearchOptions& options = {});

}  // namespace weur
