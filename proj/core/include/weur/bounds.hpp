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

// Entropic uncertainty bounds for weighted measurement ensembles.
//
// Every state-dependent bound takes the state only through its invariant
// information I_com (and von Neumann entropy S where an overlap bound needs
// it). The state-independent form is I_com = 1 - 1/d, S = 0.
//
// Average-form bounds (q_alpha, q_1, B_alpha) bound sum_theta w_theta H;
// sum-form bounds (q_S, q_MU, q_LMF, q_SCB) bound sum_theta H.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weur/entropy.hpp"
#include "weur/qmat.hpp"
#include "weur/viewop.hpp"

namespace weur {

inline double state_independent_icom(int d) { return 1.0 - 1.0 / static_cast<double>(d); }

/// sum_{i,theta} w_theta (p_{i|theta} - Tr(M_{i|theta})/d)^2, bounded above
/// by ||g|| * I_com(rho).
double weighted_information_gain(const WeightedEnsemble& e, const DensityState& s);

/// sum_{i,theta} w_theta p_{i|theta}^2. Requires every POVM to be ETE.
double weighted_ic(const WeightedEnsemble& e, const DensityState& s);

/// c_bar = 1/l + ||g|| * I_com, clipped to 1.
double ic_upper_bound(int l, double g_norm, double i_com);

// --- Bounds from precomputed view-operator norms -------------------------

double q_alpha_from_view(int l, double g_norm, double i_com, RenyiOrder alpha);
double q_one_from_view(int l, double g_norm, double i_com);

/// Solves the equal-weight Shannon bound for Theta ETE-POVMs with total view
/// norm ||G_tot||: picks the root p in [0, 1/n] of
/// (1-p)^2/(n-1) + p^2 = Theta c_bar - k/(n-1) - (Theta-k-1)/n.
double q_s_from_view(int theta, int l, double g_tot_norm, double i_com);

/// Closed qubit form h_bin(1/2 + sqrt(2 ||G_tot|| I_com - k)/2) + Theta-1-k.
double q_s_qubit_from_view(int theta, double g_tot_norm, double i_com);

// --- Ensemble-level bounds ------------------------------------------------

/// Q_alpha(l, 1/l + ||g|| I_com) for alpha >= 2. Non-ETE members are a
/// ValidationError naming the offending POVM.
double bound_q_alpha(const WeightedEnsemble& e, double i_com, RenyiOrder alpha);

/// Q_1(1/l + ||g|| I_com).
double bound_q_one(const WeightedEnsemble& e, double i_com);

/// Lower bound on sum_theta H(M_theta); the weights play no role.
double bound_q_s(std::span<const Povm> povms, double i_com);

/// Qubit rank-1 projective specialization of bound_q_s.
double bound_q_s_qubit(std::span<const Povm> povms, double i_com);

/// -log2 max_{ij} Tr(A_i B_j) for two rank-1 projective measurements.
double bound_q_mu(const Povm& a, const Povm& b);

/// -log2 b + (Theta-1) S with b contracted along the given basis order.
double bound_q_lmf(std::span<const Povm> bases, double s_rho);

/// Maximum of bound_q_lmf over all orderings (Theta <= 5), otherwise the
/// given order.
double bound_q_lmf_best_order(std::span<const Povm> bases, double s_rho);

/// -(1/(Theta-1)) sum_{pairs} log2 c_max + (Theta/2) S.
double bound_q_scb(std::span<const Povm> bases, double s_rho);

// --- Numerical optimum -----------------------------------------------------

struct OptimizerOptions {
  int restarts = 64;
  std::uint64_t seed = 0x5eed5eedULL;
  /// Stop a descent when one accepted step improves by less than this.
  double tolerance = 1e-12;
  int max_iterations = 4000;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct OptimalBound {
  double value = 0.0;      // weighted-average form
  ComplexVector state;     // normalized minimizer
};

/// min over pure |psi> of sum_theta w_theta H_alpha(M_theta)_psi by
/// multi-start gradient descent on the real parameterization of C^d.
/// Deterministic for a fixed seed regardless of thread count.
OptimalBound numerical_optimal_bound(const WeightedEnsemble& e, RenyiOrder alpha,
                                     const OptimizerOptions& options = {});

/// The objective itself, exposed for tests and benchmarks.
double weighted_entropy(const WeightedEnsemble& e, const ComplexVector& psi, RenyiOrder alpha);
double weighted_entropy(const WeightedEnsemble& e, const DensityState& s, RenyiOrder alpha);

// --- Report ----------------------------------------------------------------

struct BoundRequest {
  std::vector<RenyiOrder> alphas{RenyiOrder(2.0)};
  std::optional<DensityState> state;   // absent: state-independent
  bool state_independent = false;      // force state-independent even with a state
  bool optimal = false;                // also compute B_alpha
  OptimizerOptions optimizer;
};

struct PairBound {
  int first = 0;
  int second = 0;
  double value = 0.0;
};

/// Everything the toolkit can say about one scenario. Fields that do not
/// apply (non-ETE ensemble, non-projective bases, ...) stay empty.
struct BoundReport {
  int dim = 0;
  int outcomes = 0;
  int theta = 0;
  std::vector<double> weights;
  bool state_independent = true;
  double i_com = 0.0;
  double s_rho = 0.0;

  ViewReport view;

  std::map<std::string, double> q_alpha;      // keyed by RenyiOrder::label(), alpha >= 2
  std::optional<double> q_1;
  std::optional<double> q_s;
  std::optional<double> q_s_qubit;
  std::vector<PairBound> q_mu;
  std::optional<double> q_lmf;
  std::optional<double> q_lmf_best_order;
  std::optional<double> q_scb;
  std::map<std::string, double> b_alpha;      // weighted-average form
};

BoundReport compute_bound_report(const WeightedEnsemble& e, const BoundRequest& request);

}  // namespace weur
