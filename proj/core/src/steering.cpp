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

#include "weur/steering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "weur/bounds.hpp"
#include "weur/ensembles.hpp"
#include "weur/rng.hpp"

namespace weur {

BipartiteState::BipartiteState(int d_a, int d_b, DensityState state)
    : d_a_(d_a), d_b_(d_b), state_(std::move(state)) {
  if (d_a < 1 || d_b < 1 || d_a * d_b != state_.dim()) {
    throw ValidationError("bipartite dimensions do not multiply to the state dimension");
  }
}

BipartiteState maximally_entangled_qubits() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(3) = -1.0 / std::sqrt(2.0);
  return BipartiteState(2, 2, DensityState::pure(psi));
}

RealMatrix joint_distribution(const BipartiteState& s, const Povm& alice, const Povm& bob) {
  if (alice.dim() != s.dim_a() || bob.dim() != s.dim_b()) {
    throw ValidationError("measurement dimensions do not match the bipartite state");
  }
  const ComplexMatrix& rho = s.state().matrix();
  RealMatrix p(alice.outcomes(), bob.outcomes());
  double total = 0.0;
  for (int a = 0; a < alice.outcomes(); ++a) {
    for (int b = 0; b < bob.outcomes(); ++b) {
      const ComplexMatrix product = kron(alice.effect(a), bob.effect(b));
      double x = product.cwiseProduct(rho.transpose()).sum().real();
      if (x < 0.0) {
        if (x < -kProbabilityClampTol) {
          throw ValidationError("negative joint probability");
        }
        x = 0.0;
      }
      p(a, b) = x;
      total += x;
    }
  }
  return p / total;
}

double conditional_renyi(const RealMatrix& joint, RenyiOrder alpha) {
  if (!alpha.is_infinite() && !(alpha.value() > 0.0)) {
    throw ValidationError("conditional_renyi: alpha must be positive");
  }
  if (alpha.is_infinite()) {
    double guess = 0.0;
    for (Eigen::Index j = 0; j < joint.rows(); ++j) guess += joint.row(j).maxCoeff();
    return std::max(0.0, -std::log2(guess));
  }
  double acc = 0.0;
  for (Eigen::Index j = 0; j < joint.rows(); ++j) {
    const double pj = joint.row(j).sum();
    if (!(pj > 0.0)) continue;
    std::vector<double> cond(static_cast<std::size_t>(joint.cols()));
    for (Eigen::Index i = 0; i < joint.cols(); ++i) {
      cond[static_cast<std::size_t>(i)] = joint(j, i) / pj;
    }
    if (alpha.is_shannon()) {
      acc += pj * shannon_entropy(cond);
    } else {
      double s = 0.0;
      for (double x : cond) {
        if (x > 0.0) s += std::pow(x, alpha.value());
      }
      acc += pj * std::pow(s, 1.0 / alpha.value());
    }
  }
  if (alpha.is_shannon()) return acc;
  const double a = alpha.value();
  return std::max(0.0, a / (1.0 - a) * std::log2(acc));
}

SteeringResult evaluate_criterion(const SteeringScenario& sc) {
  const std::size_t n = sc.weights.size();
  if (sc.alice.size() != n || sc.bob.size() != n || n == 0) {
    throw ValidationError("steering scenario needs one Alice and one Bob POVM per weight");
  }
  const WeightedEnsemble bob(sc.bob, sc.weights);
  const double i_com = state_independent_icom(sc.state.dim_b());

  SteeringResult r;
  if (sc.alpha.is_shannon()) {
    r.rhs = bound_q_one(bob, i_com);
  } else if (sc.alpha.is_infinite() || sc.alpha.value() >= 2.0) {
    r.rhs = bound_q_alpha(bob, i_com, sc.alpha);
  } else {
    throw ValidationError("steering criterion needs alpha = 1, alpha >= 2 or alpha = inf");
  }
  for (std::size_t t = 0; t < n; ++t) {
    r.lhs += sc.weights[t] *
             conditional_renyi(joint_distribution(sc.state, sc.alice[t], sc.bob[t]), sc.alpha);
  }
  r.margin = r.lhs - r.rhs;
  r.violated = r.lhs < r.rhs - kViolationTol;
  return r;
}

namespace {

std::vector<Povm> noisy_copies(std::span<const Povm> povms, double eta) {
  std::vector<Povm> out;
  out.reserve(povms.size());
  for (const auto& m : povms) out.push_back(add_white_noise(m, eta));
  return out;
}

// Per-measurement conditional entropies along an eta grid; each column must
// be nonincreasing, which makes every weighted sum nonincreasing too.
void check_monotone(std::span<const Povm> observables, RenyiOrder alpha, NoisePlacement placement,
                    int grid) {
  const auto state = maximally_entangled_qubits();
  std::vector<double> prev(observables.size(), INFINITY);
  for (int g = 0; g < grid; ++g) {
    const double eta = grid == 1 ? 1.0 : static_cast<double>(g) / (grid - 1);
    for (std::size_t t = 0; t < observables.size(); ++t) {
      const Povm noisy = add_white_noise(observables[t], eta);
      const RealMatrix p = placement == NoisePlacement::kAlice
                               ? joint_distribution(state, noisy, observables[t])
                               : joint_distribution(state, observables[t], noisy);
      const double h = conditional_renyi(p, alpha);
      if (h > prev[t] + 1e-12) {
        std::ostringstream os;
        os << "noise_threshold: conditional entropy of measurement " << t
           << " increases with eta near eta = " << eta << "; bisection bracket is not monotone";
        throw NumericalError(os.str());
      }
      prev[t] = h;
    }
  }
}

std::optional<double> bisect_threshold(std::span<const Povm> observables,
                                       std::span<const double> weights, RenyiOrder alpha,
                                       double tol, NoisePlacement placement) {
  auto violated = [&](double eta) {
    return noisy_criterion(observables, weights, alpha, eta, placement).violated;
  };
  if (violated(0.0)) return 0.0;
  if (!violated(1.0)) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (violated(mid) ? hi : lo) = mid;
  }
  return hi;
}

void renormalize(std::vector<double>& w) {
  double s = 0.0;
  for (double x : w) s += x;
  for (double& x : w) x /= s;
}

}  // namespace

SteeringResult noisy_criterion(std::span<const Povm> observables, std::span<const double> weights,
                               RenyiOrder alpha, double eta, NoisePlacement placement) {
  for (const auto& m : observables) {
    if (m.dim() != 2) throw ValidationError("noise scans use qubit observables");
  }
  std::vector<Povm> clean(observables.begin(), observables.end());
  std::vector<Povm> noisy = noisy_copies(observables, eta);
  SteeringScenario sc{maximally_entangled_qubits(), {}, {}, {weights.begin(), weights.end()}, alpha};
  if (placement == NoisePlacement::kAlice) {
    sc.alice = std::move(noisy);
    sc.bob = std::move(clean);
  } else {
    sc.alice = std::move(clean);
    sc.bob = std::move(noisy);
  }
  return evaluate_criterion(sc);
}

std::optional<double> noise_threshold(std::span<const Povm> observables,
                                      std::span<const double> weights, RenyiOrder alpha,
                                      const ThresholdOptions& options) {
  if (!(options.tol > 0.0 && options.tol <= 1e-4)) {
    throw ValidationError("noise_threshold: tol must lie in (0, 1e-4]");
  }
  if (observables.size() != weights.size() || observables.empty()) {
    throw ValidationError("noise_threshold: one weight per observable required");
  }
  check_monotone(observables, alpha, options.placement, options.monotonicity_grid);
  return bisect_threshold(observables, weights, alpha, options.tol, options.placement);
}

WeightOptimum optimize_weights(std::span<const Povm> observables, RenyiOrder alpha,
                               const WeightSearchOptions& options) {
  if (options.restarts < 1) throw ValidationError("optimize_weights: restarts must be >= 1");
  const std::size_t n = observables.size();
  if (n == 0) throw ValidationError("optimize_weights: no observables");

  ThresholdOptions reported{options.tol, options.placement, 50};
  const std::vector<double> equal(n, 1.0 / static_cast<double>(n));

  WeightOptimum out;
  out.eta_equal = noise_threshold(observables, equal, alpha, reported);  // also checks monotonicity

  constexpr double kSearchTol = 1e-7;
  constexpr double kNoThreshold = 2.0;
  auto objective = [&](const std::vector<double>& w) {
    const auto eta = bisect_threshold(observables, w, alpha, kSearchTol, options.placement);
    return eta ? *eta : kNoThreshold;
  };

  std::vector<double> best_w = equal;
  double best_f = objective(equal);

  for (int r = 0; r < options.restarts; ++r) {
    std::vector<double> w = equal;
    if (r > 0) {
      std::mt19937_64 gen(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
      std::exponential_distribution<double> expo(1.0);
      for (auto& x : w) x = std::max(expo(gen), options.min_weight);
      renormalize(w);
    }
    double f = objective(w);
    for (double delta = 0.125; delta > 1e-6;) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const double move = std::min(delta, w[j] - options.min_weight);
          if (move <= 0.0) continue;
          std::vector<double> trial = w;
          trial[i] += move;
          trial[j] -= move;
          renormalize(trial);
          const double ft = objective(trial);
          if (ft < f - 1e-12) {
            w = std::move(trial);
            f = ft;
            improved = true;
          }
        }
      }
      if (!improved) delta *= 0.5;
    }
    if (f < best_f) {
      best_f = f;
      best_w = w;
    }
  }

  out.weights = best_w;
  out.eta_opt = bisect_threshold(observables, best_w, alpha, options.tol, options.placement);
  // Both reported values come from the same bisection grid; never report a
  // worse optimum than the equal-weight start.
  const bool worse = out.eta_equal && (!out.eta_opt || *out.eta_opt > *out.eta_equal);
  if (worse) {
    out.weights = equal;
    out.eta_opt = out.eta_equal;
  }
  return out;
}

}  // namespace weur
