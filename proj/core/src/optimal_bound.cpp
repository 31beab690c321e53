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

// Multi-start descent for the optimal pure-state bound B_alpha.
//
// A state is a unit vector x in R^{2d} (real parts, then imaginary parts).
// The objective is invariant under scaling and global phase, so each
// accepted step is renormalized back onto the sphere.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "weur/bounds.hpp"
#include "weur/rng.hpp"

namespace weur {
namespace {

constexpr double kGradientStep = 1e-7;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;

// Flattened effects so that one objective evaluation does not allocate.
class EntropyObjective {
 public:
  EntropyObjective(const WeightedEnsemble& e, RenyiOrder alpha)
      : d_(e.dim()), l_(e.outcomes()), alpha_(alpha), weights_(e.weights()) {
    for (const auto& m : e.povms()) {
      for (const auto& eff : m.effects()) {
        for (int a = 0; a < d_; ++a) {
          for (int b = 0; b < d_; ++b) effects_.push_back(eff(a, b));
        }
      }
    }
    psi_.resize(static_cast<std::size_t>(d_));
    probs_.resize(static_cast<std::size_t>(l_));
  }

  int params() const { return 2 * d_; }

  double operator()(const std::vector<double>& x) {
    double norm = 0.0;
    for (int a = 0; a < d_; ++a) {
      psi_[static_cast<std::size_t>(a)] =
          Complex(x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(a + d_)]);
      norm += std::norm(psi_[static_cast<std::size_t>(a)]);
    }
    const std::size_t block = static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_);
    double total = 0.0;
    std::size_t offset = 0;
    for (double w : weights_) {
      double sum = 0.0;
      for (int i = 0; i < l_; ++i, offset += block) {
        double p = 0.0;
        for (int a = 0; a < d_; ++a) {
          Complex row(0.0, 0.0);
          for (int b = 0; b < d_; ++b) {
            row += effects_[offset + static_cast<std::size_t>(a * d_ + b)] *
                   psi_[static_cast<std::size_t>(b)];
          }
          p += (std::conj(psi_[static_cast<std::size_t>(a)]) * row).real();
        }
        p = std::max(0.0, p / norm);
        probs_[static_cast<std::size_t>(i)] = p;
        sum += p;
      }
      for (auto& p : probs_) p /= sum;
      total += w * renyi_entropy(probs_, alpha_);
    }
    return total;
  }

 private:
  int d_;
  int l_;
  RenyiOrder alpha_;
  std::vector<double> weights_;
  std::vector<Complex> effects_;
  std::vector<Complex> psi_;
  std::vector<double> probs_;
};

void normalize(std::vector<double>& x) {
  double n = 0.0;
  for (double v : x) n += v * v;
  n = std::sqrt(n);
  for (double& v : x) v /= n;
}

struct Descent {
  double value;
  std::vector<double> x;
};

Descent descend(EntropyObjective& f, std::vector<double> x, const OptimizerOptions& opt) {
  normalize(x);
  double fx = f(x);
  const std::size_t n = x.size();
  std::vector<double> grad(n), trial(n), probe(n);
  double step = 0.1;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    double g2 = 0.0;
    double radial = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      probe = x;
      probe[k] = x[k] + kGradientStep;
      const double up = f(probe);
      probe[k] = x[k] - kGradientStep;
      const double down = f(probe);
      grad[k] = (up - down) / (2.0 * kGradientStep);
      radial += grad[k] * x[k];
    }
    // Project onto the tangent space of the sphere.
    for (std::size_t k = 0; k < n; ++k) {
      grad[k] -= radial * x[k];
      g2 += grad[k] * grad[k];
    }
    if (g2 == 0.0) break;

    step = std::min(step * 4.0, 1.0);
    double f_trial = fx;
    bool accepted = false;
    while (step > kMinStep) {
      for (std::size_t k = 0; k < n; ++k) trial[k] = x[k] - step * grad[k];
      normalize(trial);
      f_trial = f(trial);
      if (f_trial <= fx - kArmijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const double improvement = fx - f_trial;
    x.swap(trial);
    fx = f_trial;
    if (improvement < opt.tolerance) break;
  }
  return {fx, std::move(x)};
}

std::vector<double> to_params(const ComplexVector& v) {
  const auto d = v.size();
  std::vector<double> x(static_cast<std::size_t>(2 * d));
  for (Eigen::Index a = 0; a < d; ++a) {
    x[static_cast<std::size_t>(a)] = v(a).real();
    x[static_cast<std::size_t>(a + d)] = v(a).imag();
  }
  return x;
}

ComplexVector from_params(const std::vector<double>& x) {
  const auto d = static_cast<Eigen::Index>(x.size() / 2);
  ComplexVector v(d);
  for (Eigen::Index a = 0; a < d; ++a) {
    v(a) = Complex(x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(a + d)]);
  }
  return v.normalized();
}

}  // namespace

double weighted_entropy(const WeightedEnsemble& e, const ComplexVector& psi, RenyiOrder alpha) {
  double total = 0.0;
  for (int t = 0; t < e.size(); ++t) {
    total += e.weights()[static_cast<std::size_t>(t)] *
             renyi_entropy(born_probabilities(e.povms()[static_cast<std::size_t>(t)], psi), alpha);
  }
  return total;
}

double weighted_entropy(const WeightedEnsemble& e, const DensityState& s, RenyiOrder alpha) {
  double total = 0.0;
  for (int t = 0; t < e.size(); ++t) {
    total += e.weights()[static_cast<std::size_t>(t)] *
             renyi_entropy(born_probabilities(e.povms()[static_cast<std::size_t>(t)], s), alpha);
  }
  return total;
}

OptimalBound numerical_optimal_bound(const WeightedEnsemble& e, RenyiOrder alpha,
                                     const OptimizerOptions& options) {
  if (options.restarts < 1) throw ValidationError("numerical_optimal_bound: restarts must be >= 1");
  if (!alpha.is_infinite() && !(alpha.value() > 0.0)) {
    throw ValidationError("numerical_optimal_bound: alpha must be positive");
  }

  // Starting points: eigenvectors of every effect (where the optimum of
  // projective scenarios often sits), followed by random Gaussian states.
  std::vector<std::vector<double>> starts;
  for (const auto& m : e.povms()) {
    for (const auto& eff : m.effects()) {
      starts.push_back(to_params(hermitian_eigs(eff).vectors.col(0)));
    }
  }
  const int d = e.dim();
  for (int r = 0; r < options.restarts; ++r) {
    std::mt19937_64 gen(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(2 * d));
    for (auto& v : x) v = normal(gen);
    starts.push_back(std::move(x));
  }

  std::vector<Descent> results(starts.size());
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(starts.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    EntropyObjective f(e, alpha);
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      results[i] = descend(f, starts[i], options);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Lowest value wins; ties go to the earliest start so threading cannot
  // change the answer.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[best].value) best = i;
  }
  return {results[best].value, from_params(results[best].x)};
}

}  // namespace weur
