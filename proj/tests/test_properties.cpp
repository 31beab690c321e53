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

// Randomized checks that every bound holds for realized entropies.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weur/bounds.hpp"
#include "weur/ensembles.hpp"
#include "weur/viewop.hpp"

namespace weur {
namespace {

constexpr double kSlack = 1e-9;

struct Case {
  WeightedEnsemble ensemble;
  DensityState state;
};

Case random_case(std::mt19937_64& gen, bool pure) {
  const int d = 2 + static_cast<int>(gen() % 4);
  const int theta = 2 + static_cast<int>(gen() % 3);
  const auto bases = haar_random_bases(d, theta, gen());
  auto w = oracle::random_simplex(theta, gen);
  for (auto& x : w) x = 0.8 * x + 0.2 / theta;
  WeightedEnsemble e(bases.povms(), w);
  const int rank = pure ? 1 : 1 + static_cast<int>(gen() % static_cast<unsigned>(d));
  return {std::move(e), DensityState(oracle::random_density(d, gen, rank))};
}

double entropy_sum(const WeightedEnsemble& e, const DensityState& s) {
  double total = 0.0;
  for (const auto& m : e.povms()) total += shannon_entropy(born_probabilities(m, s));
  return total;
}

TEST(BoundValidity, AverageFormHoldsForRandomStates) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_case(gen, trial % 2 == 0);
    const double i_state = invariant_information(c.state);
    const double i_free = state_independent_icom(c.ensemble.dim());
    for (RenyiOrder a : {RenyiOrder(2.0), RenyiOrder(3.0), RenyiOrder::infinity()}) {
      const double h = weighted_entropy(c.ensemble, c.state, a);
      ASSERT_GE(h, bound_q_alpha(c.ensemble, i_state, a) - kSlack) << trial << " " << a.label();
      ASSERT_GE(h, bound_q_alpha(c.ensemble, i_free, a) - kSlack) << trial << " " << a.label();
    }
    const double h1 = weighted_entropy(c.ensemble, c.state, RenyiOrder(1.0));
    ASSERT_GE(h1, bound_q_one(c.ensemble, i_state) - kSlack) << trial;
  }
}

TEST(BoundValidity, SumFormHoldsForRandomStates) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_case(gen, trial % 3 == 0);
    const auto& povms = c.ensemble.povms();
    const double h = entropy_sum(c.ensemble, c.state);
    const double s = von_neumann_entropy(c.state);
    ASSERT_GE(h, bound_q_s(povms, invariant_information(c.state)) - kSlack) << trial;
    ASSERT_GE(h, bound_q_scb(povms, s) - kSlack) << trial;
    ASSERT_GE(h, bound_q_lmf(povms, s) - kSlack) << trial;
    ASSERT_GE(h, bound_q_lmf_best_order(povms, s) - kSlack) << trial;
    for (std::size_t a = 0; a < povms.size(); ++a) {
      for (std::size_t b = a + 1; b < povms.size(); ++b) {
        const double pair = shannon_entropy(born_probabilities(povms[a], c.state)) +
                            shannon_entropy(born_probabilities(povms[b], c.state));
        ASSERT_GE(pair, bound_q_mu(povms[a], povms[b]) - kSlack) << trial;
      }
    }
    if (c.ensemble.dim() == 2) {
      ASSERT_GE(h, bound_q_s_qubit(povms, invariant_information(c.state)) - kSlack) << trial;
    }
  }
}

TEST(BoundValidity, InformationGainBelowViewBound) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_case(gen, trial % 2 == 1);
    const double g = operator_norm(average_view(c.ensemble));
    ASSERT_LE(weighted_information_gain(c.ensemble, c.state), g * invariant_information(c.state) + 1e-12);
  }
}

TEST(BoundValidity, NumericalOptimumBelowSampledStates) {
  std::mt19937_64 gen(99);
  OptimizerOptions opts;
  opts.restarts = 16;
  for (int trial = 0; trial < 12; ++trial) {
    const auto c = random_case(gen, true);
    for (RenyiOrder a : {RenyiOrder(1.0), RenyiOrder(2.0)}) {
      const auto opt = numerical_optimal_bound(c.ensemble, a, opts);
      const double q = a.is_shannon() ? bound_q_one(c.ensemble, state_independent_icom(c.ensemble.dim()))
                                      : bound_q_alpha(c.ensemble, state_independent_icom(c.ensemble.dim()), a);
      EXPECT_GE(opt.value, q - kSlack);
      EXPECT_NEAR(weighted_entropy(c.ensemble, opt.state, a), opt.value, 1e-12);
      for (int k = 0; k < 200; ++k) {
        const auto psi = oracle::random_pure(c.ensemble.dim(), gen);
        ASSERT_GE(weighted_entropy(c.ensemble, psi, a), opt.value - 1e-6) << trial;
      }
    }
  }
}

}  // namespace
}  // namespace weur
