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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "weur/entropy.hpp"
#include "weur/errors.hpp"

namespace weur {
namespace {

const RenyiOrder kInf = RenyiOrder::infinity();

TEST(RenyiOrder, ParseAndLabel) {
  EXPECT_TRUE(RenyiOrder::parse("inf").is_infinite());
  EXPECT_TRUE(RenyiOrder::parse("min").is_infinite());
  EXPECT_TRUE(RenyiOrder::parse("1").is_shannon());
  EXPECT_EQ(RenyiOrder::parse("2.5").value(), 2.5);
  EXPECT_EQ(RenyiOrder::parse("2").label(), "2");
  EXPECT_EQ(kInf.label(), "inf");
  EXPECT_THROW(RenyiOrder::parse("0"), ValidationError);
  EXPECT_THROW(RenyiOrder::parse("-1"), ValidationError);
  EXPECT_THROW(RenyiOrder::parse("two"), ValidationError);
  EXPECT_EQ(RenyiOrder(2.0), RenyiOrder::parse("2"));
}

TEST(RenyiEntropy, UniformAndDeterministic) {
  const std::vector<double> uniform(5, 0.2);
  const std::vector<double> det{1.0, 0.0, 0.0};
  for (RenyiOrder a : {RenyiOrder(0.5), RenyiOrder(1.0), RenyiOrder(2.0), RenyiOrder(7.0), kInf}) {
    EXPECT_NEAR(renyi_entropy(uniform, a), std::log2(5.0), 1e-12) << a.label();
    EXPECT_NEAR(renyi_entropy(det, a), 0.0, 1e-15) << a.label();
  }
}

TEST(RenyiEntropy, CollisionEntropyOfThreeQuartersQuarter) {
  const std::vector<double> p{0.75, 0.25};
  EXPECT_NEAR(renyi_entropy(p, RenyiOrder(2.0)), -std::log2(5.0 / 8.0), 1e-14);
  EXPECT_NEAR(renyi_entropy(p, RenyiOrder(2.0)), 0.67807190511263782, 1e-14);
  EXPECT_NEAR(renyi_entropy(p, kInf), -std::log2(0.75), 1e-15);
  EXPECT_NEAR(renyi_entropy(p, RenyiOrder(1.0)), oracle::plain_shannon(p), 1e-15);
}

TEST(RenyiEntropy, RejectsNonPositiveOrder) {
  const std::vector<double> p{0.5, 0.5};
  EXPECT_THROW(renyi_entropy(p, RenyiOrder(0.0)), ValidationError);
  EXPECT_THROW(renyi_entropy(p, RenyiOrder(-2.0)), ValidationError);
}

TEST(IndexOfCoincidence, Examples) {
  EXPECT_NEAR(index_of_coincidence(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}), 1.0 / 3, 1e-15);
  EXPECT_NEAR(index_of_coincidence(std::vector<double>{1.0, 0.0}), 1.0, 1e-15);
  EXPECT_NEAR(index_of_coincidence(std::vector<double>{0.5, 0.5, 0.0}), 0.5, 1e-15);
}

TEST(QAlpha, OrderTwoIsMinusLogC) {
  for (int l = 2; l <= 7; ++l) {
    for (int i = 0; i <= 20; ++i) {
      const double c = 1.0 / l + (1.0 - 1.0 / l) * i / 20.0;
      EXPECT_NEAR(q_alpha_estimate(l, c, RenyiOrder(2.0)), -std::log2(c), 1e-12) << l << " " << c;
    }
  }
}

TEST(QAlpha, InfinityExamples) {
  EXPECT_NEAR(q_alpha_estimate(2, 0.5, kInf), 1.0, 1e-14);
  const double c = 0.5 + 1.0 / 6.0;
  EXPECT_NEAR(q_alpha_estimate(2, c, kInf), -std::log2((1.0 + 1.0 / std::sqrt(3.0)) / 2.0), 1e-12);
  EXPECT_NEAR(q_alpha_estimate(2, c, kInf), 0.34249693688408224, 1e-12);
}

TEST(QAlpha, Endpoints) {
  for (int l = 2; l <= 6; ++l) {
    for (RenyiOrder a : {RenyiOrder(2.0), RenyiOrder(3.0), RenyiOrder(10.0), kInf}) {
      EXPECT_NEAR(q_alpha_estimate(l, 1.0 / l, a), std::log2(static_cast<double>(l)), 1e-12);
      EXPECT_NEAR(q_alpha_estimate(l, 1.0, a), 0.0, 1e-12);
    }
  }
}

TEST(QAlpha, TwoOutcomes) {
  // A length-2 distribution is fixed by its IC. The estimate is exact for
  // alpha = 2 and alpha = inf and stays below the entropy in between.
  for (double c = 0.5; c <= 1.0; c += 0.03125) {
    const double pa = 0.5 * (1.0 + std::sqrt(2.0 * c - 1.0));
    const std::vector<double> p{pa, 1.0 - pa};
    for (RenyiOrder a : {RenyiOrder(2.0), kInf}) {
      EXPECT_NEAR(q_alpha_estimate(2, c, a), renyi_entropy(p, a), 1e-12) << c << " " << a.label();
    }
    for (RenyiOrder a : {RenyiOrder(3.0), RenyiOrder(6.0)}) {
      EXPECT_LE(q_alpha_estimate(2, c, a), renyi_entropy(p, a) + 1e-12) << c << " " << a.label();
    }
  }
}

TEST(QAlpha, RejectsSmallOrdersAndBadIc) {
  EXPECT_THROW(q_alpha_estimate(3, 0.5, RenyiOrder(1.5)), ValidationError);
  EXPECT_THROW(q_alpha_estimate(3, 0.5, RenyiOrder(1.0)), ValidationError);
  EXPECT_THROW(q_alpha_estimate(3, 0.2, RenyiOrder(2.0)), ValidationError);
  EXPECT_THROW(q_alpha_estimate(3, 1.1, RenyiOrder(2.0)), ValidationError);
}

TEST(QOne, Examples) {
  EXPECT_NEAR(q_one_estimate(0.25), 2.0, 1e-12);
  EXPECT_NEAR(q_one_estimate(1.0), 0.0, 1e-12);
  EXPECT_NEAR(q_one_estimate(2.0 / 3.0), 2.0 / 3.0, 1e-12);
}

TEST(QOne, BreakpointsAndContinuity) {
  for (int n = 1; n <= 12; ++n) {
    const double c = 1.0 / n;
    EXPECT_NEAR(q_one_estimate(c), std::log2(static_cast<double>(n)), 1e-12) << n;
    EXPECT_NEAR(q_one_estimate(c * (1 + 1e-12)), q_one_estimate(c * (1 - 1e-12)), 1e-9) << n;
  }
}

TEST(ShannonFloor, Examples) {
  EXPECT_NEAR(shannon_floor_h(1.0 / 3.0), std::log2(3.0), 1e-12);
  EXPECT_NEAR(shannon_floor_h(1.0), 0.0, 1e-12);
  // Frozen from the circle-scan oracle; h_bin((1 + sqrt(0.2))/2).
  EXPECT_NEAR(shannon_floor_h(0.6), 0.85048962510684604, 1e-10);
  EXPECT_NEAR(shannon_floor_h(0.6), oracle::min_entropy_l3(0.6), 1e-10);
  for (int k = 1; k <= 12; ++k) {
    EXPECT_NEAR(shannon_floor_h(1.0 / k), std::log2(static_cast<double>(k)), 1e-12) << k;
  }
}

TEST(ShannonFloor, MatchesCircleOracle) {
  for (int i = 0; i <= 60; ++i) {
    const double c = 1.0 / 3.0 + (2.0 / 3.0) * i / 60.0;
    EXPECT_NEAR(shannon_floor_h(c), oracle::min_entropy_l3(c), 1e-9) << c;
  }
}

TEST(ShannonFloorMulti, Examples) {
  EXPECT_NEAR(shannon_floor_multi(3, 2, 2.0), 2.0, 1e-12);
  EXPECT_NEAR(shannon_floor_multi(2, 2, 1.0), 2.0, 1e-12);
  EXPECT_NEAR(shannon_floor_multi(4, 3, 2.0), 4.0, 1e-12);
  for (int theta = 2; theta <= 5; ++theta) {
    for (int l = 2; l <= 5; ++l) {
      EXPECT_NEAR(shannon_floor_multi(theta, l, static_cast<double>(theta) / l),
                  theta * std::log2(static_cast<double>(l)), 1e-12);
      EXPECT_NEAR(shannon_floor_multi(theta, l, theta), 0.0, 1e-12);
    }
  }
}

TEST(ShannonFloorMulti, RejectsOutOfRange) {
  EXPECT_THROW(shannon_floor_multi(3, 2, 1.0), ValidationError);
  EXPECT_THROW(shannon_floor_multi(3, 2, 3.5), ValidationError);
}

TEST(ShannonFloorMulti, NonincreasingInTotalIc) {
  for (int theta : {2, 3, 4}) {
    for (int l : {2, 3, 4}) {
      double prev = INFINITY;
      for (int i = 0; i <= 400; ++i) {
        const double c = static_cast<double>(theta) / l + (theta - static_cast<double>(theta) / l) * i / 400.0;
        const double v = shannon_floor_multi(theta, l, c);
        EXPECT_LE(v, prev + 1e-12);
        prev = v;
      }
    }
  }
}

TEST(ShannonFloorMulti, SaturatingConfigurationAttainsBound) {
  std::mt19937_64 gen(21);
  for (int theta : {2, 3, 4}) {
    for (int l : {2, 3, 4}) {
      std::uniform_real_distribution<double> u(static_cast<double>(theta) / l, theta);
      for (int rep = 0; rep < 20; ++rep) {
        const double c = u(gen);
        const int n = static_cast<int>(std::ceil(theta / c - 1e-12));
        int k = n > 1 ? static_cast<int>(std::floor(n * (n - 1) * (c - static_cast<double>(theta) / n) + 1e-12)) : 0;
        k = std::clamp(k, 0, theta - 1);
        EXPECT_NEAR(oracle::saturating_configuration_entropy(theta, n, k, c),
                    shannon_floor_multi(theta, l, c), 1e-9)
            << theta << " " << l << " " << c;
      }
    }
  }
}

TEST(ShannonFloorMulti, BruteForceSplitOracle) {
  std::mt19937_64 gen(4242);
  for (int theta : {2, 3}) {
    for (int l : {2, 3}) {
      std::uniform_real_distribution<double> u(static_cast<double>(theta) / l, theta);
      for (int rep = 0; rep < 3; ++rep) {
        const double c = u(gen);
        const double d = shannon_floor_multi(theta, l, c);
        const double brute = oracle::brute_multi_floor(theta, l, c);
        EXPECT_GE(brute, d - 1e-6) << theta << " " << l << " " << c;
        EXPECT_LE(brute, d + 1e-6) << theta << " " << l << " " << c;
      }
    }
  }
}

TEST(BinaryEntropy, Examples) {
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.3), binary_entropy(0.7), 1e-15);
  EXPECT_NEAR(binary_entropy((1.0 + 1.0 / std::sqrt(3.0)) / 2.0), 0.74400755124900139, 1e-12);
  EXPECT_THROW(binary_entropy(-0.1), ValidationError);
  EXPECT_THROW(binary_entropy(1.1), ValidationError);
}

TEST(Snapping, FloorAndCeilNearIntegers) {
  EXPECT_EQ(snapped_floor(2.9999999999), 3);
  EXPECT_EQ(snapped_ceil(3.0000000001), 3);
  EXPECT_EQ(snapped_floor(2.5), 2);
  EXPECT_EQ(snapped_ceil(2.5), 3);
  EXPECT_EQ(snapped_floor(1.0 / (1.0 / 3.0)), 3);
}

// --- properties -------------------------------------------------------------

TEST(EntropyProperties, QAlphaLowerBoundsRenyiEntropy) {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 20000; ++i) {
    const int l = 2 + i % 5;
    auto p = oracle::random_simplex(l, gen);
    if (i % 7 == 0) p[0] += 3.0;  // bias towards peaked distributions
    double s = 0;
    for (double x : p) s += x;
    for (double& x : p) x /= s;
    const double c = std::clamp(index_of_coincidence(p), 1.0 / l, 1.0);
    for (RenyiOrder a : {RenyiOrder(2.0), RenyiOrder(3.0), RenyiOrder(5.0), kInf}) {
      ASSERT_GE(renyi_entropy(p, a), q_alpha_estimate(l, c, a) - 1e-9) << l << " " << a.label();
    }
    ASSERT_GE(shannon_entropy(p), q_one_estimate(c) - 1e-9);
    ASSERT_GE(shannon_entropy(p), shannon_floor_h(c) - 1e-9);
  }
}

TEST(EntropyProperties, QAlphaConvexInC) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const int l = 2 + i % 5;
    double c[3];
    for (double& x : c) x = 1.0 / l + (1.0 - 1.0 / l) * u(gen);
    std::sort(c, c + 3);
    if (c[2] - c[0] < 1e-9) continue;
    const double t = (c[1] - c[0]) / (c[2] - c[0]);
    for (RenyiOrder a : {RenyiOrder(2.0), RenyiOrder(3.0), RenyiOrder(5.0), kInf}) {
      const double chord = (1 - t) * q_alpha_estimate(l, c[0], a) + t * q_alpha_estimate(l, c[2], a);
      ASSERT_LE(q_alpha_estimate(l, c[1], a), chord + 1e-9) << l << " " << a.label();
    }
  }
}

TEST(EntropyProperties, HDominatesQOneAndIsMonotone) {
  double prev = INFINITY;
  for (int i = 0; i <= 20000; ++i) {
    const double c = 1.0 / 64 + (1.0 - 1.0 / 64) * i / 20000.0;
    const double h = shannon_floor_h(c);
    ASSERT_GE(h, q_one_estimate(c) - 1e-9) << c;
    ASSERT_LE(h, prev + 1e-12) << c;
    prev = h;
  }
}

TEST(EntropyProperties, HConcaveBetweenInverseIntegers) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 1; k <= 8; ++k) {
    const double lo = 1.0 / (k + 1), hi = 1.0 / k;
    for (int i = 0; i < 2000; ++i) {
      double c[3] = {lo + (hi - lo) * u(gen), lo + (hi - lo) * u(gen), lo + (hi - lo) * u(gen)};
      std::sort(c, c + 3);
      if (c[2] - c[0] < 1e-9) continue;
      const double t = (c[1] - c[0]) / (c[2] - c[0]);
      const double chord = (1 - t) * shannon_floor_h(c[0]) + t * shannon_floor_h(c[2]);
      ASSERT_GE(shannon_floor_h(c[1]), chord - 1e-9) << k;
    }
  }
}

TEST(EntropyProperties, ExchangeInequalitiesBetweenInverseIntegers) {
  // For k1 > k2 >= 1:
  //   h(1/k1) + h(1/k2 + s) >= h(1/k1 + s) + h(1/k2),  0 <= s <= 1/(k1-1) - 1/k1
  //   h(1/k1 - s) + h(1/k2) >= h(1/k1) + h(1/k2 - s),  0 <= s <= 1/k1 - 1/(k1+1)
  // The first is checked where 1/k2 + s stays a valid IC value.
  for (int k1 = 2; k1 <= 8; ++k1) {
    for (int k2 = 1; k2 < k1; ++k2) {
      const double s1 = 1.0 / (k1 - 1) - 1.0 / k1;
      const double s2 = 1.0 / k1 - 1.0 / (k1 + 1);
      for (int i = 0; i <= 200; ++i) {
        const double s = s1 * i / 200.0;
        if (1.0 / k2 + s <= 1.0) {
          ASSERT_GE(shannon_floor_h(1.0 / k1) + shannon_floor_h(1.0 / k2 + s),
                    shannon_floor_h(1.0 / k1 + s) + shannon_floor_h(1.0 / k2) - 1e-12)
              << k1 << " " << k2 << " " << s;
        }
        const double t = s2 * i / 200.0;
        ASSERT_GE(shannon_floor_h(1.0 / k1 - t) + shannon_floor_h(1.0 / k2),
                  shannon_floor_h(1.0 / k1) + shannon_floor_h(1.0 / k2 - t) - 1e-12)
            << k1 << " " << k2 << " " << t;
      }
    }
  }
}

}  // namespace
}  // namespace weur
