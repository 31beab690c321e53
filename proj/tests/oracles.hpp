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

// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library function it checks.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace weur::oracle {

inline double plain_shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x) / std::log(2.0);
  }
  return h;
}

/// Minimum Shannon entropy over length-3 distributions with IC exactly c,
/// c in [1/3, 1]. Such distributions lie on a circle around the uniform
/// point; the circle is scanned densely, the arc endpoints on the simplex
/// edges are added, and the best scan point is refined by golden section.
inline double min_entropy_l3(double c) {
  c = std::clamp(c, 1.0 / 3.0, 1.0);
  const double r = std::sqrt(std::max(0.0, c - 1.0 / 3.0));
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  auto point = [&](double t) {
    const double u = std::cos(t), v = std::sin(t);
    return std::array<double, 3>{1.0 / 3 + r * (u / s2 + v / s6), 1.0 / 3 + r * (-u / s2 + v / s6),
                                 1.0 / 3 - r * 2.0 * v / s6};
  };
  auto entropy_at = [&](double t) {
    const auto p = point(t);
    if (std::min({p[0], p[1], p[2]}) < 0.0) return std::numeric_limits<double>::infinity();
    return plain_shannon({p[0], p[1], p[2]});
  };

  double best = std::numeric_limits<double>::infinity();
  if (c >= 0.5) {
    const double a = 0.5 * (1.0 + std::sqrt(std::max(0.0, 2.0 * c - 1.0)));
    best = plain_shannon({a, 1.0 - a});
  }
  constexpr int kScan = 720;
  const double step = 2.0 * std::numbers::pi / kScan;
  int best_i = -1;
  for (int i = 0; i < kScan; ++i) {
    const double h = entropy_at(i * step);
    if (h < best) {
      best = h;
      best_i = i;
    }
  }
  if (best_i >= 0) {
    double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
      const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      if (entropy_at(x1) < entropy_at(x2)) {
        hi = x2;
      } else {
        lo = x1;
      }
    }
    best = std::min(best, entropy_at(0.5 * (lo + hi)));
  }
  return best;
}

/// Minimum Shannon entropy of a length-2 distribution with IC c.
inline double min_entropy_l2(double c) {
  c = std::clamp(c, 0.5, 1.0);
  const double a = 0.5 * (1.0 + std::sqrt(std::max(0.0, 2.0 * c - 1.0)));
  return plain_shannon({a, 1.0 - a});
}

inline double min_entropy(int l, double c) { return l == 2 ? min_entropy_l2(c) : min_entropy_l3(c); }

/// min sum_theta H(p_theta) subject to sum_theta c(p_theta) = c_tot for
/// theta in {2, 3}, l in {2, 3}: a dense grid over the IC split, followed by
/// a compass search on the split from the best few grid points.
inline double brute_multi_floor(int theta, int l, double c_tot) {
  const double lo = 1.0 / l;
  auto objective = [&](const std::vector<double>& cs) {
    double last = c_tot;
    double h = 0.0;
    for (double x : cs) {
      if (x < lo - 1e-15 || x > 1.0 + 1e-15) return std::numeric_limits<double>::infinity();
      last -= x;
      h += min_entropy(l, x);
    }
    if (last < lo - 1e-15 || last > 1.0 + 1e-15) return std::numeric_limits<double>::infinity();
    return h + min_entropy(l, last);
  };
  const int free = theta - 1;
  const int grid = free == 1 ? 1000 : 60;
  std::vector<std::pair<double, std::vector<double>>> seeds;
  std::vector<double> cs(static_cast<std::size_t>(free));
  std::function<void(int)> rec = [&](int k) {
    if (k == free) {
      seeds.emplace_back(objective(cs), cs);
      return;
    }
    for (int i = 0; i <= grid; ++i) {
      cs[static_cast<std::size_t>(k)] = lo + (1.0 - lo) * i / grid;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double best = seeds.front().first;
  const std::size_t n_refine = std::min<std::size_t>(8, seeds.size());
  for (std::size_t s = 0; s < n_refine; ++s) {
    std::vector<double> x = seeds[s].second;
    double f = seeds[s].first;
    if (!std::isfinite(f)) continue;
    for (double delta = (1.0 - lo) / grid; delta > 1e-12; delta *= 0.5) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (int k = 0; k < free; ++k) {
          for (double sign : {-1.0, 1.0}) {
            auto y = x;
            y[static_cast<std::size_t>(k)] =
                std::clamp(y[static_cast<std::size_t>(k)] + sign * delta, lo, 1.0);
            const double fy = objective(y);
            if (fy < f) {
              f = fy;
              x = y;
              moved = true;
            }
          }
        }
      }
    }
    best = std::min(best, f);
  }
  return best;
}

/// The distribution with m-1 equal large entries and one small entry that
/// has IC c (m = ceil(1/c)), obtained by solving the two moment equations.
inline std::vector<double> two_level_distribution(double c) {
  int m = static_cast<int>(std::ceil(1.0 / c - 1e-12));
  if (m <= 1) return {1.0};
  // (m-1) a + b = 1, (m-1) a^2 + b^2 = c  =>  quadratic in a.
  const double A = (m - 1) * m, B = -2.0 * (m - 1), C = 1.0 - c;
  const double disc = std::max(0.0, B * B - 4 * A * C);
  const double a = (-B + std::sqrt(disc)) / (2 * A);
  std::vector<double> p(static_cast<std::size_t>(m - 1), a);
  p.push_back(std::max(0.0, 1.0 - (m - 1) * a));
  return p;
}

/// Total Shannon entropy of the configuration
/// (Theta-k-1) x U_n, k x U_{n-1}, one two-level distribution carrying the
/// remaining IC.
inline double saturating_configuration_entropy(int theta, int n, int k, double c_tot) {
  double h = (theta - k - 1) * std::log2(static_cast<double>(n));
  if (n > 1) h += k * std::log2(static_cast<double>(n - 1));
  const double rest = c_tot - (theta - k - 1) / static_cast<double>(n) -
                      (n > 1 ? k / static_cast<double>(n - 1) : 0.0);
  return h + plain_shannon(two_level_distribution(rest));
}

/// p(+/-) = (1 +/- r.n)/2 for the Bloch vector r of a qubit state and a unit
/// measurement direction n.
inline std::array<double, 2> pauli_born(const std::array<double, 3>& r, const std::array<double, 3>& n) {
  const double dot = r[0] * n[0] + r[1] * n[1] + r[2] * n[2];
  return {0.5 * (1.0 + dot), 0.5 * (1.0 - dot)};
}

/// Largest eigenvalue of sum_theta w_theta G(M_theta) through the Gram
/// matrix of the traceless effects, Gram_{(i,t),(j,u)} =
/// sqrt(w_t w_u) Tr(M~_i M~_j): it has the same non-zero spectrum.
inline double gram_view_norm(const std::vector<std::vector<Eigen::MatrixXcd>>& povms,
                             const std::vector<double>& w) {
  std::vector<Eigen::MatrixXcd> tl;
  std::vector<double> ws;
  for (std::size_t t = 0; t < povms.size(); ++t) {
    for (const auto& m : povms[t]) {
      const auto d = m.rows();
      tl.push_back(m - m.trace() / static_cast<double>(d) * Eigen::MatrixXcd::Identity(d, d));
      ws.push_back(w[t]);
    }
  }
  const auto n = static_cast<Eigen::Index>(tl.size());
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = std::sqrt(ws[static_cast<std::size_t>(i)] * ws[static_cast<std::size_t>(j)]) *
                   (tl[static_cast<std::size_t>(i)].adjoint() * tl[static_cast<std::size_t>(j)]).trace();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

/// Random mixed state of dimension d from a Ginibre matrix G: G G^dag / Tr.
inline Eigen::MatrixXcd random_density(int d, std::mt19937_64& gen, int rank = -1) {
  if (rank < 0) rank = d;
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd g(d, rank);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) g(i, j) = {nd(gen), nd(gen)};
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline Eigen::VectorXcd random_pure(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = {nd(gen), nd(gen)};
  return v / v.norm();
}

/// Uniform point on the probability simplex of length l.
inline std::vector<double> random_simplex(int l, std::mt19937_64& gen) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> p(static_cast<std::size_t>(l));
  double s = 0.0;
  for (auto& x : p) s += (x = ex(gen));
  for (auto& x : p) x /= s;
  return p;
}

}  // namespace weur::oracle
