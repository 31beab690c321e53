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

// Entropies of distributions and the index-of-coincidence (IC) machinery
// that turns an upper bound on IC into a lower bound on entropy.
//
// All logarithms are base 2 and 0 log 0 = 0 throughout.

#pragma once

#include <span>
#include <string>
#include <string_view>

namespace weur {

/// Order alpha of a Renyi entropy. Infinity is a distinct state rather than a
/// large float, and alpha == 1 means Shannon.
class RenyiOrder {
 public:
  constexpr explicit RenyiOrder(double alpha) : value_(alpha), infinite_(false) {}

  static constexpr RenyiOrder infinity() { return RenyiOrder(); }
  static constexpr RenyiOrder shannon() { return RenyiOrder(1.0); }

  /// Accepts a positive number, or "inf" / "infinity" / "min".
  static RenyiOrder parse(std::string_view text);

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_shannon() const { return !infinite_ && value_ == 1.0; }
  /// Only meaningful when !is_infinite().
  constexpr double value() const { return value_; }

  /// "1", "2", "inf", ... Used for report keys and CSV column names.
  std::string label() const;

  friend constexpr bool operator==(RenyiOrder a, RenyiOrder b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  constexpr RenyiOrder() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);

double shannon_entropy(std::span<const double> p);

/// H_alpha(p); alpha = 1 is Shannon and alpha = inf is -log2 max_i p_i.
/// Throws ValidationError for alpha <= 0.
double renyi_entropy(std::span<const double> p, RenyiOrder alpha);

/// c(p) = sum_i p_i^2, in [1/l, 1].
double index_of_coincidence(std::span<const double> p);

/// Convex lower estimate Q_alpha(l, c) of the alpha-entropy of any length-l
/// distribution with IC c. Valid for alpha >= 2 (including infinity); other
/// orders are rejected with ValidationError. Q_2 = -log2 c exactly.
double q_alpha_estimate(int l, double c, RenyiOrder alpha);

/// Piecewise-linear Shannon estimate through the points (1/n, log2 n):
/// Q_1(c) = log2 n - (n+1)(nc-1) log2(1+1/n), n = floor(1/c).
double q_one_estimate(double c);

/// Minimum Shannon entropy over all distributions with IC exactly c,
/// attained by (n-1) entries p_a and one entry p_b with n = ceil(1/c).
/// h(1/k) = log2 k.
double shannon_floor_h(double c);

/// Minimum of sum_theta h(c_theta) subject to sum_theta c_theta = c_tot, for
/// Theta distributions of length l. Requires Theta/l <= c_tot <= Theta.
double shannon_floor_multi(int theta, int l, double c_tot);

/// h_bin(p) = -p log2 p - (1-p) log2(1-p).
double binary_entropy(double p);

/// floor/ceil of x after snapping to the nearest integer when within 1e-9.
/// Protects breakpoint formulas from round-off.
long long snapped_floor(double x);
long long snapped_ceil(double x);

}  // namespace weur
