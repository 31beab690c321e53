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

#include "weur/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "weur/errors.hpp"

namespace weur {
namespace {

constexpr double kSnapTol = 1e-9;
constexpr double kRangeTol = 1e-12;

void require_ic_range(double c, double lo, double hi, const char* what) {
  if (!std::isfinite(c) || c < lo - kRangeTol || c > hi + kRangeTol) {
    std::ostringstream os;
    os << what << ": IC value " << c << " outside [" << lo << ", " << hi << "]";
    throw ValidationError(os.str());
  }
}

}  // namespace

RenyiOrder RenyiOrder::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "+inf" || text == "min") {
    return infinity();
  }
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("cannot parse Renyi order '" + std::string(text) + "'");
  }
  if (std::isinf(v) && v > 0) return infinity();
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError("Renyi order must be positive");
  }
  return RenyiOrder(v);
}

std::string RenyiOrder::label() const {
  if (infinite_) return "inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) h -= xlog2x(x);
  return std::max(h, 0.0);
}

double renyi_entropy(std::span<const double> p, RenyiOrder alpha) {
  if (alpha.is_infinite()) {
    const double pmax = *std::max_element(p.begin(), p.end());
    return std::max(0.0, -std::log2(pmax));
  }
  const double a = alpha.value();
  if (!(a > 0.0)) throw ValidationError("Renyi order must be positive");
  if (alpha.is_shannon()) return shannon_entropy(p);
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, a);
  }
  return std::max(0.0, std::log2(s) / (1.0 - a));
}

double index_of_coincidence(std::span<const double> p) {
  double c = 0.0;
  for (double x : p) c += x * x;
  return c;
}

long long snapped_floor(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < kSnapTol) return static_cast<long long>(r);
  return static_cast<long long>(std::floor(x));
}

long long snapped_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < kSnapTol) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

double q_alpha_estimate(int l, double c, RenyiOrder alpha) {
  if (l < 2) throw ValidationError("q_alpha_estimate: need l >= 2");
  if (!alpha.is_infinite() && !(alpha.value() >= 2.0)) {
    throw ValidationError("q_alpha_estimate: only defined for alpha >= 2");
  }
  const double ld = static_cast<double>(l);
  require_ic_range(c, 1.0 / ld, 1.0, "q_alpha_estimate");
  const double excess = std::max(0.0, ld * c - 1.0);
  const double pa = std::min(1.0, (1.0 + std::sqrt(excess * (ld - 1.0))) / ld);
  const double pb = std::max(0.0, (1.0 - std::sqrt(excess / (ld - 1.0))) / ld);
  if (alpha.is_infinite()) return std::max(0.0, -std::log2(pa));

  const double a = alpha.value();
  const double spread = std::pow(ld - 1.0, 2.0 / a);
  const double ratio = pb / pa;
  const double first = a * std::log2(pa) / (1.0 - a);
  const double second = std::log2(ld) * std::log2(1.0 + spread * ratio * ratio) /
                        ((1.0 - a) * std::log2(1.0 + spread));
  return std::max(0.0, first + second);
}

double q_one_estimate(double c) {
  require_ic_range(c, 0.0, 1.0, "q_one_estimate");
  if (!(c > 0.0)) throw ValidationError("q_one_estimate: IC must be positive");
  const long long n = std::max(1LL, snapped_floor(1.0 / c));
  const double nd = static_cast<double>(n);
  const double q = std::log2(nd) - (nd + 1.0) * (nd * c - 1.0) * std::log2(1.0 + 1.0 / nd);
  return std::max(0.0, q);
}

double shannon_floor_h(double c) {
  require_ic_range(c, 0.0, 1.0, "shannon_floor_h");
  if (!(c > 0.0)) throw ValidationError("shannon_floor_h: IC must be positive");
  const long long n = std::max(1LL, snapped_ceil(1.0 / c));
  if (n == 1) return 0.0;
  const double nd = static_cast<double>(n);
  const double excess = std::max(0.0, c * nd - 1.0);
  const double pa = 1.0 / nd + std::sqrt(excess / (nd - 1.0)) / nd;
  const double pb = std::max(0.0, 1.0 / nd - std::sqrt(excess * (nd - 1.0)) / nd);
  return std::max(0.0, -(nd - 1.0) * xlog2x(pa) - xlog2x(pb));
}

double shannon_floor_multi(int theta, int l, double c_tot) {
  if (theta < 1 || l < 2) {
    throw ValidationError("shannon_floor_multi: need theta >= 1 and l >= 2");
  }
  const double td = static_cast<double>(theta);
  const double lo = td / static_cast<double>(l);
  if (!std::isfinite(c_tot) || c_tot < lo - 1e-9 || c_tot > td + 1e-9) {
    std::ostringstream os;
    os << "shannon_floor_multi: total IC " << c_tot << " outside [" << lo << ", " << td << "]";
    throw ValidationError(os.str());
  }
  c_tot = std::clamp(c_tot, lo, td);
  const long long n = std::max(1LL, snapped_ceil(td / c_tot));
  if (n == 1) return 0.0;
  const double nd = static_cast<double>(n);
  const long long k = std::clamp(snapped_floor(nd * (nd - 1.0) * (c_tot - td / nd)), 0LL,
                                 static_cast<long long>(theta) - 1);
  const double kd = static_cast<double>(k);
  // The remaining distribution interpolates between U_n and U_{n-1}.
  const double rest =
      std::clamp(c_tot - (td - kd - 1.0) / nd - kd / (nd - 1.0), 1.0 / nd, 1.0 / (nd - 1.0));
  const double log_n1 = n > 2 ? std::log2(nd - 1.0) : 0.0;
  return (td - kd - 1.0) * std::log2(nd) + kd * log_n1 + shannon_floor_h(rest);
}

double binary_entropy(double p) {
  if (!(p >= -kRangeTol && p <= 1.0 + kRangeTol)) {
    throw ValidationError("binary_entropy: probability outside [0, 1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

}  // namespace weur
