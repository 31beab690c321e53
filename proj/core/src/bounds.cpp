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

#include "weur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace weur {
namespace {

constexpr double kRootSlack = 1e-9;

void require_equal_trace(std::span<const Povm> povms) {
  for (std::size_t t = 0; t < povms.size(); ++t) {
    if (!povms[t].equal_trace()) {
      throw ValidationError("povm " + std::to_string(t) +
                            " does not have equal-trace effects; IC bounds need ETE-POVMs");
    }
  }
}

void require_projective(std::span<const Povm> povms, const char* what) {
  for (std::size_t t = 0; t < povms.size(); ++t) {
    if (!povms[t].is_rank1_projective()) {
      throw ValidationError(std::string(what) + ": povm " + std::to_string(t) +
                            " is not a rank-1 projective measurement");
    }
  }
}

void require_common_shape(std::span<const Povm> povms) {
  if (povms.empty()) throw ValidationError("need at least one POVM");
  for (const auto& p : povms) {
    if (p.dim() != povms.front().dim() || p.outcomes() != povms.front().outcomes()) {
      throw ValidationError("POVMs must share dimension and outcome count");
    }
  }
}

double clamp_icom(double i_com, int d) {
  const double hi = state_independent_icom(d);
  if (!std::isfinite(i_com) || i_com < -1e-9 || i_com > hi + 1e-9) {
    std::ostringstream os;
    os << "I_com = " << i_com << " outside [0, " << hi << "]";
    throw ValidationError(os.str());
  }
  return std::clamp(i_com, 0.0, hi);
}

// Tr(A B) for Hermitian A, B.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

double max_overlap(const Povm& a, const Povm& b) {
  double c = 0.0;
  for (const auto& ea : a.effects()) {
    for (const auto& eb : b.effects()) c = std::max(c, trace_product(ea, eb));
  }
  return std::min(c, 1.0);
}

RealMatrix pair_overlaps(const Povm& a, const Povm& b) {
  RealMatrix c(a.outcomes(), b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) {
    for (int j = 0; j < b.outcomes(); ++j) c(i, j) = trace_product(a.effect(i), b.effect(j));
  }
  return c;
}

}  // namespace

double weighted_information_gain(const WeightedEnsemble& e, const DensityState& s) {
  const double d = static_cast<double>(e.dim());
  double gain = 0.0;
  for (int t = 0; t < e.size(); ++t) {
    const auto& m = e.povms()[static_cast<std::size_t>(t)];
    const auto p = born_probabilities(m, s);
    double sum = 0.0;
    for (int i = 0; i < m.outcomes(); ++i) {
      const double diff = p[static_cast<std::size_t>(i)] - m.effect(i).trace().real() / d;
      sum += diff * diff;
    }
    gain += e.weights()[static_cast<std::size_t>(t)] * sum;
  }
  return gain;
}

double weighted_ic(const WeightedEnsemble& e, const DensityState& s) {
  require_equal_trace(e.povms());
  double c = 0.0;
  for (int t = 0; t < e.size(); ++t) {
    const auto p = born_probabilities(e.povms()[static_cast<std::size_t>(t)], s);
    c += e.weights()[static_cast<std::size_t>(t)] * index_of_coincidence(p);
  }
  return c;
}

double ic_upper_bound(int l, double g_norm, double i_com) {
  const double lo = 1.0 / static_cast<double>(l);
  return std::clamp(lo + g_norm * i_com, lo, 1.0);
}

double q_alpha_from_view(int l, double g_norm, double i_com, RenyiOrder alpha) {
  return q_alpha_estimate(l, ic_upper_bound(l, g_norm, i_com), alpha);
}

double q_one_from_view(int l, double g_norm, double i_com) {
  return q_one_estimate(ic_upper_bound(l, g_norm, i_com));
}

double q_s_from_view(int theta, int l, double g_tot_norm, double i_com) {
  if (theta < 1 || l < 2) throw ValidationError("q_s: need theta >= 1 and l >= 2");
  const double td = static_cast<double>(theta);
  const double c_bar = ic_upper_bound(l, g_tot_norm / td, i_com);
  const long long n = std::max(1LL, snapped_ceil(1.0 / c_bar));
  if (n == 1) return 0.0;  // every distribution deterministic
  const double nd = static_cast<double>(n);
  const long long k = std::clamp(snapped_floor(nd * (nd - 1.0) * (c_bar - 1.0 / nd) * td), 0LL,
                                 static_cast<long long>(theta) - 1);
  const double kd = static_cast<double>(k);

  // (1-p)^2/(n-1) + p^2 = rhs  <=>  n p^2 - 2p + 1 - rhs (n-1) = 0
  const double rhs = td * c_bar - kd / (nd - 1.0) - (td - kd - 1.0) / nd;
  const double disc = (nd - 1.0) * (nd * rhs - 1.0);
  if (disc < -kRootSlack) {
    throw NumericalError("q_s: quadratic for the mixed distribution has no real root");
  }
  double p = (1.0 - std::sqrt(std::max(0.0, disc))) / nd;
  if (p < -kRootSlack || p > 1.0 / nd + kRootSlack) {
    throw NumericalError("q_s: no root of the quadratic lies in [0, 1/n]");
  }
  p = std::clamp(p, 0.0, 1.0 / nd);
  const double log_n1 = n > 2 ? std::log2(nd - 1.0) : 0.0;
  const double mixed = -xlog2x(1.0 - p) + (1.0 - p) * log_n1 - xlog2x(p);
  return kd * log_n1 + (td - kd - 1.0) * std::log2(nd) + mixed;
}

double q_s_qubit_from_view(int theta, double g_tot_norm, double i_com) {
  const double x = 2.0 * g_tot_norm * i_com;
  const long long k = std::clamp(snapped_floor(x), 0LL, static_cast<long long>(theta));
  const double rest = std::max(0.0, x - static_cast<double>(k));
  return binary_entropy(0.5 + 0.5 * std::sqrt(std::min(rest, 1.0))) +
         static_cast<double>(theta) - 1.0 - static_cast<double>(k);
}

double bound_q_alpha(const WeightedEnsemble& e, double i_com, RenyiOrder alpha) {
  require_equal_trace(e.povms());
  if (!alpha.is_infinite() && !(alpha.value() >= 2.0)) {
    throw ValidationError("q_alpha bound requires alpha >= 2");
  }
  i_com = clamp_icom(i_com, e.dim());
  return q_alpha_from_view(e.outcomes(), operator_norm(average_view(e)), i_com, alpha);
}

double bound_q_one(const WeightedEnsemble& e, double i_com) {
  require_equal_trace(e.povms());
  i_com = clamp_icom(i_com, e.dim());
  return q_one_from_view(e.outcomes(), operator_norm(average_view(e)), i_com);
}

double bound_q_s(std::span<const Povm> povms, double i_com) {
  require_common_shape(povms);
  require_equal_trace(povms);
  i_com = clamp_icom(i_com, povms.front().dim());
  return q_s_from_view(static_cast<int>(povms.size()), povms.front().outcomes(),
                       operator_norm(total_view(povms)), i_com);
}

double bound_q_s_qubit(std::span<const Povm> povms, double i_com) {
  require_common_shape(povms);
  if (povms.front().dim() != 2) throw ValidationError("bound_q_s_qubit: dimension must be 2");
  require_projective(povms, "bound_q_s_qubit");
  i_com = clamp_icom(i_com, 2);
  return q_s_qubit_from_view(static_cast<int>(povms.size()), operator_norm(total_view(povms)),
                             i_com);
}

double bound_q_mu(const Povm& a, const Povm& b) {
  const Povm pair[] = {a, b};
  require_common_shape(pair);
  require_projective(pair, "bound_q_mu");
  return std::max(0.0, -std::log2(max_overlap(a, b)));
}

double bound_q_lmf(std::span<const Povm> bases, double s_rho) {
  if (bases.size() < 2) throw ValidationError("bound_q_lmf: need at least two bases");
  require_common_shape(bases);
  require_projective(bases, "bound_q_lmf");
  // v_{i2} = max_{i1} c^{(1,2)}_{i1 i2}, then contract through consecutive pairs.
  RealVector v = pair_overlaps(bases[0], bases[1]).colwise().maxCoeff().transpose();
  for (std::size_t t = 1; t + 1 < bases.size(); ++t) {
    v = pair_overlaps(bases[t], bases[t + 1]).transpose() * v;
  }
  const double b = std::min(1.0, v.maxCoeff());
  return std::max(0.0, -std::log2(b)) + static_cast<double>(bases.size() - 1) * s_rho;
}

double bound_q_lmf_best_order(std::span<const Povm> bases, double s_rho) {
  if (bases.size() > 5) return bound_q_lmf(bases, s_rho);
  std::vector<std::size_t> order(bases.size());
  std::iota(order.begin(), order.end(), 0);
  double best = -INFINITY;
  std::vector<Povm> permuted;
  do {
    permuted.clear();
    for (auto i : order) permuted.push_back(bases[i]);
    best = std::max(best, bound_q_lmf(permuted, s_rho));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

double bound_q_scb(std::span<const Povm> bases, double s_rho) {
  if (bases.size() < 2) throw ValidationError("bound_q_scb: need at least two bases");
  require_common_shape(bases);
  require_projective(bases, "bound_q_scb");
  double sum = 0.0;
  for (std::size_t t = 0; t < bases.size(); ++t) {
    for (std::size_t u = 0; u < t; ++u) sum += std::log2(max_overlap(bases[t], bases[u]));
  }
  const double theta = static_cast<double>(bases.size());
  return std::max(0.0, -sum / (theta - 1.0)) + 0.5 * theta * s_rho;
}

BoundReport compute_bound_report(const WeightedEnsemble& e, const BoundRequest& request) {
  BoundReport r;
  r.dim = e.dim();
  r.outcomes = e.outcomes();
  r.theta = e.size();
  r.weights = e.weights();
  if (request.state && !request.state_independent) {
    if (request.state->dim() != e.dim()) {
      throw ValidationError("state dimension does not match the ensemble");
    }
    r.state_independent = false;
    r.i_com = invariant_information(*request.state);
    r.s_rho = von_neumann_entropy(*request.state);
  } else {
    r.state_independent = true;
    r.i_com = state_independent_icom(e.dim());
    r.s_rho = 0.0;
  }
  const double i_com = clamp_icom(r.i_com, e.dim());

  r.view = view_report(e);

  if (e.equal_trace()) {
    for (const auto& alpha : request.alphas) {
      if (alpha.is_shannon()) continue;
      if (!alpha.is_infinite() && alpha.value() < 2.0) {
        throw ValidationError("q_alpha is only available for alpha = 1 or alpha >= 2");
      }
      r.q_alpha[alpha.label()] =
          q_alpha_from_view(e.outcomes(), r.view.g_avg_norm, i_com, alpha);
    }
    r.q_1 = q_one_from_view(e.outcomes(), r.view.g_avg_norm, i_com);
    r.q_s = q_s_from_view(e.size(), e.outcomes(), r.view.g_tot_norm, i_com);
  }

  if (e.rank1_projective()) {
    if (e.dim() == 2) r.q_s_qubit = q_s_qubit_from_view(e.size(), r.view.g_tot_norm, i_com);
    if (e.size() >= 2) {
      const auto& b = e.povms();
      for (int t = 0; t < e.size(); ++t) {
        for (int u = t + 1; u < e.size(); ++u) {
          r.q_mu.push_back({t, u, bound_q_mu(b[static_cast<std::size_t>(t)],
                                             b[static_cast<std::size_t>(u)])});
        }
      }
      r.q_lmf = bound_q_lmf(b, r.s_rho);
      r.q_lmf_best_order = bound_q_lmf_best_order(b, r.s_rho);
      r.q_scb = bound_q_scb(b, r.s_rho);
    }
  }

  if (request.optimal) {
    for (const auto& alpha : request.alphas) {
      r.b_alpha[alpha.label()] = numerical_optimal_bound(e, alpha, request.optimizer).value;
    }
  }
  return r;
}

}  // namespace weur
