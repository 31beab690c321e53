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

#include "weur/viewop.hpp"

#include <algorithm>
#include <cmath>

namespace weur {
namespace {

void accumulate(const Povm& m, double scale, ComplexMatrix& acc) {
  for (const auto& e : m.effects()) {
    const ComplexVector v = traceless_vector(e);
    acc.noalias() += scale * (v * v.adjoint());
  }
}

void require_common_dim(std::span<const Povm> povms) {
  if (povms.empty()) throw ValidationError("need at least one POVM");
  const int d = povms.front().dim();
  for (const auto& p : povms) {
    if (p.dim() != d) throw ValidationError("POVMs have different dimensions");
  }
}

}  // namespace

ComplexVector maximally_entangled_vector(int d) {
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi(static_cast<Eigen::Index>(i) * d + i) = amp;
  return psi;
}

ComplexVector traceless_vector(const ComplexMatrix& effect) {
  const auto d = effect.rows();
  ComplexMatrix t = effect;
  t.diagonal().array() -= effect.trace() / static_cast<double>(d);
  // Component (a, b) of sqrt(d)(T (x) 1)|psi_d> is T_ab with conj(|b>) = |b>.
  ComplexVector v(d * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) v(a * d + b) = t(a, b);
  }
  return v;
}

ViewOperator view_operator(const Povm& m) {
  const auto n = static_cast<Eigen::Index>(m.dim()) * m.dim();
  ViewOperator out{m.dim(), ComplexMatrix::Zero(n, n)};
  accumulate(m, 1.0, out.matrix);
  return out;
}

ViewOperator average_view(const WeightedEnsemble& e) {
  const auto n = static_cast<Eigen::Index>(e.dim()) * e.dim();
  ViewOperator out{e.dim(), ComplexMatrix::Zero(n, n)};
  for (int t = 0; t < e.size(); ++t) {
    accumulate(e.povms()[static_cast<std::size_t>(t)], e.weights()[static_cast<std::size_t>(t)],
               out.matrix);
  }
  return out;
}

ViewOperator total_view(std::span<const Povm> povms) {
  require_common_dim(povms);
  const int d = povms.front().dim();
  const auto n = static_cast<Eigen::Index>(d) * d;
  ViewOperator out{d, ComplexMatrix::Zero(n, n)};
  for (const auto& p : povms) accumulate(p, 1.0, out.matrix);
  return out;
}

double operator_norm(const ViewOperator& v) {
  return std::max(0.0, largest_eigenvalue(v.matrix));
}

std::vector<double> view_spectrum(const ViewOperator& v) {
  const RealVector ev = hermitian_eigenvalues(v.matrix);
  return {ev.data(), ev.data() + ev.size()};
}

RealMatrix overlap_matrix(std::span<const Povm> povms) {
  require_common_dim(povms);
  std::vector<const ComplexMatrix*> effects;
  for (const auto& p : povms) {
    for (const auto& e : p.effects()) effects.push_back(&e);
  }
  const auto n = static_cast<Eigen::Index>(effects.size());
  RealMatrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      // Tr(A B) = sum_ab A_ab B_ba
      const double x =
          effects[i]->cwiseProduct(effects[j]->transpose()).sum().real();
      w(i, j) = x;
      w(j, i) = x;
    }
  }
  return w;
}

double exclusivity(std::span<const Povm> povms) {
  return static_cast<double>(povms.size()) - operator_norm(total_view(povms));
}

ViewReport view_report(const WeightedEnsemble& e) {
  ViewReport r;
  const auto avg = average_view(e);
  const auto tot = total_view(e.povms());
  r.g_avg_spectrum = view_spectrum(avg);
  r.g_tot_spectrum = view_spectrum(tot);
  r.g_avg_norm = std::max(0.0, r.g_avg_spectrum.front());
  r.g_tot_norm = std::max(0.0, r.g_tot_spectrum.front());
  r.exclusivity = static_cast<double>(e.size()) - r.g_tot_norm;
  return r;
}

}  // namespace weur
