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

// View operators live on H_d (x) H_d. For an effect M the traceless part
// M~ = M - Tr(M)/d * 1 is mapped to the vector sqrt(d) (M~ (x) 1)|psi_d>,
// |psi_d> = d^{-1/2} sum_i |i>|i>*, whose components are simply the entries
// of M~ in row-major order. G(M) sums the projectors onto those vectors.
//
// Operators are stored densely on the full d^2-dimensional space; the
// |psi_d> direction is always in the kernel.

#pragma once

#include <span>
#include <vector>

#include "weur/qmat.hpp"

namespace weur {

struct ViewOperator {
  int dim = 0;            // d of the underlying system
  ComplexMatrix matrix;   // d^2 x d^2, Hermitian PSD
};

/// |psi_d> on the product space, as a length-d^2 vector.
ComplexVector maximally_entangled_vector(int d);

/// Row-major vectorization of M - Tr(M)/d * 1.
ComplexVector traceless_vector(const ComplexMatrix& effect);

ViewOperator view_operator(const Povm& m);

/// g = sum_theta w_theta G(M_theta).
ViewOperator average_view(const WeightedEnsemble& e);

/// G_tot = sum_theta G(M_theta).
ViewOperator total_view(std::span<const Povm> povms);

/// Largest eigenvalue.
double operator_norm(const ViewOperator& v);

/// Descending spectrum.
std::vector<double> view_spectrum(const ViewOperator& v);

/// W_{(i,theta),(j,theta')} = Tr(M_{i|theta} M_{j|theta'}), blocks ordered by
/// POVM then outcome.
RealMatrix overlap_matrix(std::span<const Povm> povms);

/// X_tot = Theta - ||G_tot||.
double exclusivity(std::span<const Povm> povms);

struct ViewReport {
  double g_avg_norm = 0.0;
  double g_tot_norm = 0.0;
  double exclusivity = 0.0;
  std::vector<double> g_avg_spectrum;
  std::vector<double> g_tot_spectrum;
};

ViewReport view_report(const WeightedEnsemble& e);

}  // namespace weur
