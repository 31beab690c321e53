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

// Measurement families: Pauli bases, parametric qubit observables, prime
// dimension MUBs, the four-basis qutrit family, Haar-random bases and white
// noise smearing. Every constructor returns validated, equal-weight
// ensembles unless weights are passed explicitly.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "weur/qmat.hpp"

namespace weur {

using BlochVector = std::array<double, 3>;

/// Eigenbasis of n.sigma: effects (1 + n.sigma)/2 and (1 - n.sigma)/2 for a
/// unit Bloch vector n (normalized internally).
Povm qubit_basis(const BlochVector& n);

/// One basis per Bloch vector, equal weights.
WeightedEnsemble qubit_observables(std::span<const BlochVector> directions);

/// sigma_x, sigma_y, sigma_z eigenbases with equal weights.
WeightedEnsemble pauli_triple();

/// {cos b1 sx + sin b1 sz, cos b2 sy + sin b2 sz, sz}. The studied branches
/// are b1 = 0, 0 <= b2 < pi/2 and b2 = pi/2, 0 < b1 <= pi/2, but any reals
/// are accepted.
WeightedEnsemble qubit_family(double beta1, double beta2);
std::array<BlochVector, 3> qubit_family_directions(double beta1, double beta2);

bool is_prime(int n);

/// Computational basis followed by count-1 Fourier-type bases with
/// quadratic phases (d odd prime) or the |+-> and |+-i> bases (d = 2).
/// Requires prime d and 2 <= count <= d + 1.
WeightedEnsemble mub_family(int d, int count);

/// Diagonal phase matrix used to generate the second and third qutrit bases.
enum class QutritPhase {
  kRepeated,  // diag(1, w, w): the quadratic-phase choice that yields MUBs
  kLinear,    // diag(1, w, w^2)
};

/// Computational basis plus the columns of F^t, E F^t, E^2 F^t with
/// t = 4 beta / pi and F the 3x3 DFT. Fractional powers use the principal
/// eigenphase branch (-pi, pi]. beta must lie in [0, pi/4].
WeightedEnsemble qutrit_four_bases(double beta, QutritPhase phase = QutritPhase::kRepeated);

/// U^t for unitary U, principal branch.
ComplexMatrix unitary_power(const ComplexMatrix& u, double t);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) divided out.
ComplexMatrix haar_unitary(int d, std::mt19937_64& gen);

/// `count` Haar-random orthonormal bases of C^d, equal weights. Fully
/// determined by `seed`.
WeightedEnsemble haar_random_bases(int d, int count, std::uint64_t seed);

/// M_i -> eta M_i + (1 - eta) Tr(M_i)/d * 1.
Povm add_white_noise(const Povm& m, double eta);
WeightedEnsemble add_white_noise(const WeightedEnsemble& e, double eta);

/// Declarative description of one of the families above.
struct BasisSpec {
  enum class Family { kPauli, kQubitFamily, kQubitObservables, kMub, kQutritFour, kHaar };

  Family family = Family::kPauli;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta = 0.0;
  int d = 2;
  int count = 3;
  std::uint64_t seed = 0;
  double eta = 1.0;
  QutritPhase phase = QutritPhase::kRepeated;
  std::vector<BlochVector> directions;
};

/// Builds the family and applies white noise when eta < 1.
WeightedEnsemble make_ensemble(const BasisSpec& spec);

std::string family_name(BasisSpec::Family f);
BasisSpec::Family parse_family(const std::string& name);

}  // namespace weur
