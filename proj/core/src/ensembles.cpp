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

#include "weur/ensembles.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace weur {
namespace {

using std::numbers::pi;

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Complex root_of_unity(int d, long long k) {
  const double phase = 2.0 * pi * static_cast<double>(k % d) / static_cast<double>(d);
  return std::polar(1.0, phase);
}

}  // namespace

Povm qubit_basis(const BlochVector& n) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw ValidationError("Bloch direction must be non-zero and finite");
  }
  const ComplexMatrix obs = (n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z()) / len;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return Povm({0.5 * (id + obs), 0.5 * (id - obs)});
}

WeightedEnsemble qubit_observables(std::span<const BlochVector> directions) {
  std::vector<Povm> bases;
  bases.reserve(directions.size());
  for (const auto& n : directions) bases.push_back(qubit_basis(n));
  return WeightedEnsemble::uniform(std::move(bases));
}

WeightedEnsemble pauli_triple() {
  const BlochVector dirs[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return qubit_observables(dirs);
}

std::array<BlochVector, 3> qubit_family_directions(double beta1, double beta2) {
  return {{{std::cos(beta1), 0.0, std::sin(beta1)},
           {0.0, std::cos(beta2), std::sin(beta2)},
           {0.0, 0.0, 1.0}}};
}

WeightedEnsemble qubit_family(double beta1, double beta2) {
  const auto dirs = qubit_family_directions(beta1, beta2);
  return qubit_observables(dirs);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

WeightedEnsemble mub_family(int d, int count) {
  if (!is_prime(d)) throw ValidationError("mub_family: dimension must be prime");
  if (d > kMaxDimension) throw ValidationError("mub_family: dimension exceeds 64");
  if (count < 2 || count > d + 1) {
    throw ValidationError("mub_family: count must be in [2, d+1]");
  }
  std::vector<Povm> bases;
  bases.push_back(Povm::from_basis(ComplexMatrix::Identity(d, d)));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a + 1 < count; ++a) {
    ComplexMatrix u(d, d);
    for (int b = 0; b < d; ++b) {
      for (int j = 0; j < d; ++j) {
        Complex phase;
        if (d == 2) {
          // |0> + (-1)^b i^a |1>
          phase = j == 0 ? Complex(1, 0)
                         : (b ? -1.0 : 1.0) * (a ? Complex(0, 1) : Complex(1, 0));
        } else {
          phase = root_of_unity(d, static_cast<long long>(a) * j * j + static_cast<long long>(b) * j);
        }
        u(j, b) = amp * phase;
      }
    }
    bases.push_back(Povm::from_basis(u));
  }
  return WeightedEnsemble::uniform(std::move(bases));
}

ComplexMatrix unitary_power(const ComplexMatrix& u, double t) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("unitary_power: eigendecomposition failed");
  }
  const ComplexVector lambda = solver.eigenvalues();
  ComplexVector powered(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    double phase = std::arg(lambda(k));
    if (phase <= -pi + 1e-12) phase = pi;  // principal branch (-pi, pi]
    powered(k) = std::polar(1.0, t * phase);
  }
  const ComplexMatrix& v = solver.eigenvectors();
  ComplexMatrix out = v * powered.asDiagonal() * v.inverse();
  // Clean up round-off so the columns are orthonormal to machine precision.
  Eigen::HouseholderQR<ComplexMatrix> qr(out);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(u.rows(), u.cols());
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex rk = r(k, k);
    if (std::abs(rk) > 0.0) q.col(k) *= rk / std::abs(rk);
  }
  return q;
}

WeightedEnsemble qutrit_four_bases(double beta, QutritPhase phase) {
  if (!(beta >= -1e-12 && beta <= pi / 4.0 + 1e-12)) {
    throw ValidationError("qutrit_four_bases: beta must lie in [0, pi/4]");
  }
  const double t = 4.0 * beta / pi;
  ComplexMatrix f(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) f(j, k) = root_of_unity(3, j * k) / std::sqrt(3.0);
  }
  ComplexMatrix e = ComplexMatrix::Zero(3, 3);
  e(0, 0) = 1.0;
  e(1, 1) = root_of_unity(3, 1);
  e(2, 2) = phase == QutritPhase::kRepeated ? root_of_unity(3, 1) : root_of_unity(3, 2);

  const ComplexMatrix ft = unitary_power(f, t);
  std::vector<Povm> bases;
  bases.push_back(Povm::from_basis(ComplexMatrix::Identity(3, 3)));
  bases.push_back(Povm::from_basis(ft));
  bases.push_back(Povm::from_basis(e * ft));
  bases.push_back(Povm::from_basis(e * e * ft));
  return WeightedEnsemble::uniform(std::move(bases));
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex rk = r(k, k);
    if (std::abs(rk) > 0.0) q.col(k) *= rk / std::abs(rk);
  }
  return q;
}

WeightedEnsemble haar_random_bases(int d, int count, std::uint64_t seed) {
  if (d < 2 || d > kMaxDimension) throw ValidationError("haar_random_bases: need 2 <= d <= 64");
  if (count < 1) throw ValidationError("haar_random_bases: count must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<Povm> bases;
  bases.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) bases.push_back(Povm::from_basis(haar_unitary(d, gen)));
  return WeightedEnsemble::uniform(std::move(bases));
}

Povm add_white_noise(const Povm& m, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ValidationError("noise visibility eta must be in [0, 1]");
  const int d = m.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  std::vector<ComplexMatrix> effects;
  effects.reserve(static_cast<std::size_t>(m.outcomes()));
  for (const auto& e : m.effects()) {
    effects.emplace_back(eta * e + (1.0 - eta) * (e.trace().real() / d) * id);
  }
  return Povm(std::move(effects));
}

WeightedEnsemble add_white_noise(const WeightedEnsemble& e, double eta) {
  std::vector<Povm> noisy;
  noisy.reserve(e.povms().size());
  for (const auto& m : e.povms()) noisy.push_back(add_white_noise(m, eta));
  return WeightedEnsemble(std::move(noisy), e.weights());
}

WeightedEnsemble make_ensemble(const BasisSpec& spec) {
  using F = BasisSpec::Family;
  WeightedEnsemble e = [&] {
    switch (spec.family) {
      case F::kPauli: return pauli_triple();
      case F::kQubitFamily: return qubit_family(spec.beta1, spec.beta2);
      case F::kQubitObservables: return qubit_observables(spec.directions);
      case F::kMub: return mub_family(spec.d, spec.count);
      case F::kQutritFour: return qutrit_four_bases(spec.beta, spec.phase);
      case F::kHaar: return haar_random_bases(spec.d, spec.count, spec.seed);
    }
    throw ValidationError("unknown family");
  }();
  if (spec.eta < 1.0) return add_white_noise(e, spec.eta);
  return e;
}

std::string family_name(BasisSpec::Family f) {
  using F = BasisSpec::Family;
  switch (f) {
    case F::kPauli: return "pauli";
    case F::kQubitFamily: return "qubit_family";
    case F::kQubitObservables: return "qubit_observables";
    case F::kMub: return "mub";
    case F::kQutritFour: return "qutrit_four_bases";
    case F::kHaar: return "haar";
  }
  return "unknown";
}

BasisSpec::Family parse_family(const std::string& name) {
  using F = BasisSpec::Family;
  for (F f : {F::kPauli, F::kQubitFamily, F::kQubitObservables, F::kMub, F::kQutritFour, F::kHaar}) {
    if (family_name(f) == name) return f;
  }
  throw ValidationError("unknown measurement family '" + name + "'");
}

}  // namespace weur
