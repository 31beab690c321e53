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

// Dense complex matrix foundation: validated states, POVMs, weighted
// measurement ensembles, Born-rule probabilities and the Hermitian
// eigendecomposition every other module leans on.

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weur/errors.hpp"

namespace weur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Outcome distribution of one measurement. Nonnegative, sums to one.
using ProbVector = std::vector<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kEqualTraceTol = 1e-9;
inline constexpr double kWeightSumTol = 1e-12;
inline constexpr double kProbabilityClampTol = 1e-10;
inline constexpr int kMaxDimension = 64;

/// Largest entrywise |A - A^dagger|.
double hermiticity_defect(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order and
/// eigenvectors as orthonormal columns in matching order.
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;
};

/// Throws ValidationError when `m` is not square or not Hermitian within
/// kHermitianTol.
HermitianEigen hermitian_eigs(const ComplexMatrix& m);

/// Eigenvalues only (descending); same preconditions as hermitian_eigs.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double largest_eigenvalue(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Density matrix: Hermitian, positive semidefinite, unit trace.
class DensityState {
 public:
  explicit DensityState(ComplexMatrix rho);

  /// |psi><psi| / <psi|psi>.
  static DensityState pure(const ComplexVector& psi);
  static DensityState maximally_mixed(int d);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const { return rho_; }
  double purity() const;

 private:
  ComplexMatrix rho_;
};

/// Generalized measurement: PSD effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects);

  /// Rank-1 projective measurement onto the columns of `basis`, which must
  /// be orthonormal.
  static Povm from_basis(const ComplexMatrix& basis);

  int dim() const { return static_cast<int>(effects_.front().rows()); }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(int i) const { return effects_[static_cast<std::size_t>(i)]; }

  /// True iff every effect has the same trace (ETE-POVM).
  bool equal_trace() const { return equal_trace_; }
  /// True iff l == d and every effect is a trace-one projector.
  bool is_rank1_projective() const { return rank1_projective_; }

 private:
  std::vector<ComplexMatrix> effects_;
  bool equal_trace_ = false;
  bool rank1_projective_ = false;
};

/// A measurement scenario {M_theta, w_theta}: POVMs with common dimension and
/// outcome count, chosen with positive probabilities that sum to one.
class WeightedEnsemble {
 public:
  WeightedEnsemble(std::vector<Povm> povms, std::vector<double> weights);

  /// Equal weights 1/Theta.
  static WeightedEnsemble uniform(std::vector<Povm> povms);

  int dim() const { return povms_.front().dim(); }
  int outcomes() const { return povms_.front().outcomes(); }
  int size() const { return static_cast<int>(povms_.size()); }
  const std::vector<Povm>& povms() const { return povms_; }
  const std::vector<double>& weights() const { return weights_; }

  bool equal_trace() const;
  bool rank1_projective() const;
  bool equal_weights() const;

 private:
  std::vector<Povm> povms_;
  std::vector<double> weights_;
};

/// p_i = Re Tr(M_i rho). Values in (-1e-10, 0) are clamped to zero and the
/// vector renormalized; anything more negative is a ValidationError.
ProbVector born_probabilities(const Povm& m, const DensityState& s);

/// Born probabilities for the pure state psi/|psi| without forming rho.
ProbVector born_probabilities(const Povm& m, const ComplexVector& psi);

/// I_com(rho) = Tr(rho^2) - 1/d.
double invariant_information(const DensityState& s);

/// -Tr(rho log2 rho), with 0 log 0 = 0.
double von_neumann_entropy(const DensityState& s);

struct Diagnostic {
  std::string code;     // machine-readable tag, e.g. "weight_sum"
  std::string message;
  int povm = -1;        // offending POVM index, -1 if not applicable
  int effect = -1;      // offending effect index, -1 if not applicable
};

struct EnsembleDiagnostics {
  std::vector<Diagnostic> failures;
  std::vector<bool> equal_trace;  // per POVM, meaningful when shapes are sane

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// Checks every ensemble invariant on raw data and reports each violation
/// with its index instead of throwing.
EnsembleDiagnostics validate_ensemble(
    std::span<const std::vector<ComplexMatrix>> povms,
    std::span<const double> weights);

/// Per-POVM subset of validate_ensemble, tagging failures with `povm_index`.
void validate_povm_effects(std::span<const ComplexMatrix> effects,
                           int povm_index,
                           std::vector<Diagnostic>& out);

}  // namespace weur
