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

#include "weur/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace weur {
namespace {

std::string describe(const std::vector<Diagnostic>& failures) {
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << "; ";
    os << failures[i].message;
  }
  return os.str();
}

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("matrix must be square and non-empty");
  }
  if (!all_finite(m)) throw ValidationError("matrix has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max |A - A^dagger| = " << defect << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

HermitianEigen hermitian_eigs(const ComplexMatrix& m) {
  require_hermitian(m);
  // Symmetrize so round-off in the input does not leak into the spectrum.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition did not converge");
  }
  HermitianEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition did not converge");
  }
  return solver.eigenvalues().reverse();
}

double largest_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m)(0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DensityState

DensityState::DensityState(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_hermitian(rho_);
  if (rho_.rows() > kMaxDimension) {
    throw ValidationError("state dimension exceeds the supported maximum of 64");
  }
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "state trace is " << tr << ", expected 1";
    throw ValidationError(os.str());
  }
  const double min_eig = hermitian_eigenvalues(rho_).minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream os;
    os << "state has negative eigenvalue " << min_eig;
    throw ValidationError(os.str());
  }
}

DensityState DensityState::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("pure state vector must be non-zero and finite");
  }
  const ComplexVector v = psi / norm;
  ComplexMatrix rho = v * v.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityState(std::move(rho));
}

DensityState DensityState::maximally_mixed(int d) {
  if (d < 1) throw ValidationError("dimension must be positive");
  return DensityState(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityState::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho_.squaredNorm();
}

// ---------------------------------------------------------------------------
// Povm

void validate_povm_effects(std::span<const ComplexMatrix> effects, int povm_index,
                           std::vector<Diagnostic>& out) {
  const std::string where = "povm " + std::to_string(povm_index);
  if (effects.empty()) {
    out.push_back({"empty_povm", where + ": has no effects", povm_index, -1});
    return;
  }
  const auto d = effects.front().rows();
  if (d == 0) {
    out.push_back({"shape", where + ": effect 0 is empty", povm_index, 0});
    return;
  }
  if (d > kMaxDimension) {
    out.push_back({"dimension", where + ": dimension exceeds 64", povm_index, -1});
    return;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const auto& e = effects[i];
    const int idx = static_cast<int>(i);
    const std::string tag = where + " effect " + std::to_string(i);
    if (e.rows() != d || e.cols() != d) {
      out.push_back({"shape", tag + ": not " + std::to_string(d) + "x" + std::to_string(d),
                     povm_index, idx});
      shapes_ok = false;
      continue;
    }
    if (!all_finite(e)) {
      out.push_back({"non_finite", tag + ": non-finite entries", povm_index, idx});
      shapes_ok = false;
      continue;
    }
    const double defect = hermiticity_defect(e);
    if (defect > kHermitianTol) {
      out.push_back({"hermitian", tag + ": not Hermitian", povm_index, idx});
      continue;
    }
    const double min_eig = hermitian_eigenvalues(e).minCoeff();
    if (min_eig < -kPsdTol) {
      out.push_back({"psd", tag + ": negative eigenvalue " + std::to_string(min_eig),
                     povm_index, idx});
    }
  }
  if (!shapes_ok) return;
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : effects) sum += e;
  const double deviation = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (deviation > kCompletenessTol) {
    std::ostringstream os;
    os << where << ": effects do not sum to identity (max deviation " << deviation << ")";
    out.push_back({"completeness", os.str(), povm_index, -1});
  }
}

namespace {

bool traces_equal(std::span<const ComplexMatrix> effects) {
  const double t0 = effects.front().trace().real();
  return std::all_of(effects.begin(), effects.end(), [&](const ComplexMatrix& e) {
    return std::abs(e.trace().real() - t0) < kEqualTraceTol;
  });
}

bool rank1_projective(std::span<const ComplexMatrix> effects) {
  const auto d = effects.front().rows();
  if (static_cast<Eigen::Index>(effects.size()) != d) return false;
  return std::all_of(effects.begin(), effects.end(), [](const ComplexMatrix& e) {
    return std::abs(e.trace().real() - 1.0) < kCompletenessTol &&
           (e * e - e).cwiseAbs().maxCoeff() < kCompletenessTol;
  });
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  std::vector<Diagnostic> failures;
  validate_povm_effects(effects_, 0, failures);
  if (!failures.empty()) throw ValidationError(describe(failures));
  for (auto& e : effects_) e = 0.5 * (e + e.adjoint());
  equal_trace_ = traces_equal(effects_);
  rank1_projective_ = rank1_projective(effects_);
}

Povm Povm::from_basis(const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0) {
    throw ValidationError("basis matrix must be square and non-empty");
  }
  const auto d = basis.rows();
  const double defect =
      (basis.adjoint() * basis - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTol) {
    throw ValidationError("basis columns are not orthonormal");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    const ComplexVector v = basis.col(k);
    effects.emplace_back(v * v.adjoint());
  }
  return Povm(std::move(effects));
}

// ---------------------------------------------------------------------------
// WeightedEnsemble

WeightedEnsemble::WeightedEnsemble(std::vector<Povm> povms, std::vector<double> weights)
    : povms_(std::move(povms)), weights_(std::move(weights)) {
  std::vector<std::vector<ComplexMatrix>> raw;
  raw.reserve(povms_.size());
  for (const auto& p : povms_) raw.push_back(p.effects());
  const auto diag = validate_ensemble(raw, weights_);
  if (!diag.ok()) throw ValidationError(diag.summary());
}

WeightedEnsemble WeightedEnsemble::uniform(std::vector<Povm> povms) {
  const auto n = povms.size();
  if (n == 0) throw ValidationError("ensemble needs at least one POVM");
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  return WeightedEnsemble(std::move(povms), std::move(w));
}

bool WeightedEnsemble::equal_trace() const {
  return std::all_of(povms_.begin(), povms_.end(),
                     [](const Povm& p) { return p.equal_trace(); });
}

bool WeightedEnsemble::rank1_projective() const {
  return std::all_of(povms_.begin(), povms_.end(),
                     [](const Povm& p) { return p.is_rank1_projective(); });
}

bool WeightedEnsemble::equal_weights() const {
  const double target = 1.0 / static_cast<double>(weights_.size());
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](double w) { return std::abs(w - target) < kWeightSumTol; });
}

std::string EnsembleDiagnostics::summary() const { return describe(failures); }

EnsembleDiagnostics validate_ensemble(std::span<const std::vector<ComplexMatrix>> povms,
                                      std::span<const double> weights) {
  EnsembleDiagnostics out;
  if (povms.empty()) {
    out.failures.push_back({"empty_ensemble", "ensemble has no POVMs", -1, -1});
  }
  if (weights.size() != povms.size()) {
    out.failures.push_back({"weight_count",
                            "expected " + std::to_string(povms.size()) + " weights, got " +
                                std::to_string(weights.size()),
                            -1, -1});
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || !(weights[i] > 0.0)) {
      out.failures.push_back({"weight_positive",
                              "weight " + std::to_string(i) + " must be positive",
                              static_cast<int>(i), -1});
    }
    total += weights[i];
  }
  if (!weights.empty() && !(std::abs(total - 1.0) <= kWeightSumTol)) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total << ", expected 1";
    out.failures.push_back({"weight_sum", os.str(), -1, -1});
  }

  Eigen::Index ref_d = -1;
  std::size_t ref_l = 0;
  for (std::size_t t = 0; t < povms.size(); ++t) {
    const int idx = static_cast<int>(t);
    const auto before = out.failures.size();
    validate_povm_effects(povms[t], idx, out.failures);
    const bool sane = out.failures.size() == before;
    out.equal_trace.push_back(sane && traces_equal(povms[t]));
    if (povms[t].empty()) continue;
    if (ref_d < 0) {
      ref_d = povms[t].front().rows();
      ref_l = povms[t].size();
      continue;
    }
    if (povms[t].front().rows() != ref_d) {
      out.failures.push_back({"dimension_mismatch",
                              "povm " + std::to_string(t) + ": dimension differs from povm 0",
                              idx, -1});
    }
    if (povms[t].size() != ref_l) {
      out.failures.push_back({"outcome_mismatch",
                              "povm " + std::to_string(t) + ": outcome count differs from povm 0",
                              idx, -1});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Probabilities and state functionals

namespace {

ProbVector clamp_and_normalize(ProbVector p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) {
      if (p[i] < -kProbabilityClampTol) {
        throw ValidationError("negative Born probability " + std::to_string(p[i]) +
                              " for outcome " + std::to_string(i));
      }
      p[i] = 0.0;
    }
    total += p[i];
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace

ProbVector born_probabilities(const Povm& m, const DensityState& s) {
  if (m.dim() != s.dim()) {
    throw ValidationError("POVM dimension " + std::to_string(m.dim()) +
                          " does not match state dimension " + std::to_string(s.dim()));
  }
  ProbVector p;
  p.reserve(static_cast<std::size_t>(m.outcomes()));
  for (const auto& e : m.effects()) {
    // Re Tr(M rho) = Re sum_ij M_ij rho_ji.
    p.push_back((e.cwiseProduct(s.matrix().transpose())).sum().real());
  }
  return clamp_and_normalize(std::move(p));
}

ProbVector born_probabilities(const Povm& m, const ComplexVector& psi) {
  if (m.dim() != psi.size()) {
    throw ValidationError("POVM dimension does not match state vector length");
  }
  const double nrm = psi.squaredNorm();
  ProbVector p;
  p.reserve(static_cast<std::size_t>(m.outcomes()));
  for (const auto& e : m.effects()) {
    p.push_back(psi.dot(e * psi).real() / nrm);
  }
  return clamp_and_normalize(std::move(p));
}

double invariant_information(const DensityState& s) {
  return s.purity() - 1.0 / static_cast<double>(s.dim());
}

double von_neumann_entropy(const DensityState& s) {
  const RealVector lambda = hermitian_eigenvalues(s.matrix());
  double h = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double x = lambda(i);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return std::max(h, 0.0);
}

}  // namespace weur
