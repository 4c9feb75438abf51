// Copyright 2026 The qtrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Quantum states, two-outcome measurements, channels, and the von Neumann
// entropy geometry (negative entropy regularizer, its Bregman divergence, and
// the Bregman projection onto the clipped state domain).

#ifndef QTRACK_QUANTUM_HPP_
#define QTRACK_QUANTUM_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qtrack/linalg.hpp"

namespace qtrack {

// Tag for constructors that skip the (eigendecomposition-based) validation.
// Used on hot paths whose output is valid by construction.
struct Unchecked {
  explicit Unchecked() = default;
};
inline constexpr Unchecked unchecked{};

inline constexpr double kStateTolerance = 1e-10;

std::size_t dimension_for_qubits(int n_qubits);
// Inverse of dimension_for_qubits; throws DimensionError unless dim = 2^n.
int qubits_for_dimension(std::size_t dim);

// Trace-1 positive semidefinite matrix on n qubits.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates lambda_min >= -1e-10 and |Tr - 1| <= 1e-10, else DomainError.
  explicit DensityMatrix(HermitianMatrix m);
  DensityMatrix(HermitianMatrix m, Unchecked) noexcept : m_(std::move(m)) {}

  static DensityMatrix maximally_mixed(int n_qubits);
  // |psi><psi| for a normalized vector.
  static DensityMatrix pure(std::span<const Complex> psi);

  const HermitianMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  int n_qubits() const { return qubits_for_dimension(dim()); }

 private:
  HermitianMatrix m_;
};

// Two-outcome POVM element: Hermitian with spectrum in [0, 1].
class Effect {
 public:
  Effect() = default;
  // Validates the spectrum against [-1e-10, 1 + 1e-10].
  explicit Effect(HermitianMatrix m);

  const HermitianMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  double spectral_norm() const noexcept { return spectral_norm_; }
  // Tr(E rho), the acceptance probability.
  double probability(const HermitianMatrix& rho) const;

 private:
  HermitianMatrix m_;
  double spectral_norm_ = 0.0;
};

// K = (1 - 1/T) C_n + I / (T 2^n) = {x : Tr x = 1, x >= floor * I}.
class ClippedDomain {
 public:
  ClippedDomain(int n_qubits, int horizon);

  int n_qubits() const noexcept { return n_qubits_; }
  int horizon() const noexcept { return horizon_; }
  std::size_t dim() const noexcept { return dim_; }
  // 1 / (T 2^n).
  double floor() const noexcept { return floor_; }

  bool contains(const HermitianMatrix& x) const;
  bool contains_spectrum(std::span<const double> eigenvalues, double trace) const;

 private:
  int n_qubits_;
  int horizon_;
  std::size_t dim_;
  double floor_;
};

// CPTP map in Kraus form.
class QuantumChannel {
 public:
  QuantumChannel() = default;
  // Validates equal shapes and sum_i K_i^dagger K_i = I within 1e-10.
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus_ops);

  static QuantumChannel identity(std::size_t dim);
  static QuantumChannel unitary(ComplexMatrix u);
  // rho -> (1 - p) rho + p I / d.
  static QuantumChannel depolarizing(std::size_t dim, double p);
  // Single-qubit amplitude damping with decay probability gamma (non-unital).
  static QuantumChannel amplitude_damping(double gamma);
  // Single-qubit bit flip with probability p.
  static QuantumChannel bit_flip(double p);

  const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return kraus_; }
  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }

  // sum_i K_i x K_i^dagger, for any Hermitian input.
  HermitianMatrix apply(const HermitianMatrix& x) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
};

// sum_k lambda_k log lambda_k (natural log). This is the NEGATIVE von Neumann
// entropy; values lie in [-n log 2, 0]. Throws DomainError on a non-positive
// eigenvalue.
double neg_entropy(const HermitianMatrix& x);
double neg_entropy_of_spectrum(std::span<const double> eigenvalues);

// I + log x.
HermitianMatrix grad_R(const HermitianMatrix& x);

// B_R(x || y) = R(x) - R(y) - (I + log y) . (x - y) for PSD trace-1 x and
// Hermitian positive definite y. Zero eigenvalues of x contribute 0 log 0 = 0.
// Throws DomainError if y is not positive definite.
double bregman_div(const HermitianMatrix& x, const HermitianMatrix& y);

// Shannon entropy -(p log p + (1 - p) log(1 - p)) in nats.
double binary_entropy(double p);

// Solves min sum_i x_i log(x_i / mu_i) subject to sum_i x_i = 1, x_i >= floor
// for positive mu. The minimizer is x_i = max(floor, c mu_i) where c solves
// sum_i max(floor, c mu_i) = 1; c is bracketed and bisected (<= 200 steps, to
// relative width 1e-12), then recomputed exactly on the identified active set.
std::vector<double> project_spectrum(std::span<const double> mu, double floor);

// argmin_{x in K} B_R(x || y) for Hermitian positive definite y. The
// divergence and K are unitarily covariant, so the minimizer shares y's
// eigenvectors and only the spectrum is projected.
HermitianMatrix bregman_project(const HermitianMatrix& y,
                                const ClippedDomain& domain);

// (1 - 1/T) x + I / (T 2^n).
HermitianMatrix mix_into_domain(const HermitianMatrix& x,
                                const ClippedDomain& domain);

DensityMatrix apply_channel(const QuantumChannel& phi, const DensityMatrix& x);

// Single Kraus operator U = exp(-i h dt), built from the spectrum of h.
QuantumChannel unitary_channel_from_hamiltonian(const HermitianMatrix& h,
                                                double dt);

// Lifts a channel on l qubits to n qubits, acting on `qubit_indices` (qubit 0
// is the most significant tensor factor, matching kron's ordering) and as
// the identity elsewhere.
QuantumChannel embed_local_channel(const QuantumChannel& phi,
                                   std::span<const int> qubit_indices,
                                   int n_qubits);

// B_R(phi(x) || phi(y)) <= B_R(x || y) + 1e-9.
bool contraction_check(const QuantumChannel& phi, const HermitianMatrix& x,
                       const HermitianMatrix& y);

// Channel files: JSON {"kraus": [K_0, K_1, ...]} where each K is a list of
// rows and each entry is a [re, im] pair.
QuantumChannel load_channel(const std::string& path);
void save_channel(const QuantumChannel& phi, const std::string& path);
QuantumChannel parse_channel_json(const std::string& text);
std::string channel_to_json(const QuantumChannel& phi);

}  // namespace qtrack

#endif  // QTRACK_QUANTUM_HPP_
