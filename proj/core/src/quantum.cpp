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

#include "qtrack/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

constexpr int kMaxBisection = 200;
constexpr double kBisectionWidth = 1e-12;
constexpr double kTraceTolerance = 1e-10;

double XLogX(double lambda) {
  if (lambda <= 0.0) {
    if (lambda < -kStateTolerance) {
      throw DomainError("x log x: eigenvalue " + std::to_string(lambda) +
                        " is negative");
    }
    return 0.0;
  }
  return lambda * std::log(lambda);
}

}  // namespace

std::size_t dimension_for_qubits(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw DimensionError("qubit count out of range: " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

int qubits_for_dimension(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// DensityMatrix / Effect

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
  qubits_for_dimension(m_.dim());
  const Spectrum spectrum = hermitian_eig(m_);
  const double trace = m_.trace();
  if (std::abs(trace - 1.0) > kStateTolerance) {
    throw DomainError("DensityMatrix: trace " + std::to_string(trace) + " != 1");
  }
  if (spectrum.min() < -kStateTolerance) {
    throw DomainError("DensityMatrix: negative eigenvalue " +
                      std::to_string(spectrum.min()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const std::size_t d = dimension_for_qubits(n_qubits);
  return DensityMatrix(HermitianMatrix::identity(d) * (1.0 / static_cast<double>(d)),
                       unchecked);
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  ComplexMatrix m(psi.size(), psi.size());
  for (std::size_t r = 0; r < psi.size(); ++r) {
    for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  }
  return DensityMatrix(HermitianMatrix(std::move(m)));
}

Effect::Effect(HermitianMatrix m) : m_(std::move(m)) {
  const Spectrum spectrum = hermitian_eig(m_);
  if (spectrum.min() < -kStateTolerance || spectrum.max() > 1.0 + kStateTolerance) {
    std::ostringstream msg;
    msg << "Effect: spectrum [" << spectrum.min() << ", " << spectrum.max()
        << "] is not inside [0, 1]";
    throw DomainError(msg.str());
  }
  spectral_norm_ = std::max(std::abs(spectrum.min()), std::abs(spectrum.max()));
}

double Effect::probability(const HermitianMatrix& rho) const {
  return trace_inner(m_, rho);
}

// ---------------------------------------------------------------------------
// ClippedDomain

ClippedDomain::ClippedDomain(int n_qubits, int horizon)
    : n_qubits_(n_qubits), horizon_(horizon), dim_(dimension_for_qubits(n_qubits)) {
  if (horizon < 1) {
    throw DomainError("ClippedDomain: horizon must be >= 1, got " +
                      std::to_string(horizon));
  }
  floor_ = 1.0 / (static_cast<double>(horizon) * static_cast<double>(dim_));
}

bool ClippedDomain::contains_spectrum(std::span<const double> eigenvalues,
                                      double trace) const {
  if (eigenvalues.size() != dim_) return false;
  if (std::abs(trace - 1.0) > 1e-9) return false;
  const double low = *std::min_element(eigenvalues.begin(), eigenvalues.end());
  return low >= floor_ - 1e-11;
}

bool ClippedDomain::contains(const HermitianMatrix& x) const {
  if (x.dim() != dim_) return false;
  const Spectrum spectrum = hermitian_eig(x);
  return contains_spectrum(spectrum.eigenvalues, x.trace());
}

// ---------------------------------------------------------------------------
// QuantumChannel

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus_ops)
    : kraus_(std::move(kraus_ops)) {
  if (kraus_.empty()) throw DimensionError("QuantumChannel: no Kraus operators");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  ComplexMatrix completeness(dim_in_, dim_in_);
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw DimensionError("QuantumChannel: Kraus operators differ in shape");
    }
    completeness += k.adjoint() * k;
  }
  const double err = max_abs_diff(completeness, ComplexMatrix::identity(dim_in_));
  if (err > kTraceTolerance) {
    throw DomainError("QuantumChannel: sum K^dagger K deviates from I by " +
                      std::to_string(err) + " (not trace preserving)");
  }
}

QuantumChannel QuantumChannel::identity(std::size_t dim) {
  return QuantumChannel({ComplexMatrix::identity(dim)});
}

QuantumChannel QuantumChannel::unitary(ComplexMatrix u) {
  return QuantumChannel({std::move(u)});
}

QuantumChannel QuantumChannel::depolarizing(std::size_t dim, double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("depolarizing: p outside [0, 1]");
  // Weyl operators X^a Z^b form a unitary error basis; averaging over all d^2
  // of them is the completely depolarizing map.
  const double d = static_cast<double>(dim);
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double weight = (a == 0 && b == 0) ? std::sqrt(1.0 - p + p / (d * d))
                                               : std::sqrt(p) / d;
      ComplexMatrix w(dim, dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(b * j) / d;
        w((j + a) % dim, j) = weight * std::polar(1.0, angle);
      }
      ops.push_back(std::move(w));
    }
  }
  return QuantumChannel(std::move(ops));
}

QuantumChannel QuantumChannel::amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) throw DomainError("amplitude_damping: gamma outside [0, 1]");
  return QuantumChannel({ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}),
                         ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}})});
}

QuantumChannel QuantumChannel::bit_flip(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("bit_flip: p outside [0, 1]");
  return QuantumChannel({ComplexMatrix::from_rows({{std::sqrt(1.0 - p), 0.0},
                                                   {0.0, std::sqrt(1.0 - p)}}),
                         ComplexMatrix::from_rows({{0.0, std::sqrt(p)},
                                                   {std::sqrt(p), 0.0}})});
}

HermitianMatrix QuantumChannel::apply(const HermitianMatrix& x) const {
  if (x.dim() != dim_in_) {
    throw DimensionError("QuantumChannel::apply: input dim " +
                         std::to_string(x.dim()) + " != " + std::to_string(dim_in_));
  }
  ComplexMatrix out(dim_out_, dim_out_);
  for (const ComplexMatrix& k : kraus_) out += k * x.matrix() * k.adjoint();
  return HermitianMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Entropy geometry

double neg_entropy_of_spectrum(std::span<const double> eigenvalues) {
  double sum = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda <= 0.0) {
      throw DomainError("neg_entropy: eigenvalue " + std::to_string(lambda) +
                        " is not positive");
    }
    sum += lambda * std::log(lambda);
  }
  return sum;
}

double neg_entropy(const HermitianMatrix& x) {
  return neg_entropy_of_spectrum(hermitian_eig(x).eigenvalues);
}

HermitianMatrix grad_R(const HermitianMatrix& x) {
  HermitianMatrix g = mat_log(x);
  g += HermitianMatrix::identity(x.dim());
  return g;
}

double bregman_div(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("bregman_div: dimension mismatch");
  const Spectrum sx = hermitian_eig(x);
  const Spectrum sy = hermitian_eig(y);
  if (sy.min() <= 0.0) {
    throw DomainError("bregman_div: y is not positive definite (lambda_min = " +
                      std::to_string(sy.min()) + ")");
  }
  double r_x = 0.0;
  for (double lambda : sx.eigenvalues) r_x += XLogX(lambda);
  double r_y = 0.0;
  for (double mu : sy.eigenvalues) r_y += mu * std::log(mu);
  const HermitianMatrix log_y =
      spectral_apply(sy, [](double mu) { return std::log(mu); });
  const HermitianMatrix diff = x - y;
  // (I + log y) . (x - y) = Tr(x - y) + Tr(log y (x - y)).
  const double linear = diff.trace() + trace_inner(log_y, diff);
  return r_x - r_y - linear;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log1p(-p));
}

std::vector<double> project_spectrum(std::span<const double> mu, double floor) {
  const std::size_t d = mu.size();
  if (d == 0) throw DimensionError("project_spectrum: empty spectrum");
  for (double m : mu) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw DomainError("project_spectrum: input is not positive definite (eigenvalue " +
                        std::to_string(m) + ")");
    }
  }
  const double dd = static_cast<double>(d);
  if (floor * dd >= 1.0 - 1e-15) return std::vector<double>(d, 1.0 / dd);

  const double sum_mu = std::accumulate(mu.begin(), mu.end(), 0.0);
  const double max_mu = *std::max_element(mu.begin(), mu.end());
  const auto total = [&](double c) {
    double s = 0.0;
    for (double m : mu) s += std::max(floor, c * m);
    return s;
  };
  // total(lo) <= 1 <= total(hi).
  double lo = (1.0 - dd * floor) / sum_mu;
  double hi = 1.0 / max_mu;
  int iter = 0;
  while (hi - lo > kBisectionWidth * hi && iter < kMaxBisection) {
    const double mid = 0.5 * (lo + hi);
    if (total(mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iter;
  }
  if (hi - lo > kBisectionWidth * hi) {
    std::ostringstream msg;
    msg << "project_spectrum: bisection did not converge in " << kMaxBisection
        << " steps; bracket [" << lo << ", " << hi << "]";
    throw ConvergenceError(msg.str());
  }

  // Active (unclipped) set, then the exact scale for that set.
  const double c = 0.5 * (lo + hi);
  double active_mass = 0.0;
  std::size_t clipped = 0;
  std::vector<bool> active(d);
  for (std::size_t i = 0; i < d; ++i) {
    active[i] = c * mu[i] > floor;
    if (active[i]) {
      active_mass += mu[i];
    } else {
      ++clipped;
    }
  }
  if (clipped == d) {
    const std::size_t top = static_cast<std::size_t>(
        std::max_element(mu.begin(), mu.end()) - mu.begin());
    active[top] = true;
    active_mass = mu[top];
    --clipped;
  }
  const double scale = (1.0 - static_cast<double>(clipped) * floor) / active_mass;
  std::vector<double> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = active[i] ? scale * mu[i] : floor;
  return x;
}

HermitianMatrix bregman_project(const HermitianMatrix& y, const ClippedDomain& domain) {
  if (y.dim() != domain.dim()) {
    throw DimensionError("bregman_project: matrix dim " + std::to_string(y.dim()) +
                         " does not match domain dim " + std::to_string(domain.dim()));
  }
  const Spectrum spectrum = hermitian_eig(y);
  const std::vector<double> x = project_spectrum(spectrum.eigenvalues, domain.floor());
  return reconstruct(spectrum.eigenvectors, x);
}

HermitianMatrix mix_into_domain(const HermitianMatrix& x, const ClippedDomain& domain) {
  if (x.dim() != domain.dim()) throw DimensionError("mix_into_domain: dimension mismatch");
  HermitianMatrix out = x * (1.0 - 1.0 / static_cast<double>(domain.horizon()));
  out.add_scaled(domain.floor(), HermitianMatrix::identity(x.dim()));
  return out;
}

DensityMatrix apply_channel(const QuantumChannel& phi, const DensityMatrix& x) {
  return DensityMatrix(phi.apply(x.matrix()), unchecked);
}

QuantumChannel unitary_channel_from_hamiltonian(const HermitianMatrix& h, double dt) {
  const Spectrum spectrum = hermitian_eig(h);
  std::vector<Complex> phases(spectrum.eigenvalues.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i] = std::polar(1.0, -spectrum.eigenvalues[i] * dt);
  }
  return QuantumChannel::unitary(reconstruct_complex(spectrum.eigenvectors, phases));
}

QuantumChannel embed_local_channel(const QuantumChannel& phi,
                                   std::span<const int> qubit_indices, int n_qubits) {
  const int l = static_cast<int>(qubit_indices.size());
  const std::size_t small = dimension_for_qubits(l);
  if (phi.dim_in() != small || phi.dim_out() != small) {
    throw DimensionError("embed_local_channel: channel acts on dim " +
                         std::to_string(phi.dim_in()) + " but " + std::to_string(l) +
                         " qubit indices were given");
  }
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n_qubits, 0)), false);
  for (int q : qubit_indices) {
    if (q < 0 || q >= n_qubits) {
      throw DimensionError("embed_local_channel: qubit index " + std::to_string(q) +
                           " outside [0, " + std::to_string(n_qubits) + ")");
    }
    if (seen[static_cast<std::size_t>(q)]) {
      throw DimensionError("embed_local_channel: repeated qubit index " +
                           std::to_string(q));
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
  const std::size_t full = dimension_for_qubits(n_qubits);
  // Split a full basis index into the local index (bits at qubit_indices, in
  // the given order) and the remaining bits.
  std::size_t local_mask = 0;
  for (int q : qubit_indices) local_mask |= std::size_t{1} << (n_qubits - 1 - q);
  const auto local_index = [&](std::size_t x) {
    std::size_t idx = 0;
    for (int q : qubit_indices) idx = (idx << 1) | ((x >> (n_qubits - 1 - q)) & 1u);
    return idx;
  };

  std::vector<ComplexMatrix> lifted;
  lifted.reserve(phi.kraus_ops().size());
  for (const ComplexMatrix& k : phi.kraus_ops()) {
    ComplexMatrix big(full, full);
    for (std::size_t x = 0; x < full; ++x) {
      for (std::size_t y = 0; y < full; ++y) {
        if ((x & ~local_mask) != (y & ~local_mask)) continue;
        big(x, y) = k(local_index(x), local_index(y));
      }
    }
    lifted.push_back(std::move(big));
  }
  return QuantumChannel(std::move(lifted));
}

bool contraction_check(const QuantumChannel& phi, const HermitianMatrix& x,
                       const HermitianMatrix& y) {
  const double before = bregman_div(x, y);
  const double after = bregman_div(phi.apply(x), phi.apply(y));
  return after <= before + 1e-9;
}

}  // namespace qtrack
