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

#include "qtrack/omd.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

void CheckEta(double eta, double lipschitz) {
  if (!(eta > 0.0) || !(eta < 1.0 / (2.0 * lipschitz))) {
    std::ostringstream msg;
    msg << "OMD step size eta = " << eta << " must satisfy 0 < eta < 1/(2L) = "
        << 1.0 / (2.0 * lipschitz);
    throw DomainError(msg.str());
  }
}

void RecordEntropy(OmdDiagnostics& diag, std::span<const double> spectrum) {
  double r = 0.0;
  for (double lambda : spectrum) r += lambda * std::log(lambda);
  if (diag.steps == 0 && diag.max_entropy_gap == 0.0 && diag.min_neg_entropy == 0.0 &&
      diag.max_neg_entropy == 0.0) {
    diag.min_neg_entropy = r;
    diag.max_neg_entropy = r;
  }
  diag.min_neg_entropy = std::min(diag.min_neg_entropy, r);
  diag.max_neg_entropy = std::max(diag.max_neg_entropy, r);
  diag.max_entropy_gap = diag.max_neg_entropy - diag.min_neg_entropy;
}

}  // namespace

OmdState OmdState::initial(double eta, const ClippedDomain& domain, double lipschitz) {
  return starting_at(eta, domain, lipschitz, DensityMatrix::maximally_mixed(domain.n_qubits()));
}

OmdState OmdState::starting_at(double eta, const ClippedDomain& domain, double lipschitz,
                               const DensityMatrix& x1) {
  CheckEta(eta, lipschitz);
  if (x1.dim() != domain.dim()) throw DimensionError("OmdState: x1 dimension mismatch");
  OmdState state;
  state.eta = eta;
  state.domain = domain;
  state.x = x1;
  state.x_spectrum = hermitian_eig(x1.matrix());
  if (!domain.contains_spectrum(state.x_spectrum.eigenvalues, x1.matrix().trace())) {
    throw DomainError("OmdState: starting point is not in the clipped domain");
  }
  RecordEntropy(state.diagnostics, state.x_spectrum.eigenvalues);
  return state;
}

OmdState omd_step(OmdState state, const Effect& effect, const LossDescriptor& loss) {
  OmdDiagnostics& diag = state.diagnostics;
  const double z = effect.probability(state.x.matrix());
  const double g = loss_subgrad(loss, z);
  diag.max_grad_norm = std::max(diag.max_grad_norm, std::abs(g) * effect.spectral_norm());
  ++diag.steps;
  if (g == 0.0) {
    // y_{t+1} = x_t, already in K, so the projection returns x_t.
    diag.last_step_divergence = 0.0;
    state.last_dual = state.x_spectrum;
    return state;
  }

  std::vector<double> log_x(state.x_spectrum.eigenvalues.size());
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    log_x[i] = std::log(state.x_spectrum.eigenvalues[i]);
  }
  HermitianMatrix log_y = reconstruct(state.x_spectrum.eigenvectors, log_x);
  log_y.add_scaled(-state.eta * g, effect.matrix());

  Spectrum dual = hermitian_eig(log_y);
  double dual_trace = 0.0;
  for (double& sigma : dual.eigenvalues) {
    sigma = std::exp(sigma);
    dual_trace += sigma;
  }
  diag.min_dual_eigenvalue = std::min(diag.min_dual_eigenvalue, dual.min());
  diag.last_step_divergence = state.eta * g * z - 1.0 + dual_trace;
  assert(dual.min() > 0.0);

  std::vector<double> projected = project_spectrum(dual.eigenvalues, state.domain.floor());
  state.x = DensityMatrix(reconstruct(dual.eigenvectors, projected), unchecked);
  state.x_spectrum.eigenvalues = std::move(projected);
  state.x_spectrum.eigenvectors = dual.eigenvectors;
  state.last_dual = std::move(dual);
  RecordEntropy(diag, state.x_spectrum.eigenvalues);
  assert(state.domain.contains_spectrum(state.x_spectrum.eigenvalues,
                                        state.x.matrix().trace()));
  return state;
}

OmdState channel_omd_step(OmdState state, const QuantumChannel& phi,
                          const Effect& effect, const LossDescriptor& loss) {
  state = omd_step(std::move(state), effect, loss);
  HermitianMatrix moved = phi.apply(state.x.matrix());
  Spectrum spectrum = hermitian_eig(moved);
  if (spectrum.min() < state.domain.floor()) {
    // Mixing is affine in the spectrum and keeps the eigenvectors.
    const double keep = 1.0 - 1.0 / static_cast<double>(state.domain.horizon());
    for (double& lambda : spectrum.eigenvalues) {
      lambda = keep * std::max(lambda, 0.0) + state.domain.floor();
    }
    moved = reconstruct(spectrum.eigenvectors, spectrum.eigenvalues);
    ++state.diagnostics.channel_mix_count;
  }
  state.x = DensityMatrix(std::move(moved), unchecked);
  state.x_spectrum = std::move(spectrum);
  return state;
}

std::vector<double> eta_grid(int horizon, double lipschitz) {
  if (horizon < 1) throw DomainError("eta_grid: horizon must be >= 1");
  const int count =
      std::max(1, static_cast<int>(std::ceil(std::log2(static_cast<double>(horizon)))));
  const double cap = 1.0 / (2.0 * lipschitz);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    double eta = std::ldexp(1.0, -k - 1);
    if (eta >= cap) eta = std::nextafter(cap, 0.0);
    grid.push_back(eta);
  }
  return grid;
}

OmdLearner::OmdLearner(double eta, const ClippedDomain& domain, double lipschitz,
                       std::optional<QuantumChannel> channel)
    : state_(OmdState::initial(eta, domain, lipschitz)), channel_(std::move(channel)) {}

OmdLearner::OmdLearner(OmdState state, std::optional<QuantumChannel> channel)
    : state_(std::move(state)), channel_(std::move(channel)) {}

void OmdLearner::observe(const Effect& effect, const LossDescriptor& loss) {
  if (channel_) {
    state_ = channel_omd_step(std::move(state_), *channel_, effect, loss);
  } else {
    state_ = omd_step(std::move(state_), effect, loss);
  }
}

std::string OmdLearner::name() const {
  std::ostringstream out;
  out << (channel_ ? "channel_omd" : "omd") << "(eta=" << state_.eta << ")";
  return out.str();
}

}  // namespace qtrack
