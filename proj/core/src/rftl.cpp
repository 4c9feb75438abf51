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


#include "qtrack/rftl.hpp"

#include <cmath>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {

DensityMatrix rftl_step(const HermitianMatrix& grad_sum, double eta) {
  if (!(eta > 0.0)) throw DomainError("rftl_step: eta must be > 0");
  const Spectrum s = hermitian_eig(grad_sum);
  // -eta * lambda is largest at the smallest eigenvalue.
  const double shift = s.min();
  std::vector<double> w(s.eigenvalues.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-eta * (s.eigenvalues[i] - shift));
    total += w[i];
  }
  for (double& v : w) v /= total;
  return DensityMatrix(reconstruct(s.eigenvectors, w), unchecked);
}

double rftl_eta(int horizon, int n_qubits, double lipschitz) {
  if (horizon < 1) throw DomainError("rftl_eta: horizon must be >= 1");
  return std::sqrt(n_qubits * std::log(2.0) / (2.0 * horizon)) / lipschitz;
}

RftlLearner::RftlLearner(int horizon, int n_qubits, double lipschitz,
                         std::optional<double> eta, bool mix_output, RftlRate rate)
    : domain_(n_qubits, horizon),
      eta_(eta.value_or(rftl_eta(horizon, n_qubits, lipschitz))),
      mix_output_(mix_output),
      rate_(rate),
      grad_sum_(HermitianMatrix::zero(domain_.dim())) {
  if (!(eta_ > 0.0) || !std::isfinite(eta_)) throw DomainError("RftlLearner: eta must be > 0");
  refresh();
}

void RftlLearner::refresh() {
  DensityMatrix gibbs = rftl_step(grad_sum_, eta_);
  prediction_ = mix_output_
                    ? DensityMatrix(mix_into_domain(gibbs.matrix(), domain_), unchecked)
                    : std::move(gibbs);
}

void RftlLearner::observe(const Effect& effect, const LossDescriptor& loss) {
  const double g = loss_subgrad(loss, effect.probability(prediction_.matrix()));
  if (g != 0.0) {
    grad_sum_.add_scaled(g, effect.matrix());
    if (rate_ == RftlRate::kAdaptive) {
      const double norm = std::abs(g) * effect.spectral_norm();
      grad_sq_sum_ += norm * norm;
      if (grad_sq_sum_ > 0.0) {
        eta_ = std::sqrt(domain_.n_qubits() * std::log(2.0) / (2.0 * grad_sq_sum_));
      }
    }
    refresh();
  }
}

std::string RftlLearner::name() const {
  std::ostringstream out;
  if (rate_ == RftlRate::kAdaptive) {
    out << "rftl(adaptive)";
  } else {
    out << "rftl(eta=" << eta_ << ")";
  }
  return out.str();
}

}  // namespace qtrack
