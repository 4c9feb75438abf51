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

// Helpers shared by the test suites: Eigen conversions (Eigen serves as the
// independent eigensolver oracle) and small random fixtures.

#ifndef QTRACK_TESTS_TEST_UTIL_HPP_
#define QTRACK_TESTS_TEST_UTIL_HPP_

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qtrack/learner.hpp"
#include "qtrack/linalg.hpp"
#include "qtrack/quantum.hpp"

namespace qtrack::testing {

inline Eigen::MatrixXcd ToEigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

inline Eigen::MatrixXcd ToEigen(const HermitianMatrix& m) { return ToEigen(m.matrix()); }

inline ComplexMatrix FromEigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

// Eigenvalues from Eigen, sorted descending.
inline std::vector<double> OracleEigenvalues(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ToEigen(m), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

// f applied spectrally, computed with Eigen.
template <typename F>
Eigen::MatrixXcd OracleApply(const Eigen::MatrixXcd& m, F f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd v = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

inline double OracleTraceNorm(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// Von Neumann relative entropy Tr x (log x - log y) via Eigen, with
// 0 log 0 = 0 on the first argument.
inline double OracleRelativeEntropy(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  const Eigen::MatrixXcd xlogx = OracleApply(x, [](double v) { return v > 0 ? v * std::log(v) : 0.0; });
  const Eigen::MatrixXcd logy = OracleApply(y, [](double v) { return std::log(v); });
  return (xlogx - x * logy).trace().real();
}

inline std::size_t Dim(int n) { return std::size_t{1} << n; }

// Random member of K: mix a random density into the clipped domain.
inline HermitianMatrix RandomDomainPoint(const ClippedDomain& domain, Rng& rng) {
  return mix_into_domain(random_density(domain.dim(), rng), domain);
}

// Always plays the same state; counts observe() calls.
class ConstantLearner final : public Learner {
 public:
  explicit ConstantLearner(DensityMatrix state) : state_(std::move(state)) {}
  const DensityMatrix& predict() const override { return state_; }
  void observe(const Effect&, const LossDescriptor&) override { ++observed_; }
  std::string name() const override { return "constant"; }
  int observed() const noexcept { return observed_; }

 private:
  DensityMatrix state_;
  int observed_ = 0;
};

}  // namespace qtrack::testing

#endif  // QTRACK_TESTS_TEST_UTIL_HPP_
