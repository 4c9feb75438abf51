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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtrack/error.hpp"
#include "qtrack/quantum.hpp"
#include "test_util.hpp"

namespace qtrack {
namespace {

using testing::RandomDomainPoint;
using testing::ToEigen;

// Minimizer of sum_i x_i log(x_i / mu_i) over {x1 + x2 = 1, x_i >= floor}
// by golden-section search on x1 (the objective is convex in x1).
std::pair<double, double> GoldenSectionProjection(double mu1, double mu2, double floor) {
  auto f = [&](double x1) {
    const double x2 = 1.0 - x1;
    return x1 * std::log(x1 / mu1) + x2 * std::log(x2 / mu2);
  };
  double lo = floor;
  double hi = 1.0 - floor;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double a = hi - g * (hi - lo);
    const double b = lo + g * (hi - lo);
    if (f(a) < f(b)) {
      hi = b;
    } else {
      lo = a;
    }
  }
  const double x1 = 0.5 * (lo + hi);
  return {x1, 1.0 - x1};
}

TEST(Qubits, DimensionRoundTrip) {
  EXPECT_EQ(dimension_for_qubits(3), 8u);
  EXPECT_EQ(qubits_for_dimension(16), 4);
  EXPECT_THROW(qubits_for_dimension(6), DimensionError);
  EXPECT_THROW(dimension_for_qubits(-1), DimensionError);
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
  EXPECT_NO_THROW(DensityMatrix(HermitianMatrix::diagonal({0.25, 0.75})));
  EXPECT_THROW(DensityMatrix(HermitianMatrix::diagonal({0.5, 0.6})), DomainError);
  EXPECT_THROW(DensityMatrix(HermitianMatrix::diagonal({1.5, -0.5})), DomainError);
}

TEST(DensityMatrix, PureAndMixed) {
  const Complex psi[] = {Complex(1 / std::sqrt(2.0), 0), Complex(0, 1 / std::sqrt(2.0))};
  const DensityMatrix rho = DensityMatrix::pure(psi);
  EXPECT_NEAR(rho.matrix()(0, 1).imag(), -0.5, 1e-15);
  EXPECT_NEAR(nuclear_norm(rho.matrix()), 1.0, 1e-14);
  const DensityMatrix mm = DensityMatrix::maximally_mixed(2);
  EXPECT_EQ(mm.n_qubits(), 2);
  EXPECT_DOUBLE_EQ(mm.matrix()(3, 3).real(), 0.25);
}

TEST(Effect, ValidatesSpectrumAndProbability) {
  EXPECT_THROW(Effect(HermitianMatrix::diagonal({1.1, 0.0})), DomainError);
  EXPECT_THROW(Effect(HermitianMatrix::diagonal({0.5, -0.1})), DomainError);
  const Effect e(HermitianMatrix::diagonal({1.0, 0.25}));
  EXPECT_DOUBLE_EQ(e.spectral_norm(), 1.0);
  EXPECT_NEAR(e.probability(DensityMatrix::maximally_mixed(1).matrix()), 0.625, 1e-15);
}

TEST(ClippedDomain, FloorAndMembership) {
  const ClippedDomain k(2, 200);
  EXPECT_DOUBLE_EQ(k.floor(), 1.0 / 800.0);
  EXPECT_LE(k.floor() * k.dim(), 1.0);
  EXPECT_TRUE(k.contains(DensityMatrix::maximally_mixed(2).matrix()));
  EXPECT_FALSE(k.contains(HermitianMatrix::diagonal({1.0, 0.0, 0.0, 0.0})));
  EXPECT_FALSE(k.contains(HermitianMatrix::identity(4) * 0.3));
  EXPECT_THROW(ClippedDomain(1, 0), DomainError);
}

TEST(NegEntropy, MaximallyMixedQubit) {
  EXPECT_NEAR(neg_entropy(DensityMatrix::maximally_mixed(1).matrix()), -std::log(2.0), 1e-15);
}

TEST(NegEntropy, ClippedPureStateLimit) {
  const double floor = 1.0 / 400.0;
  const HermitianMatrix x = HermitianMatrix::diagonal({1.0 - floor, floor});
  const double expected = (1.0 - floor) * std::log(1.0 - floor) + floor * std::log(floor);
  EXPECT_NEAR(neg_entropy(x), expected, 1e-15);
  EXPECT_THROW(neg_entropy(HermitianMatrix::diagonal({1.0, 0.0})), DomainError);
}

TEST(NegEntropy, BoundedBelowByUniform) {
  Rng rng(31);
  for (int n : {1, 2, 3}) {
    const ClippedDomain k(n, 100);
    for (int rep = 0; rep < 1000 / n; ++rep) {
      const double r = neg_entropy(RandomDomainPoint(k, rng));
      EXPECT_GE(r, -n * std::log(2.0) - 1e-12);
      EXPECT_LE(r, 0.0);
    }
  }
}

TEST(GradR, MaximallyMixedAndDiagonal) {
  const HermitianMatrix g = grad_R(DensityMatrix::maximally_mixed(2).matrix());
  EXPECT_LT(max_abs_diff(g.matrix(), ComplexMatrix::identity(4) *
                                         Complex(1.0 - 2.0 * std::log(2.0), 0.0)),
            1e-14);
  const double c = 1.0 / (std::exp(-1.0) + std::exp(-2.0));
  const HermitianMatrix x = HermitianMatrix::diagonal({c * std::exp(-1.0), c * std::exp(-2.0)});
  const HermitianMatrix gx = grad_R(x);
  EXPECT_NEAR(gx(0, 0).real(), 1.0 + std::log(c) - 1.0, 1e-14);
  EXPECT_NEAR(gx(1, 1).real(), 1.0 + std::log(c) - 2.0, 1e-14);
}

TEST(GradR, SpectralNormBoundOnDomain) {
  Rng rng(32);
  for (int n : {1, 2, 3}) {
    for (int t : {10, 200, 2000}) {
      const ClippedDomain k(n, t);
      for (int rep = 0; rep < 30; ++rep) {
        const double bound = n * std::log(2.0) + std::log(static_cast<double>(t)) + 1.0;
        EXPECT_LE(spectral_norm(grad_R(RandomDomainPoint(k, rng))), bound + 1e-12);
      }
    }
  }
}

TEST(BregmanDiv, SelfIsZeroAndMatchesRelativeEntropy) {
  Rng rng(33);
  const ClippedDomain k(2, 100);
  for (int rep = 0; rep < 50; ++rep) {
    const HermitianMatrix x = RandomDomainPoint(k, rng);
    const HermitianMatrix y = RandomDomainPoint(k, rng);
    EXPECT_NEAR(bregman_div(x, x), 0.0, 1e-13);
    EXPECT_NEAR(bregman_div(x, y), testing::OracleRelativeEntropy(ToEigen(x), ToEigen(y)),
                1e-11);
  }
  EXPECT_THROW(bregman_div(HermitianMatrix::identity(2) * 0.5, HermitianMatrix::diagonal({1, 0})),
               DomainError);
}

TEST(BregmanDiv, PinskerOnRandomPairs) {
  Rng rng(34);
  const ClippedDomain k(2, 50);
  for (int rep = 0; rep < 1000; ++rep) {
    const HermitianMatrix x = RandomDomainPoint(k, rng);
    const HermitianMatrix y = RandomDomainPoint(k, rng);
    const double tn = nuclear_norm(x - y);
    EXPECT_GE(bregman_div(x, y), 0.5 * tn * tn - 1e-12);
  }
}

TEST(BregmanDiv, BoundedAgainstUniform) {
  Rng rng(35);
  for (int n : {1, 2, 3}) {
    const ClippedDomain k(n, 100);
    const HermitianMatrix u = DensityMatrix::maximally_mixed(n).matrix();
    for (int rep = 0; rep < 100; ++rep) {
      EXPECT_LE(bregman_div(RandomDomainPoint(k, rng), u), n * std::log(2.0) + 1e-12);
    }
  }
}

TEST(BregmanDiv, ZeroEigenvaluesOfFirstArgument) {
  const HermitianMatrix x = HermitianMatrix::diagonal({1.0, 0.0});
  const HermitianMatrix y = HermitianMatrix::diagonal({0.5, 0.5});
  EXPECT_NEAR(bregman_div(x, y), std::log(2.0), 1e-15);
}

TEST(ProjectSpectrum, KktSolution) {
  const double floor = 1.0 / 400.0;
  const double mu[] = {0.9, 0.0005};
  const std::vector<double> x = project_spectrum(mu, floor);
  EXPECT_NEAR(x[1], floor, 1e-15);
  EXPECT_NEAR(x[0], 1.0 - floor, 1e-15);
  const auto [g1, g2] = GoldenSectionProjection(0.9, 0.0005, floor);
  EXPECT_NEAR(x[0], g1, 1e-6);
  EXPECT_NEAR(x[1], g2, 1e-6);
}

TEST(ProjectSpectrum, MatchesBruteForceOnQubits) {
  Rng rng(36);
  for (int rep = 0; rep < 200; ++rep) {
    const double floor = 1.0 / (2.0 * (2 + rng.below(500)));
    const double mu[] = {std::exp(rng.uniform(-8, 1)), std::exp(rng.uniform(-8, 1))};
    const std::vector<double> x = project_spectrum(mu, floor);
    const auto [g1, g2] = GoldenSectionProjection(mu[0], mu[1], floor);
    EXPECT_NEAR(x[0], g1, 1e-6);
    EXPECT_NEAR(x[1], g2, 1e-6);
    EXPECT_NEAR(x[0] + x[1], 1.0, 1e-14);
  }
}

TEST(BregmanProject, FixedPointAndRescaling) {
  Rng rng(37);
  const ClippedDomain k(2, 200);
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianMatrix y = RandomDomainPoint(k, rng);
    EXPECT_LT(max_abs_diff(bregman_project(y, k).matrix(), y.matrix()), 1e-10);
  }
  const HermitianMatrix twice = HermitianMatrix::identity(4) * 0.5;
  EXPECT_LT(max_abs_diff(bregman_project(twice, k).matrix(),
                         DensityMatrix::maximally_mixed(2).matrix().matrix()),
            1e-14);
}

TEST(BregmanProject, ClipsQubitExample) {
  const ClippedDomain k(1, 200);
  const HermitianMatrix x = bregman_project(HermitianMatrix::diagonal({0.9, 0.0005}), k);
  EXPECT_NEAR(x(0, 0).real(), 1.0 - 1.0 / 400.0, 1e-12);
  EXPECT_NEAR(x(1, 1).real(), 1.0 / 400.0, 1e-12);
}

TEST(BregmanProject, MembershipAndPythagoras) {
  Rng rng(38);
  for (int n : {1, 2, 3}) {
    const ClippedDomain k(n, 50);
    const std::size_t d = k.dim();
    for (int rep = 0; rep < 20; ++rep) {
      // Spread-out PD input, often far outside K.
      HermitianMatrix y = mat_exp(random_hermitian(d, rng) * 4.0);
      y *= rng.uniform(0.2, 3.0) / y.trace();
      const HermitianMatrix x = bregman_project(y, k);
      ASSERT_TRUE(k.contains(x));
      for (int j = 0; j < 100; ++j) {
        const HermitianMatrix phi = RandomDomainPoint(k, rng);
        EXPECT_GE(bregman_div(phi, y), bregman_div(phi, x) - 1e-9);
      }
    }
  }
}

TEST(BregmanProject, RejectsNonPositiveInput) {
  const ClippedDomain k(1, 10);
  EXPECT_THROW(bregman_project(HermitianMatrix::diagonal({1.0, -0.1}), k), DomainError);
}

TEST(MixIntoDomain, FormulaAndMembership) {
  const ClippedDomain k(1, 200);
  const HermitianMatrix mm = DensityMatrix::maximally_mixed(1).matrix();
  EXPECT_LT(max_abs_diff(mix_into_domain(mm, k).matrix(), mm.matrix()), 1e-16);
  const HermitianMatrix pure = mix_into_domain(HermitianMatrix::diagonal({1.0, 0.0}), k);
  EXPECT_NEAR(pure(0, 0).real(), 0.9975, 1e-15);
  EXPECT_NEAR(pure(1, 1).real(), 0.0025, 1e-15);
  Rng rng(39);
  const ClippedDomain k3(3, 100);
  for (int rep = 0; rep < 1000; ++rep) {
    EXPECT_GE(hermitian_eig(mix_into_domain(random_density(8, rng), k3)).min(),
              k3.floor() - 1e-15);
  }
}

// Fannes-Audenaert, in the form (n/2)||D||_* + H(||D||_* / 2).
TEST(EntropyInequalities, FannesAudenaert) {
  Rng rng(40);
  for (int n : {1, 2, 3}) {
    const ClippedDomain k(n, 100);
    for (int rep = 0; rep < 300; ++rep) {
      const HermitianMatrix a = RandomDomainPoint(k, rng);
      // Nearby and far pairs.
      HermitianMatrix b = rep % 2 == 0 ? RandomDomainPoint(k, rng)
                                       : a * 0.95 + RandomDomainPoint(k, rng) * 0.05;
      const double tn = nuclear_norm(a - b);
      const double lhs = std::abs(neg_entropy(a) - neg_entropy(b));
      EXPECT_LE(lhs, 0.5 * n * tn + binary_entropy(0.5 * tn) + 1e-9);
    }
  }
}

TEST(EntropyInequalities, EntropyLinearization) {
  for (double lambda : {1.0, std::log(200.0)}) {
    for (int i = 0; i <= 1000; ++i) {
      const double p = i / 1000.0;
      const double rhs = lambda * p + std::log((std::exp(lambda) + 1.0) / std::exp(lambda));
      EXPECT_LE(binary_entropy(p), rhs + 1e-12) << "p=" << p << " lambda=" << lambda;
    }
  }
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-15);
}

}  // namespace
}  // namespace qtrack
