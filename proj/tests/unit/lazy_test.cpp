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

#include "qtrack/adaptive.hpp"
#include "qtrack/error.hpp"
#include "qtrack/lazy.hpp"
#include "qtrack/rftl.hpp"
#include "test_util.hpp"

namespace qtrack {
namespace {

using testing::ConstantLearner;

TEST(Lazy, LargeEpsilonNeverUpdates) {
  Rng rng(110);
  auto lazy = lazy_update_wrapper(adaptive_rftl_learner(100, 1, 1.0), 3.0);
  const HermitianMatrix start = lazy->predict().matrix();
  for (int t = 0; t < 100; ++t) {
    lazy->observe(gen_effect(1, rng), LossDescriptor{LossKind::kL1, rng.uniform()});
  }
  EXPECT_EQ(lazy->update_count(), 0);
  EXPECT_EQ(lazy->predict().matrix(), start);
}

TEST(Lazy, ThresholdIsTwoThirdsEpsilon) {
  auto inner = std::make_unique<ConstantLearner>(DensityMatrix::maximally_mixed(1));
  const ConstantLearner* counter = inner.get();
  LazyLearner lazy(std::move(inner), 0.375);
  const Effect e(HermitianMatrix::diagonal({1.0, 0.0}));
  // Prediction 0.5, threshold 0.25: losses 0.3 and 0.5 update, 0.1 and
  // exactly 0.25 do not.
  lazy.observe(e, LossDescriptor{LossKind::kL1, 0.8});
  lazy.observe(e, LossDescriptor{LossKind::kL1, 0.6});
  lazy.observe(e, LossDescriptor{LossKind::kL1, 0.75});
  lazy.observe(e, LossDescriptor{LossKind::kL1, 0.0});
  EXPECT_EQ(lazy.update_count(), 2);
  EXPECT_EQ(counter->observed(), 2);
}

TEST(Lazy, SmallEpsilonForwardsEverything) {
  Rng rng(111);
  LazyLearner lazy(std::make_unique<RftlLearner>(50, 1, 1.0), 1e-9);
  RftlLearner plain(50, 1, 1.0);
  for (int t = 0; t < 50; ++t) {
    const Effect e = gen_effect(1, rng);
    const LossDescriptor loss{LossKind::kL1, rng.uniform()};
    lazy.observe(e, loss);
    plain.observe(e, loss);
    ASSERT_EQ(lazy.predict().matrix(), plain.predict().matrix());
  }
  EXPECT_EQ(lazy.update_count(), 50);
  EXPECT_EQ(lazy.name().rfind("lazy(eps=", 0), 0u);
}

TEST(Lazy, FewMistakesOnStaticState) {
  Rng rng(112);
  const double eps = 0.3;
  const DensityMatrix truth(random_density(2, rng));
  LazyLearner lazy(adaptive_rftl_learner(1000, 1, 1.0), eps);
  int mistakes = 0;
  for (int t = 0; t < 1000; ++t) {
    const Effect e = gen_effect(1, rng);
    const double p = e.probability(truth.matrix());
    const LossDescriptor loss{LossKind::kL1, p};
    if (std::abs(e.probability(lazy.predict().matrix()) - p) > eps) ++mistakes;
    lazy.observe(e, loss);
  }
  EXPECT_LT(mistakes, 30);
  EXPECT_LT(lazy.update_count(), 200);
}

TEST(Lazy, RejectsBadArguments) {
  EXPECT_THROW(LazyLearner(nullptr, 0.1), DomainError);
  EXPECT_THROW(LazyLearner(std::make_unique<RftlLearner>(4, 1, 1.0), 0.0), DomainError);
}

}  // namespace
}  // namespace qtrack
