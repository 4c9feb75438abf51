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
#include <numeric>

#include "qtrack/error.hpp"
#include "qtrack/meta.hpp"
#include "test_util.hpp"

namespace qtrack {
namespace {

using testing::ConstantLearner;

TEST(MetaWeights, UniformAndNormalized) {
  const MetaWeights w = MetaWeights::uniform(4, 0.5);
  const std::vector<double> p = w.normalized();
  for (double v : p) EXPECT_DOUBLE_EQ(v, 0.25);
  EXPECT_DOUBLE_EQ(w.alpha, 0.5);
}

TEST(MetaWeights, UpdateMatchesExponentialWeights) {
  Rng rng(80);
  MetaWeights w = MetaWeights::uniform(5, 0.3);
  std::vector<double> cum(5, 0.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> losses(5);
    for (std::size_t i = 0; i < 5; ++i) {
      losses[i] = rng.uniform();
      cum[i] += losses[i];
    }
    w = mw_update(std::move(w), losses);
  }
  double z = 0.0;
  for (double c : cum) z += std::exp(-0.3 * c);
  const std::vector<double> p = w.normalized();
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(p[i], std::exp(-0.3 * cum[i]) / z, 1e-13);
}

TEST(MetaWeights, SurvivesUnderflow) {
  MetaWeights w = MetaWeights::uniform(3, 1.0);
  const double losses[] = {800.0, 801.0, 900.0};
  for (int t = 0; t < 10; ++t) w = mw_update(std::move(w), losses);
  const std::vector<double> p = w.normalized();
  for (double v : p) EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(p[0], 1.0 / (1.0 + std::exp(-10.0)), 1e-12);
  EXPECT_GT(*std::max_element(w.log_weights.begin(), w.log_weights.end()),
            std::log(1e-300));
}

TEST(MetaWeights, DefaultAlpha) {
  EXPECT_NEAR(default_alpha(100, 4), std::sqrt(8 * std::log(4.0) / 100), 1e-15);
  EXPECT_NEAR(default_alpha(100, 1), std::sqrt(8 * std::log(2.0) / 100), 1e-15);
}

TEST(MwPredict, ConvexCombination) {
  Rng rng(81);
  std::vector<DensityMatrix> outs;
  for (int i = 0; i < 3; ++i) outs.emplace_back(random_density(2, rng));
  MetaWeights w = MetaWeights::uniform(3, 0.1);
  const double losses[] = {0.0, 1.0, 2.0};
  w = mw_update(std::move(w), losses);
  const std::vector<double> p = w.normalized();
  HermitianMatrix expected = HermitianMatrix::zero(2);
  for (int i = 0; i < 3; ++i) expected.add_scaled(p[i], outs[i].matrix());
  const DensityMatrix pred = mw_predict(w, outs);
  EXPECT_LT(max_abs_diff(pred.matrix().matrix(), expected.matrix()), 1e-15);
  EXPECT_NEAR(pred.matrix().trace(), 1.0, 1e-14);
}

TEST(MwLearner, RegretAgainstBestConstantExpert) {
  // Hedge bound sqrt(T ln N / 2) for losses in [0, 1]; the played loss is
  // at most the mixture loss by convexity.
  Rng rng(82);
  const int horizon = 2000;
  const DensityMatrix truth(random_density(2, rng));
  std::vector<std::unique_ptr<Learner>> experts;
  std::vector<DensityMatrix> states;
  for (int i = 0; i < 6; ++i) {
    states.emplace_back(random_density(2, rng));
    experts.push_back(std::make_unique<ConstantLearner>(states.back()));
  }
  MultiplicativeWeightsLearner mw(std::move(experts), default_alpha(horizon, 6));
  double played = 0.0;
  std::vector<double> fixed(6, 0.0);
  for (int t = 0; t < horizon; ++t) {
    const Effect e = gen_effect(1, rng);
    const LossDescriptor loss{LossKind::kL2, e.probability(truth.matrix())};
    played += loss_eval(loss, e.probability(mw.predict().matrix()));
    for (int i = 0; i < 6; ++i) fixed[i] += loss_eval(loss, e.probability(states[i].matrix()));
    mw.observe(e, loss);
  }
  const double best = *std::min_element(fixed.begin(), fixed.end());
  EXPECT_LE(played - best, std::sqrt(horizon * std::log(6.0) / 2.0));
  const auto best_index = std::min_element(fixed.begin(), fixed.end()) - fixed.begin();
  const std::vector<double> p = mw.weights().normalized();
  EXPECT_EQ(std::max_element(p.begin(), p.end()) - p.begin(), best_index);
}

TEST(MwLearner, UpdatesEveryExpert) {
  std::vector<std::unique_ptr<Learner>> experts;
  for (int i = 0; i < 3; ++i) {
    experts.push_back(std::make_unique<ConstantLearner>(DensityMatrix::maximally_mixed(1)));
  }
  MultiplicativeWeightsLearner mw(std::move(experts), 0.1, {7, 8, 9});
  Rng rng(83);
  for (int t = 0; t < 5; ++t) mw.observe(gen_effect(1, rng), LossDescriptor{});
  for (std::size_t i = 0; i < mw.size(); ++i) {
    EXPECT_EQ(dynamic_cast<const ConstantLearner&>(mw.expert(i)).observed(), 5);
  }
  EXPECT_EQ(mw.tag(2), 9);
  EXPECT_EQ(mw.leading_tag(), 7);
}

TEST(MwLearner, RejectsBadArguments) {
  std::vector<std::unique_ptr<Learner>> none;
  EXPECT_THROW(MultiplicativeWeightsLearner(std::move(none), 0.1), DimensionError);
}

TEST(DynamicLearner, ExpertGrid) {
  EXPECT_EQ(dynamic_learner(4, 1, 2.0)->size(), 2u);
  EXPECT_EQ(dynamic_learner(1000, 2, 2.0)->size(), 10u);
  const auto learner = dynamic_learner(64, 2, 2.0);
  EXPECT_NEAR(learner->weights().alpha, default_alpha(64, 6), 1e-15);
  EXPECT_LT(max_abs_diff(learner->predict().matrix().matrix(),
                         DensityMatrix::maximally_mixed(2).matrix().matrix()),
            1e-15);
  EXPECT_NEAR(dynamic_learner(64, 2, 2.0, 0.5)->weights().alpha, 0.5, 0.0);
}

TEST(ChannelFamily, IdentityOnlyMatchesDynamic) {
  Rng rng(84);
  const auto plain = dynamic_learner(200, 2, 2.0);
  const auto family = channel_family_learner(200, 2, 2.0, {QuantumChannel::identity(4)});
  ASSERT_EQ(plain->size(), family->size());
  for (int t = 0; t < 200; ++t) {
    const Effect e = gen_effect(2, rng);
    const LossDescriptor loss{LossKind::kL2, rng.uniform()};
    plain->observe(e, loss);
    family->observe(e, loss);
    ASSERT_LT(max_abs_diff(plain->predict().matrix().matrix(),
                           family->predict().matrix().matrix()),
              1e-12);
  }
}

TEST(ChannelFamily, TagsAndDimensionCheck) {
  const std::vector<QuantumChannel> channels = {QuantumChannel::identity(2),
                                                QuantumChannel::bit_flip(0.5)};
  const auto family = channel_family_learner(16, 1, 2.0, channels);
  EXPECT_EQ(family->size(), 8u);
  int ones = 0;
  for (std::size_t i = 0; i < family->size(); ++i) ones += family->tag(i);
  EXPECT_EQ(ones, 4);
  EXPECT_THROW(channel_family_learner(16, 2, 2.0, channels), DimensionError);
  EXPECT_THROW(channel_family_learner(16, 1, 2.0, {}), DimensionError);
}

TEST(ChannelFamily, IdentifiesTrueChannel) {
  Rng rng(85);
  const int horizon = 400;
  const int q0[] = {0};
  const QuantumChannel truth_channel =
      embed_local_channel(QuantumChannel::amplitude_damping(0.2), q0, 1);
  const auto family = channel_family_learner(
      horizon, 1, 2.0, {truth_channel, QuantumChannel::identity(2)});
  DensityMatrix rho(HermitianMatrix::diagonal({0.05, 0.95}));
  for (int t = 0; t < horizon; ++t) {
    const Effect e = gen_effect(1, rng);
    family->observe(e, LossDescriptor{LossKind::kL2, e.probability(rho.matrix())});
    rho = apply_channel(truth_channel, rho);
  }
  EXPECT_EQ(family->leading_tag(), 0);
}

}  // namespace
}  // namespace qtrack
