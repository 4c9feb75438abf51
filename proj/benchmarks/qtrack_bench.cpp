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


#include <benchmark/benchmark.h>

#include <memory>

#include "qtrack/adaptive.hpp"
#include "qtrack/environment.hpp"
#include "qtrack/linalg.hpp"
#include "qtrack/meta.hpp"
#include "qtrack/omd.hpp"
#include "qtrack/random.hpp"

namespace {

using namespace qtrack;

void BM_HermitianEig(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const HermitianMatrix m = random_hermitian(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_OmdStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const ClippedDomain domain(n, 1000);
  OmdState omd = OmdState::initial(0.1, domain, 2.0);
  const DensityMatrix rho(random_density(domain.dim(), rng));
  for (auto _ : state) {
    const Effect e = gen_effect(n, rng);
    const LossDescriptor loss{LossKind::kL2, e.probability(rho.matrix())};
    omd = omd_step(std::move(omd), e, loss);
  }
}
BENCHMARK(BM_OmdStep)->DenseRange(1, 3);

template <typename Make>
void RunRounds(benchmark::State& state, Make make) {
  const int n = static_cast<int>(state.range(0));
  constexpr int kHorizon = 1024;
  Rng rng(3);
  const DensityMatrix rho(random_density(dimension_for_qubits(n), rng));
  for (auto _ : state) {
    state.PauseTiming();
    std::unique_ptr<Learner> learner = make(kHorizon, n);
    state.ResumeTiming();
    for (int t = 0; t < kHorizon; ++t) {
      const Effect e = gen_effect(n, rng);
      learner->observe(e, LossDescriptor{LossKind::kL2, e.probability(rho.matrix())});
    }
    benchmark::DoNotOptimize(learner->predict());
  }
  state.SetItemsProcessed(state.iterations() * kHorizon);
}

void BM_DynamicRounds(benchmark::State& state) {
  RunRounds(state, [](int t, int n) { return dynamic_learner(t, n, 2.0); });
}
BENCHMARK(BM_DynamicRounds)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_AdaptiveRounds(benchmark::State& state) {
  RunRounds(state, [](int t, int n) { return adaptive_rftl_learner(t, n, 2.0); });
}
BENCHMARK(BM_AdaptiveRounds)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
