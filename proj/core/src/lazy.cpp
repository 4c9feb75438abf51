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


#include "qtrack/lazy.hpp"

#include <cmath>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {

LazyLearner::LazyLearner(std::unique_ptr<Learner> inner, double epsilon)
    : inner_(std::move(inner)), epsilon_(epsilon) {
  if (!inner_) throw DomainError("LazyLearner: null inner learner");
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw DomainError("LazyLearner: epsilon must be > 0");
  }
}

void LazyLearner::observe(const Effect& effect, const LossDescriptor& loss) {
  const double l = loss_eval(loss, effect.probability(inner_->predict().matrix()));
  if (l > 2.0 * epsilon_ / 3.0) {
    inner_->observe(effect, loss);
    ++updates_;
  }
}

std::string LazyLearner::name() const {
  std::ostringstream out;
  out << "lazy(eps=" << epsilon_ << ", " << inner_->name() << ")";
  return out.str();
}

std::unique_ptr<LazyLearner> lazy_update_wrapper(std::unique_ptr<Learner> inner,
                                                 double epsilon) {
  return std::make_unique<LazyLearner>(std::move(inner), epsilon);
}

}  // namespace qtrack
