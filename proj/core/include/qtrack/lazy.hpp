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

// Lazy wrapper: the inner learner only sees rounds whose realized loss
// exceeds 2 epsilon / 3.

#ifndef QTRACK_LAZY_HPP_
#define QTRACK_LAZY_HPP_

#include <memory>

#include "qtrack/learner.hpp"

namespace qtrack {

class LazyLearner final : public Learner {
 public:
  LazyLearner(std::unique_ptr<Learner> inner, double epsilon);

  const DensityMatrix& predict() const override { return inner_->predict(); }
  void observe(const Effect& effect, const LossDescriptor& loss) override;
  std::string name() const override;

  double epsilon() const noexcept { return epsilon_; }
  // Rounds forwarded to the inner learner.
  int update_count() const noexcept { return updates_; }
  const Learner& inner() const noexcept { return *inner_; }

 private:
  std::unique_ptr<Learner> inner_;
  double epsilon_;
  int updates_ = 0;
};

std::unique_ptr<LazyLearner> lazy_update_wrapper(std::unique_ptr<Learner> inner,
                                                 double epsilon);

}  // namespace qtrack

#endif  // QTRACK_LAZY_HPP_
