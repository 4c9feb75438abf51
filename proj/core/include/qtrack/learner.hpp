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

#ifndef QTRACK_LEARNER_HPP_
#define QTRACK_LEARNER_HPP_

#include <functional>
#include <memory>
#include <string>

#include "qtrack/environment.hpp"
#include "qtrack/quantum.hpp"

namespace qtrack {

// One player in the T-round game. Each round the driver calls predict() and
// then observe() exactly once; observe() evaluates the loss at the learner's
// own current prediction and updates internal state.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual const DensityMatrix& predict() const = 0;
  virtual void observe(const Effect& effect, const LossDescriptor& loss) = 0;
  virtual std::string name() const = 0;
};

// Builds a fresh learner for a given horizon (used for interval black boxes).
using LearnerFactory = std::function<std::unique_ptr<Learner>(int horizon)>;

}  // namespace qtrack

#endif  // QTRACK_LEARNER_HPP_
