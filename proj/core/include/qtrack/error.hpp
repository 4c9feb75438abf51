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

#ifndef QTRACK_ERROR_HPP_
#define QTRACK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qtrack {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric failures: non-convergence, domain violations, shape mismatches.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public NumericError {
 public:
  using NumericError::NumericError;
};

// An argument lies outside the mathematical domain of an operation
// (e.g. log of a singular matrix, a "density matrix" with trace != 1).
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Invalid experiment configuration. Reported before any computation starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtrack

#endif  // QTRACK_ERROR_HPP_
