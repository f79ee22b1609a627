// Copyright 2026 The gapr Authors
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

#ifndef GAPR_ERRORS_H_
#define GAPR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gapr {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance data violates a model invariant (negative weight, packing
// impossible, ...).
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// A 0/1 assignment matrix whose rows do not each sum to one.
class MalformedAssignmentError : public Error {
 public:
  using Error::Error;
};

// Operation requires a plan in P but got one outside it.
class InfeasiblePlanError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

// Random instance generation could not satisfy the requested parameters.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Malformed or incompatible file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gapr

#endif  // GAPR_ERRORS_H_
