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

#ifndef GAPR_VERIFY_H_
#define GAPR_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gapr/instance.h"

namespace gapr {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

// features, containment, closed-form, separation, reconstruction,
// residual-bound, calibration, bnb, lasso; "all" runs every one.
const std::vector<std::string>& SuiteNames();
bool IsSuite(const std::string& name);
std::vector<CheckResult> RunSuite(const std::string& name, std::uint64_t seed = 1);

// Small random instance with one Euclidean location per task and integer
// weights in [1, 3]. Capacity is unbounded when `tight` is false, otherwise
// the smallest value at or above the average load that keeps P nonempty.
GaprInstance RandomSmallInstance(int tasks, int agents, bool tight,
                                 bool nonempty, std::uint64_t seed);

}  // namespace gapr

#endif  // GAPR_VERIFY_H_
