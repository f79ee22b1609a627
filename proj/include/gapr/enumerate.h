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

#ifndef GAPR_ENUMERATE_H_
#define GAPR_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gapr/instance.h"
#include "gapr/plan.h"

namespace gapr {

// Refuses instances with more than this many ordered assignments.
inline constexpr std::uint64_t kMaxEnumeration = 50'000'000;

AssignmentPlan PlanFromOwners(std::span<const int> agent_of_task, int agent_count);

// Calls `visit` with the agent of every task for each point of P.
void ForEachFeasibleAssignment(
    const GaprInstance& inst,
    const std::function<void(std::span<const int>)>& visit);

std::vector<AssignmentPlan> EnumerateFeasiblePlans(const GaprInstance& inst);

struct BruteForceResult {
  AssignmentPlan plan;
  double objective = 0.0;
  long feasible_count = 0;
};

// Exhaustive minimum of the true objective; ties go to the first plan in
// enumeration order.
BruteForceResult BruteForceOptimum(const GaprInstance& inst);

}  // namespace gapr

#endif  // GAPR_ENUMERATE_H_
