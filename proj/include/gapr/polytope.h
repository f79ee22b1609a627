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

#ifndef GAPR_POLYTOPE_H_
#define GAPR_POLYTOPE_H_

#include <span>

#include "gapr/binary_program.h"
#include "gapr/instance.h"
#include "gapr/plan.h"

namespace gapr {

// Column of y_ij in programs built over P.
inline int YVar(int task, int agent, int agent_count) {
  return task * agent_count + agent;
}

// Binary program with the |I| x |J| assignment variables and the rows that
// define P: one-agent-per-task equalities, capacity rows (omitted when the
// capacity is infinite) and, for nonempty agents, at-least-one rows. The
// objective is zero.
BinaryProgram AssignmentPolytope(const GaprInstance& inst);

// Reads the y block of a 0/1 solution back into a plan.
AssignmentPlan PlanFromSolution(std::span<const int> x, const GaprInstance& inst);

}  // namespace gapr

#endif  // GAPR_POLYTOPE_H_
