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

#include "gapr/polytope.h"

#include <cmath>
#include <string>

#include "gapr/errors.h"

namespace gapr {

BinaryProgram AssignmentPolytope(const GaprInstance& inst) {
  const int tasks = inst.task_count();
  const int agents = inst.agent_count();
  BinaryProgram program;
  for (int i = 0; i < tasks; ++i) {
    for (int j = 0; j < agents; ++j) {
      program.AddVariable(0.0, "y_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  for (int i = 0; i < tasks; ++i) {
    std::vector<Term> row;
    for (int j = 0; j < agents; ++j) row.push_back({YVar(i, j, agents), 1.0});
    program.AddConstraint(std::move(row), Sense::kEqual, 1.0,
                          "assign_" + std::to_string(i));
  }
  if (std::isfinite(inst.capacity())) {
    for (int j = 0; j < agents; ++j) {
      std::vector<Term> row;
      for (int i = 0; i < tasks; ++i) {
        if (inst.weight(i) != 0.0) row.push_back({YVar(i, j, agents), inst.weight(i)});
      }
      program.AddConstraint(std::move(row), Sense::kLessEqual, inst.capacity(),
                            "capacity_" + std::to_string(j));
    }
  }
  if (inst.nonempty_agents()) {
    for (int j = 0; j < agents; ++j) {
      std::vector<Term> row;
      for (int i = 0; i < tasks; ++i) row.push_back({YVar(i, j, agents), 1.0});
      program.AddConstraint(std::move(row), Sense::kGreaterEqual, 1.0,
                            "nonempty_" + std::to_string(j));
    }
  }
  return program;
}

AssignmentPlan PlanFromSolution(std::span<const int> x, const GaprInstance& inst) {
  AssignmentMatrix y;
  y.tasks = inst.task_count();
  y.agents = inst.agent_count();
  y.values.resize(static_cast<std::size_t>(y.tasks) * y.agents);
  if (x.size() < y.values.size()) {
    throw SolverError("solution vector shorter than the assignment block");
  }
  for (std::size_t k = 0; k < y.values.size(); ++k) y.values[k] = x[k];
  return PlanFromY(y);
}

}  // namespace gapr
