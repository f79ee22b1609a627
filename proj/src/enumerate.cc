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

#include "gapr/enumerate.h"

#include <cmath>
#include <limits>

#include "gapr/errors.h"

namespace gapr {

AssignmentPlan PlanFromOwners(std::span<const int> agent_of_task, int agent_count) {
  const int tasks = static_cast<int>(agent_of_task.size());
  std::vector<TaskSet> subsets(agent_count, TaskSet(tasks));
  for (int i = 0; i < tasks; ++i) {
    const int j = agent_of_task[i];
    if (j < 0 || j >= agent_count) throw MalformedAssignmentError("agent out of range");
    subsets[j].Insert(i);
  }
  return AssignmentPlan(std::move(subsets));
}

void ForEachFeasibleAssignment(
    const GaprInstance& inst,
    const std::function<void(std::span<const int>)>& visit) {
  const int tasks = inst.task_count();
  const int agents = inst.agent_count();
  const double total = std::pow(static_cast<double>(agents), tasks);
  if (total > static_cast<double>(kMaxEnumeration)) {
    throw Error("too many assignments to enumerate");
  }
  std::vector<int> owner(tasks, 0);
  std::vector<double> load(agents, 0.0);
  std::vector<int> size(agents, 0);
  const double cap = inst.capacity();
  // Depth-first over tasks with capacity pruning; the nonempty rule is
  // checked at the leaves and pruned once too few tasks remain.
  std::function<void(int)> rec = [&](int i) {
    if (i == tasks) {
      if (inst.nonempty_agents()) {
        for (int s : size) {
          if (s == 0) return;
        }
      }
      visit(owner);
      return;
    }
    if (inst.nonempty_agents()) {
      int empty = 0;
      for (int s : size) empty += s == 0 ? 1 : 0;
      if (empty > tasks - i) return;
    }
    for (int j = 0; j < agents; ++j) {
      if (load[j] + inst.weight(i) > cap) continue;
      owner[i] = j;
      load[j] += inst.weight(i);
      ++size[j];
      rec(i + 1);
      load[j] -= inst.weight(i);
      --size[j];
    }
  };
  rec(0);
}

std::vector<AssignmentPlan> EnumerateFeasiblePlans(const GaprInstance& inst) {
  std::vector<AssignmentPlan> plans;
  ForEachFeasibleAssignment(inst, [&](std::span<const int> owner) {
    plans.push_back(PlanFromOwners(owner, inst.agent_count()));
  });
  return plans;
}

BruteForceResult BruteForceOptimum(const GaprInstance& inst) {
  BruteForceResult best;
  best.objective = std::numeric_limits<double>::infinity();
  ForEachFeasibleAssignment(inst, [&](std::span<const int> owner) {
    ++best.feasible_count;
    AssignmentPlan plan = PlanFromOwners(owner, inst.agent_count());
    const double value = EvaluateObjective(plan, inst).total;
    if (value < best.objective) {
      best.objective = value;
      best.plan = std::move(plan);
    }
  });
  if (best.feasible_count == 0) throw InfeasiblePlanError("P is empty");
  return best;
}

}  // namespace gapr
