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

#include "gapr/plan.h"

#include <algorithm>
#include <exception>
#include <string>

#include "gapr/errors.h"

namespace gapr {

AssignmentPlan::AssignmentPlan(std::vector<TaskSet> subsets)
    : subsets_(std::move(subsets)) {
  if (!subsets_.empty()) universe_ = subsets_.front().universe();
  for (const TaskSet& s : subsets_) {
    if (s.universe() != universe_) {
      throw Error("AssignmentPlan: subsets over different task universes");
    }
  }
}

std::vector<int> AssignmentPlan::AgentOfTask() const {
  std::vector<int> agent(universe_, -1);
  for (int k = 0; k < agent_count(); ++k) {
    for (int i : subsets_[k].Ids()) agent[i] = k;
  }
  return agent;
}

AssignmentPlan AssignmentPlan::Canonical() const {
  std::vector<TaskSet> sorted = subsets_;
  std::stable_sort(sorted.begin(), sorted.end(), CanonicalLess);
  return AssignmentPlan(std::move(sorted));
}

AssignmentPlan PlanFromY(const AssignmentMatrix& y) {
  if (y.tasks < 0 || y.agents <= 0 ||
      y.values.size() != static_cast<std::size_t>(y.tasks) * y.agents) {
    throw MalformedAssignmentError("assignment matrix has inconsistent shape");
  }
  std::vector<TaskSet> subsets(y.agents, TaskSet(y.tasks));
  for (int i = 0; i < y.tasks; ++i) {
    int row_sum = 0;
    for (int j = 0; j < y.agents; ++j) {
      const int v = y(i, j);
      if (v != 0 && v != 1) {
        throw MalformedAssignmentError("assignment matrix entries must be 0/1");
      }
      row_sum += v;
      if (v == 1) subsets[j].Insert(i);
    }
    if (row_sum != 1) {
      throw MalformedAssignmentError("row " + std::to_string(i) + " sums to " +
                                     std::to_string(row_sum));
    }
  }
  return AssignmentPlan(std::move(subsets));
}

AssignmentMatrix YFromPlan(const AssignmentPlan& plan) {
  AssignmentMatrix y;
  y.tasks = plan.task_universe();
  y.agents = plan.agent_count();
  y.values.assign(static_cast<std::size_t>(y.tasks) * y.agents, 0);
  for (int k = 0; k < plan.agent_count(); ++k) {
    for (int i : plan.subset(k).Ids()) y(i, k) = 1;
  }
  return y;
}

bool IsFeasible(const AssignmentPlan& plan, const GaprInstance& inst) {
  if (plan.agent_count() != inst.agent_count()) return false;
  if (plan.task_universe() != inst.task_count()) return false;
  std::vector<int> hits(inst.task_count(), 0);
  for (const TaskSet& s : plan.subsets()) {
    double load = 0.0;
    const std::vector<int> ids = s.Ids();
    for (int i : ids) {
      ++hits[i];
      load += inst.weight(i);
    }
    if (load > inst.capacity()) return false;
    if (inst.nonempty_agents() && ids.empty()) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ObjectiveValue EvaluateObjective(const AssignmentPlan& plan,
                                 const GaprInstance& inst) {
  if (!IsFeasible(plan, inst)) {
    throw InfeasiblePlanError("plan is not in the feasible region P");
  }
  ObjectiveValue value;
  value.routes.reserve(plan.agent_count());
  for (int k = 0; k < plan.agent_count(); ++k) {
    for (int i : plan.subset(k).Ids()) value.assignment_part += inst.cost(i, k);
  }
  for (int k = 0; k < plan.agent_count(); ++k) {
    RouteResult route;
    try {
      route = inst.oracle().Route(plan.subset(k));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(std::string("routing oracle failed: ") + e.what());
    }
    value.routing_part += route.cost;
    value.routes_exact = value.routes_exact && route.exact;
    value.routes.push_back(std::move(route.tour));
  }
  value.total = value.assignment_part + value.routing_part;
  return value;
}

bool Equivalent(const AssignmentPlan& a, const AssignmentPlan& b) {
  if (a.task_universe() != b.task_universe()) {
    throw Error("Equivalent: plans over different task universes");
  }
  if (a.agent_count() != b.agent_count()) return false;
  return a.Canonical() == b.Canonical();
}

int GCount(std::span<const int> agent_of_task, int agent_count,
           const TaskSet& subset) {
  std::vector<char> seen(agent_count, 0);
  int distinct = 0;
  for (int i : subset.Ids()) {
    const int k = agent_of_task[i];
    if (k >= 0 && !seen[k]) {
      seen[k] = 1;
      ++distinct;
    }
  }
  return distinct;
}

int GCount(const AssignmentPlan& plan, const TaskSet& subset) {
  if (subset.Empty()) throw Error("GCount: empty subset");
  int count = 0;
  for (const TaskSet& s : plan.subsets()) {
    if (s.Intersects(subset)) ++count;
  }
  return count;
}

bool CheckP1(const AssignmentPlan& plan, std::span<const TaskSet> subsets) {
  int total = 0;
  for (const TaskSet& s : subsets) total += GCount(plan, s);
  return total == static_cast<int>(subsets.size());
}

}  // namespace gapr
