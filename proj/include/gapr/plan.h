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

#ifndef GAPR_PLAN_H_
#define GAPR_PLAN_H_

#include <span>
#include <vector>

#include "gapr/instance.h"
#include "gapr/task_set.h"

namespace gapr {

// Dense |I| x |J| 0/1 matrix, row-major: y[i * agents + j].
struct AssignmentMatrix {
  int tasks = 0;
  int agents = 0;
  std::vector<int> values;

  int operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * agents + j];
  }
  int& operator()(int i, int j) {
    return values[static_cast<std::size_t>(i) * agents + j];
  }
  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) =
      default;
};

// An ordered sequence of |J| task subsets, s = (s^k). Construction only
// checks that all subsets share the task universe; partition, capacity and
// nonemptiness are the business of IsFeasible.
class AssignmentPlan {
 public:
  AssignmentPlan() = default;
  explicit AssignmentPlan(std::vector<TaskSet> subsets);

  int agent_count() const { return static_cast<int>(subsets_.size()); }
  int task_universe() const { return universe_; }
  const TaskSet& subset(int k) const { return subsets_[k]; }
  const std::vector<TaskSet>& subsets() const { return subsets_; }

  // Agent index per task, -1 for unassigned tasks.
  std::vector<int> AgentOfTask() const;

  // Subsets reordered by CanonicalLess; equal for equivalent plans.
  AssignmentPlan Canonical() const;

  friend bool operator==(const AssignmentPlan&, const AssignmentPlan&) =
      default;

 private:
  int universe_ = 0;
  std::vector<TaskSet> subsets_;
};

// Per-agent routing plus assignment cost of a feasible plan.
struct ObjectiveValue {
  double total = 0.0;
  double assignment_part = 0.0;
  double routing_part = 0.0;
  std::vector<std::vector<int>> routes;
  bool routes_exact = true;
};

// Throws MalformedAssignmentError unless every row of y sums to one.
AssignmentPlan PlanFromY(const AssignmentMatrix& y);
AssignmentMatrix YFromPlan(const AssignmentPlan& plan);

// Partition, capacity and (when required) nonempty agents.
bool IsFeasible(const AssignmentPlan& plan, const GaprInstance& inst);

// c^T y plus the oracle's route cost for every agent. Throws
// InfeasiblePlanError for plans outside P and EvaluationError when the
// oracle fails.
ObjectiveValue EvaluateObjective(const AssignmentPlan& plan,
                                 const GaprInstance& inst);

// Equal up to a permutation of agents. Throws when universes differ.
bool Equivalent(const AssignmentPlan& a, const AssignmentPlan& b);

// Number of agents whose subset meets `subset`. Throws on an empty subset.
int GCount(const AssignmentPlan& plan, const TaskSet& subset);

// Same as GCount but from a precomputed AgentOfTask() map.
int GCount(std::span<const int> agent_of_task, int agent_count,
           const TaskSet& subset);

// sum over H of GCount == |H|, i.e. every subset of H sits inside one agent.
bool CheckP1(const AssignmentPlan& plan, std::span<const TaskSet> subsets);

}  // namespace gapr

#endif  // GAPR_PLAN_H_
