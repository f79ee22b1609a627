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

#include "gapr/surrogate.h"

#include <cmath>
#include <string>

#include "gapr/errors.h"
#include "gapr/polytope.h"

namespace gapr {

SetIndicatorModel::SetIndicatorModel(GaprInstance instance,
                                     std::vector<TaskSet> subsets,
                                     std::vector<double> beta)
    : instance_(std::move(instance)),
      subsets_(std::move(subsets)),
      beta_(std::move(beta)) {
  if (subsets_.size() != beta_.size()) {
    throw Error("surrogate: subset and weight counts differ");
  }
  for (const TaskSet& s : subsets_) {
    if (s.universe() != instance_.task_count()) {
      throw Error("surrogate: subset universe does not match the instance");
    }
    if (s.Empty()) throw Error("surrogate: empty subset");
  }
  for (double b : beta_) {
    if (!std::isfinite(b)) throw Error("surrogate: non-finite weight");
  }
}

BinaryProgram Compile(const SetIndicatorModel& model) {
  if (model.size() == 0) throw Error("surrogate: H is empty");
  const GaprInstance& inst = model.instance();
  const int agents = inst.agent_count();
  BinaryProgram program = AssignmentPolytope(inst);
  for (int eta = 0; eta < model.size(); ++eta) {
    for (int j = 0; j < agents; ++j) {
      const int var = program.AddVariable(
          model.beta()[eta],
          "d_" + std::to_string(j) + "_" + std::to_string(eta));
      if (var != model.DeltaVar(j, eta)) throw Error("surrogate: column layout");
    }
  }
  for (int eta = 0; eta < model.size(); ++eta) {
    const TaskSet& subset = model.subsets()[eta];
    for (int j = 0; j < agents; ++j) {
      std::vector<Term> row;
      row.push_back({model.DeltaVar(j, eta), static_cast<double>(model.big_m(eta))});
      for (int i : subset.Ids()) row.push_back({YVar(i, j, agents), -1.0});
      program.AddConstraint(std::move(row), Sense::kGreaterEqual, 0.0,
                            "link_" + std::to_string(j) + "_" + std::to_string(eta));
    }
  }
  return program;
}

SurrogateSolution SolveSurrogate(const SetIndicatorModel& model,
                                 const MipLimits& limits) {
  BinaryProgram program = Compile(model);
  SurrogateSolution out;
  out.rows = program.constraint_count();
  out.cols = program.var_count();
  // Rows below cut off fractional points only; every integer solution of
  // the compiled program (up to relabelling identical agents) survives.
  const GaprInstance& inst = model.instance();
  const int agents = inst.agent_count();
  for (int eta = 0; eta < model.size(); ++eta) {
    if (model.beta()[eta] <= 0.0 || model.big_m(eta) == 1) continue;
    for (int j = 0; j < agents; ++j) {
      for (int i : model.subsets()[eta].Ids()) {
        program.AddConstraint({{model.DeltaVar(j, eta), 1.0}, {YVar(i, j, agents), -1.0}},
                              Sense::kGreaterEqual, 0.0);
      }
    }
  }
  if (!inst.has_assignment_cost()) {
    // Agents are interchangeable: number them by their lowest task, so task
    // i goes to an agent with index at most i.
    for (int i = 0; i < std::min(inst.task_count(), agents); ++i) {
      for (int j = i + 1; j < agents; ++j) {
        program.AddConstraint({{YVar(i, j, agents), 1.0}}, Sense::kLessEqual, 0.0);
      }
    }
  }
  std::vector<int> priority(program.var_count(), 0);
  for (int k = 0; k < inst.task_count() * agents; ++k) priority[k] = 1;
  out.mip = BnbSolve(program, limits, priority);
  if (!out.mip.incumbent) {
    throw SolverError("surrogate solve returned no solution (" +
                      std::string(MipStatusName(out.mip.status)) + ")");
  }
  out.plan = PlanFromSolution(*out.mip.incumbent, model.instance());
  if (!IsFeasible(out.plan, model.instance())) {
    throw SolverError("surrogate solution is outside P");
  }
  return out;
}

double EvaluateL(const AssignmentPlan& plan, const SetIndicatorModel& model) {
  const std::vector<int> owner = plan.AgentOfTask();
  double total = 0.0;
  for (int eta = 0; eta < model.size(); ++eta) {
    const double b = model.beta()[eta];
    if (b >= 0.0) {
      total += b * GCount(owner, plan.agent_count(), model.subsets()[eta]);
    } else {
      total += b * plan.agent_count();
    }
  }
  return total;
}

double EvaluateLByMip(const AssignmentPlan& plan, const SetIndicatorModel& model) {
  BinaryProgram program = Compile(model);
  const int agents = model.instance().agent_count();
  const std::vector<int> owner = plan.AgentOfTask();
  for (int i = 0; i < model.instance().task_count(); ++i) {
    for (int j = 0; j < agents; ++j) {
      program.AddConstraint({{YVar(i, j, agents), 1.0}}, Sense::kEqual,
                            owner[i] == j ? 1.0 : 0.0,
                            "fix_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  const MipResult mip = BnbSolve(program);
  if (mip.status != MipStatus::kOptimal) {
    throw SolverError("fixed-plan surrogate evaluation did not reach optimality");
  }
  return mip.objective;
}

std::optional<std::vector<TaskSet>> DistinguishingH(const AssignmentPlan& s1,
                                                    const AssignmentPlan& s2) {
  if (Equivalent(s1, s2)) return std::nullopt;
  // Some nonempty subset of s1 is not a subset of s2. If it sits strictly
  // inside a subset of s2, that larger subset is split by s1; otherwise the
  // s1 subset itself is split by s2.
  for (const TaskSet& a : s1.subsets()) {
    if (a.Empty()) continue;
    bool present = false;
    for (const TaskSet& b : s2.subsets()) present = present || (a == b);
    if (present) continue;
    for (const TaskSet& b : s2.subsets()) {
      if (a.IsSubsetOf(b)) return std::vector<TaskSet>{b};
    }
    return std::vector<TaskSet>{a};
  }
  // Every nonempty s1 subset appears in s2; then s2 has a nonempty subset
  // missing from s1 and the symmetric argument applies.
  for (const TaskSet& b : s2.subsets()) {
    if (b.Empty()) continue;
    bool present = false;
    for (const TaskSet& a : s1.subsets()) present = present || (a == b);
    if (present) continue;
    for (const TaskSet& a : s1.subsets()) {
      if (b.IsSubsetOf(a)) return std::vector<TaskSet>{a};
    }
    return std::vector<TaskSet>{b};
  }
  return std::nullopt;
}

}  // namespace gapr
