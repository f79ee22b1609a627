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

#ifndef GAPR_SURROGATE_H_
#define GAPR_SURROGATE_H_

#include <optional>
#include <vector>

#include "gapr/binary_program.h"
#include "gapr/branch_and_bound.h"
#include "gapr/instance.h"
#include "gapr/plan.h"
#include "gapr/task_set.h"

namespace gapr {

// Weighted family of task subsets over one instance. The big-M of subset eta
// is |I_eta|.
class SetIndicatorModel {
 public:
  SetIndicatorModel(GaprInstance instance, std::vector<TaskSet> subsets,
                    std::vector<double> beta);

  const GaprInstance& instance() const { return instance_; }
  const std::vector<TaskSet>& subsets() const { return subsets_; }
  const std::vector<double>& beta() const { return beta_; }
  int size() const { return static_cast<int>(subsets_.size()); }
  int big_m(int eta) const { return subsets_[eta].Count(); }

  // Column of delta_{j,eta} in the compiled program.
  int DeltaVar(int agent, int eta) const {
    return instance_.task_count() * instance_.agent_count() +
           eta * instance_.agent_count() + agent;
  }

 private:
  GaprInstance instance_;
  std::vector<TaskSet> subsets_;
  std::vector<double> beta_;
};

// y block and rows of P, then one binary delta per (agent, subset) with
// objective beta_eta and the row |I_eta| delta_{j,eta} - sum_{i in I_eta}
// y_ij >= 0.
BinaryProgram Compile(const SetIndicatorModel& model);

struct SurrogateSolution {
  AssignmentPlan plan;
  MipResult mip;
  int rows = 0;
  int cols = 0;
};

SurrogateSolution SolveSurrogate(const SetIndicatorModel& model,
                                 const MipLimits& limits = {});

// Closed form of the surrogate value at a fixed plan: beta_eta * g for
// nonnegative weights, beta_eta * |J| for negative ones.
double EvaluateL(const AssignmentPlan& plan, const SetIndicatorModel& model);

// The same value obtained by fixing y in the compiled program and minimizing
// over delta with branch-and-bound.
double EvaluateLByMip(const AssignmentPlan& plan, const SetIndicatorModel& model);

// A single subset on which beta = 1 gives different surrogate values for two
// non-equivalent plans; nullopt when the plans are equivalent.
std::optional<std::vector<TaskSet>> DistinguishingH(const AssignmentPlan& s1,
                                                    const AssignmentPlan& s2);

}  // namespace gapr

#endif  // GAPR_SURROGATE_H_
