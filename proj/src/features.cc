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

#include "gapr/features.h"

#include "gapr/errors.h"

namespace gapr {

FeatureMatrix BuildFeatures(std::span<const AssignmentPlan> plans,
                            std::span<const TaskSet> subsets) {
  if (subsets.empty()) throw Error("feature columns must not be empty");
  for (const TaskSet& s : subsets) {
    if (s.Empty()) throw Error("feature column subsets must be nonempty");
  }
  FeatureMatrix a;
  a.values = DenseMatrix(static_cast<int>(plans.size()),
                         static_cast<int>(subsets.size()));
  a.columns.assign(subsets.begin(), subsets.end());
  for (int r = 0; r < a.values.rows(); ++r) {
    const AssignmentPlan& plan = plans[r];
    const std::vector<int> owner = plan.AgentOfTask();
    for (int c = 0; c < a.values.cols(); ++c) {
      if (subsets[c].universe() != plan.task_universe()) {
        throw Error("feature subset and plan disagree on the task universe");
      }
      a.values(r, c) = GCount(owner, plan.agent_count(), subsets[c]);
    }
  }
  return a;
}

void WriteFeatureCsv(const FeatureMatrix& a, std::ostream& out) {
  for (std::size_t c = 0; c < a.columns.size(); ++c) {
    if (c) out << ',';
    out << '"' << a.columns[c].Label() << '"';
  }
  out << '\n';
  for (int r = 0; r < a.values.rows(); ++r) {
    for (int c = 0; c < a.values.cols(); ++c) {
      if (c) out << ',';
      out << static_cast<int>(a.values(r, c));
    }
    out << '\n';
  }
}

}  // namespace gapr
