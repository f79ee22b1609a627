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

#include "gapr/instance.h"

#include <cmath>
#include <numeric>
#include <string>

#include "gapr/errors.h"

namespace gapr {

GaprInstance::GaprInstance(std::vector<double> weights, int agent_count,
                           double capacity, bool nonempty_agents,
                           std::shared_ptr<const RoutingOracle> oracle,
                           std::vector<double> assignment_cost)
    : weights_(std::move(weights)),
      agent_count_(agent_count),
      capacity_(capacity),
      nonempty_agents_(nonempty_agents),
      oracle_(std::move(oracle)),
      assignment_cost_(std::move(assignment_cost)) {
  if (agent_count_ <= 0) throw InvalidInstanceError("agent count must be positive");
  if (!(capacity_ > 0)) throw InvalidInstanceError("capacity must be positive");
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0) {
      throw InvalidInstanceError("task weights must be finite and nonnegative");
    }
  }
  total_weight_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (total_weight_ > capacity_ * agent_count_) {
    throw InvalidInstanceError(
        "total weight " + std::to_string(total_weight_) +
        " exceeds fleet capacity " + std::to_string(capacity_ * agent_count_));
  }
  if (nonempty_agents_ && task_count() < agent_count_) {
    throw InvalidInstanceError("nonempty agents need at least |J| tasks");
  }
  const std::size_t cells =
      static_cast<std::size_t>(task_count()) * agent_count_;
  if (assignment_cost_.empty()) {
    assignment_cost_.assign(cells, 0.0);
  } else if (assignment_cost_.size() != cells) {
    throw InvalidInstanceError("assignment cost matrix must be |I| x |J|");
  } else {
    has_assignment_cost_ = true;
    for (double c : assignment_cost_) {
      if (!std::isfinite(c)) throw InvalidInstanceError("non-finite assignment cost");
    }
  }
  if (!oracle_) oracle_ = std::make_shared<ZeroRoutingOracle>();
}

TaskSet GaprInstance::AllTasks() const {
  TaskSet all(task_count());
  for (int i = 0; i < task_count(); ++i) all.Insert(i);
  return all;
}

}  // namespace gapr
