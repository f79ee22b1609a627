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

#ifndef GAPR_INSTANCE_H_
#define GAPR_INSTANCE_H_

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "gapr/task_set.h"

namespace gapr {

// Result of routing one agent over a set of tasks. `tour` starts at the depot
// (node 0) and lists visited nodes in order; the return leg is implicit. An
// empty route is just {0}.
struct RouteResult {
  double cost = 0.0;
  std::vector<int> tour{0};
  bool exact = true;
};

// Supplies the routing part of the objective: the cost of the best route an
// agent can take to serve a given set of tasks. Implementations must be safe
// to call concurrently.
class RoutingOracle {
 public:
  virtual ~RoutingOracle() = default;
  virtual RouteResult Route(const TaskSet& tasks) const = 0;
};

// Oracle for instances without routing: every route is free.
class ZeroRoutingOracle final : public RoutingOracle {
 public:
  RouteResult Route(const TaskSet&) const override { return {}; }
};

inline constexpr double kUnboundedCapacity =
    std::numeric_limits<double>::infinity();

// A GAP-with-routing instance: tasks with weights, homogeneous agents of
// capacity Q, an assignment cost matrix and the routing oracle. Immutable.
class GaprInstance {
 public:
  // Throws InvalidInstanceError when weights are negative, the total weight
  // exceeds the fleet capacity, or nonempty agents outnumber the tasks.
  // `assignment_cost` is row-major |I| x |J|; empty means all zero.
  GaprInstance(std::vector<double> weights, int agent_count, double capacity,
               bool nonempty_agents,
               std::shared_ptr<const RoutingOracle> oracle = nullptr,
               std::vector<double> assignment_cost = {});

  int task_count() const { return static_cast<int>(weights_.size()); }
  int agent_count() const { return agent_count_; }
  double capacity() const { return capacity_; }
  bool nonempty_agents() const { return nonempty_agents_; }
  double weight(int task) const { return weights_[task]; }
  std::span<const double> weights() const { return weights_; }
  double total_weight() const { return total_weight_; }

  // c_ij.
  double cost(int task, int agent) const {
    return assignment_cost_[static_cast<std::size_t>(task) * agent_count_ +
                            agent];
  }
  std::span<const double> assignment_cost() const { return assignment_cost_; }
  bool has_assignment_cost() const { return has_assignment_cost_; }

  // True when the capacity rows can never bind.
  bool capacity_is_slack() const { return capacity_ >= total_weight_; }

  const RoutingOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const RoutingOracle> oracle_ptr() const { return oracle_; }

  TaskSet AllTasks() const;

 private:
  std::vector<double> weights_;
  int agent_count_;
  double capacity_;
  bool nonempty_agents_;
  std::shared_ptr<const RoutingOracle> oracle_;
  std::vector<double> assignment_cost_;
  bool has_assignment_cost_ = false;
  double total_weight_ = 0.0;
};

}  // namespace gapr

#endif  // GAPR_INSTANCE_H_
