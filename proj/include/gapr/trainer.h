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

#ifndef GAPR_TRAINER_H_
#define GAPR_TRAINER_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gapr/branch_and_bound.h"
#include "gapr/instance.h"
#include "gapr/lasso.h"
#include "gapr/plan.h"
#include "gapr/sampler.h"
#include "gapr/task_set.h"

namespace gapr {

inline constexpr double kDefaultSurrogateTimeLimit = 20.0;

struct TrainConfig {
  double theta = 0.2;
  int pi_card = 3;
  int pi_limit = 5;
  double r_limit = 0.5;
  double eps_zero = kZeroCoefficient;
  std::optional<std::uint64_t> shuffle_seed;
  MipLimits surrogate_limits{kDefaultSurrogateTimeLimit};
  double time_budget_s = std::numeric_limits<double>::infinity();

  void Validate() const;
};

enum class StopReason { kNonImprovement, kCardinalityExhausted, kR2NeverPassed, kBudget };
const char* StopReasonName(StopReason reason);

struct IterationLog {
  int index = 0;
  int pi_card = 0;          // cardinality of the most recent refill
  int columns = 0;          // |H| entering the regression
  int support = 0;          // |H| after pruning
  int pending = 0;          // candidates left in the pool
  double gamma = 0.0;
  double r2 = 0.0;
  bool r2_degenerate = false;
  int lasso_sweeps = 0;
  bool surrogate_solved = false;
  MipStatus mip_status = MipStatus::kUnknown;
  double surrogate_objective = std::numeric_limits<double>::quiet_NaN();
  long mip_nodes = 0;
  int program_rows = 0;
  int program_cols = 0;
  double mip_gap = std::numeric_limits<double>::quiet_NaN();
  double mip_seconds = 0.0;
  double z = std::numeric_limits<double>::quiet_NaN();
  bool accepted = false;
  double seconds = 0.0;
  std::string error;
};

struct TrainReport {
  double best_objective = std::numeric_limits<double>::infinity();
  AssignmentPlan best_plan;
  // True when no surrogate passed the gate and best_plan is the best sample.
  bool best_plan_from_samples = false;
  std::vector<TaskSet> best_subsets;
  std::vector<double> best_beta;
  std::vector<IterationLog> iterations;
  StopReason stop_reason = StopReason::kCardinalityExhausted;
  double avg_sample_seconds = 0.0;
  double train_seconds = 0.0;
  double solve_seconds = 0.0;
  // Average single-sample time plus training time.
  double total_seconds() const { return avg_sample_seconds + train_seconds; }
};

// Greedy search training over the cardinality-ordered subset catalog.
TrainReport Train(const GaprInstance& inst, const Dataset& data,
                  const TrainConfig& config);

struct PipelineResult {
  Dataset data;
  TrainReport report;
};

// Collect N samples, then train.
PipelineResult Pipeline(const GaprInstance& inst, int n, const TrainConfig& config,
                        std::uint64_t base_seed, int workers,
                        const MipLimits& sample_limits = {kDefaultSampleTimeLimit});

}  // namespace gapr

#endif  // GAPR_TRAINER_H_
