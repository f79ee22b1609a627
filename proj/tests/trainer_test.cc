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


#include "gapr/trainer.h"

#include <cmath>
#include <memory>
#include <set>
#include <vector>

#include "gapr/enumerate.h"
#include "gapr/generators.h"
#include "gapr/instance.h"
#include "gapr/plan.h"
#include "gapr/sampler.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gapr {
namespace {

// Route cost of a task set = number of planted subsets it touches, so the
// objective of a plan is exactly the planted counting model.
class PlantedOracle final : public RoutingOracle {
 public:
  explicit PlantedOracle(std::vector<TaskSet> planted)
      : planted_(std::move(planted)) {}
  RouteResult Route(const TaskSet& tasks) const override {
    RouteResult r;
    for (const TaskSet& s : planted_) r.cost += s.Intersects(tasks) ? 1.0 : 0.0;
    return r;
  }

 private:
  std::vector<TaskSet> planted_;
};

std::vector<TaskSet> Planted() {
  return {TaskSet(6, {0, 1, 2}), TaskSet(6, {1, 3, 5}), TaskSet(6, {2, 4, 5})};
}

GaprInstance PlantedInstance() {
  return GaprInstance(std::vector<double>(6, 1.0), 2, 3, true,
                      std::make_shared<PlantedOracle>(Planted()));
}

GaprInstance Jobprp(std::uint64_t seed) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 2;
  p.seed = seed;
  return GenerateJobprp(p);
}

void ExpectInvariants(const TrainReport& report, const Dataset& data,
                      const TrainConfig& config) {
  const int cap = static_cast<int>(std::floor(config.theta * data.size()));
  double last_z = std::numeric_limits<double>::infinity();
  for (const IterationLog& log : report.iterations) {
    EXPECT_LE(log.columns, cap);
    EXPECT_LE(log.support, log.columns);
    if (log.accepted) {
      EXPECT_LT(log.z, last_z);
      last_z = log.z;
    }
  }
  for (double b : report.best_beta) EXPECT_GT(std::abs(b), config.eps_zero);
  std::set<std::vector<int>> unique;
  for (const TaskSet& s : report.best_subsets) unique.insert(s.Ids());
  EXPECT_EQ(unique.size(), report.best_subsets.size());
  EXPECT_EQ(report.best_subsets.size(), report.best_beta.size());
}

TEST(TrainConfigTest, Validation) {
  TrainConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.theta = 0.0;
  EXPECT_ANY_THROW(c.Validate());
  c = TrainConfig();
  c.pi_limit = 2;
  EXPECT_ANY_THROW(c.Validate());
  c = TrainConfig();
  c.pi_card = 0;
  EXPECT_ANY_THROW(c.Validate());
  c = TrainConfig();
  c.r_limit = std::nan("");
  EXPECT_ANY_THROW(c.Validate());
}

TEST(TrainTest, RecoversPlantedModel) {
  const GaprInstance inst = PlantedInstance();
  const Dataset data = Collect(inst, 60, 1, 1);
  TrainConfig config;
  config.theta = 0.5;
  config.pi_card = 3;
  config.pi_limit = 3;
  const TrainReport report = Train(inst, data, config);
  ASSERT_FALSE(report.iterations.empty());
  const IterationLog& first = report.iterations.front();
  EXPECT_EQ(first.columns, 20);
  EXPECT_GT(first.r2, 0.9999);
  ASSERT_TRUE(first.surrogate_solved);
  ASSERT_TRUE(first.accepted);
  std::set<std::vector<int>> support;
  for (const TaskSet& s : report.best_subsets) support.insert(s.Ids());
  for (const TaskSet& s : Planted()) EXPECT_TRUE(support.contains(s.Ids()));

  double best = 1e9;
  for (const AssignmentPlan& plan : EnumerateFeasiblePlans(inst)) {
    int g = 0;
    for (const TaskSet& s : Planted()) g += GCount(plan, s);
    best = std::min(best, static_cast<double>(g));
  }
  EXPECT_EQ(report.best_objective, best);
  EXPECT_FALSE(report.best_plan_from_samples);
  ExpectInvariants(report, data, config);
}

TEST(TrainTest, UnreachableGateFallsBackToSamples) {
  const GaprInstance inst = Jobprp(2);
  const Dataset data = Collect(inst, 60, 1, 5);
  TrainConfig config;
  config.r_limit = 1.1;
  config.pi_limit = 3;
  const TrainReport report = Train(inst, data, config);
  EXPECT_TRUE(std::isinf(report.best_objective));
  EXPECT_TRUE(report.best_plan_from_samples);
  EXPECT_TRUE(report.stop_reason == StopReason::kR2NeverPassed ||
              report.stop_reason == StopReason::kCardinalityExhausted ||
              report.stop_reason == StopReason::kBudget);
  for (const IterationLog& log : report.iterations) {
    EXPECT_FALSE(log.surrogate_solved);
  }
  EXPECT_EQ(EvaluateObjective(report.best_plan, inst).total, data.MinValue());
}

TEST(TrainTest, FirstIterationUsesColumnBudget) {
  const GaprInstance inst = Jobprp(3);
  const Dataset data = Collect(inst, 50, 1, 9);
  TrainConfig config;
  config.theta = 0.2;
  config.pi_card = 3;
  const TrainReport report = Train(inst, data, config);
  ASSERT_FALSE(report.iterations.empty());
  EXPECT_EQ(report.iterations.front().columns, 10);
  EXPECT_EQ(report.iterations.front().pending, 120 - 10);
  ExpectInvariants(report, data, config);
}

TEST(TrainTest, InvariantsOnSampledInstances) {
  for (std::uint64_t seed : {4, 6}) {
    const GaprInstance inst = Jobprp(seed);
    const Dataset data = Collect(inst, 200, 1, seed);
    TrainConfig config;
    const TrainReport report = Train(inst, data, config);
    ExpectInvariants(report, data, config);
    if (!report.best_plan_from_samples) {
      EXPECT_EQ(EvaluateObjective(report.best_plan, inst).total,
                report.best_objective);
    }
  }
}

TEST(TrainTest, RejectsEmptyDataset) {
  const GaprInstance inst = Jobprp(3);
  EXPECT_ANY_THROW(Train(inst, Dataset{}, TrainConfig{}));
}

TEST(PipelineTest, DeterministicAcrossRuns) {
  const GaprInstance inst = Jobprp(7);
  TrainConfig config;
  config.shuffle_seed = 3;
  const PipelineResult a = Pipeline(inst, 120, config, 11, 1);
  const PipelineResult b = Pipeline(inst, 120, config, 11, 2);
  EXPECT_EQ(a.data.plans, b.data.plans);
  EXPECT_EQ(a.report.best_objective, b.report.best_objective);
  EXPECT_EQ(a.report.best_plan, b.report.best_plan);
  EXPECT_EQ(a.report.best_subsets, b.report.best_subsets);
  EXPECT_EQ(a.report.best_beta, b.report.best_beta);
  EXPECT_EQ(a.report.stop_reason, b.report.stop_reason);
  ASSERT_EQ(a.report.iterations.size(), b.report.iterations.size());
  for (std::size_t k = 0; k < a.report.iterations.size(); ++k) {
    EXPECT_EQ(a.report.iterations[k].columns, b.report.iterations[k].columns);
    EXPECT_EQ(a.report.iterations[k].gamma, b.report.iterations[k].gamma);
    EXPECT_EQ(a.report.iterations[k].z, b.report.iterations[k].z);
  }
}

TEST(PipelineTest, SmokeReportsAllFields) {
  const GaprInstance inst = Jobprp(1);
  TrainConfig config;
  config.time_budget_s = 60;
  const PipelineResult r = Pipeline(inst, 100, config, 1, 1);
  EXPECT_EQ(r.data.size(), 100);
  EXPECT_FALSE(r.report.iterations.empty());
  EXPECT_GT(r.report.train_seconds, 0.0);
  EXPECT_NEAR(r.report.total_seconds(),
              r.report.avg_sample_seconds + r.report.train_seconds, 1e-12);
  EXPECT_TRUE(IsFeasible(r.report.best_plan, inst));
  EXPECT_STRNE(StopReasonName(r.report.stop_reason), "?");
}

}  // namespace
}  // namespace gapr
