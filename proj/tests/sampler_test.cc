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


#include "gapr/sampler.h"

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gapr/enumerate.h"
#include "gapr/generators.h"
#include "gapr/plan.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gapr {
namespace {

std::string Key(const AssignmentPlan& plan) {
  const AssignmentPlan canonical = plan.Canonical();
  std::string key;
  for (const TaskSet& s : canonical.subsets()) key += s.Label();
  return key;
}

GaprInstance SmallJobprp(std::uint64_t seed) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 2;
  p.seed = seed;
  return GenerateJobprp(p);
}

TEST(RandomAssignmentCostsTest, UnitIntervalAndDeterministic) {
  const std::vector<double> a = RandomAssignmentCosts(4, 5, 3);
  ASSERT_EQ(a.size(), 15u);
  for (double c : a) {
    EXPECT_GE(c, 0.0);
    EXPECT_LT(c, 1.0);
  }
  EXPECT_EQ(a, RandomAssignmentCosts(4, 5, 3));
  EXPECT_NE(a, RandomAssignmentCosts(5, 5, 3));
}

TEST(SampleOnceTest, PlanIsCostOptimal) {
  const GaprInstance inst({1.0, 2.0, 1.0}, 2, kUnboundedCapacity, false);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<double> c = RandomAssignmentCosts(seed, 3, 2);
    double best = 1e9;
    for (const oracle::Owners& owner :
         oracle::FeasibleOwners({1, 2, 1}, 2, 1e9, false)) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i) v += c[i * 2 + owner[i]];
      best = std::min(best, v);
    }
    const Sample s = SampleOnce(inst, seed);
    ASSERT_TRUE(IsFeasible(s.plan, inst));
    const std::vector<int> owner = s.plan.AgentOfTask();
    double got = 0.0;
    for (int i = 0; i < 3; ++i) got += c[i * 2 + owner[i]];
    EXPECT_NEAR(got, best, 1e-9);
    EXPECT_FALSE(s.limit_hit);
  }
}

TEST(SampleOnceTest, CapacityRespected) {
  const GaprInstance inst({2.0, 2.0, 1.0, 1.0}, 2, 3, true);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(IsFeasible(SampleOnce(inst, seed).plan, inst));
  }
}

TEST(SampleOnceTest, SingleAgentGetsEverything) {
  const GaprInstance inst({1.0, 1.0, 1.0, 1.0}, 1, 10, false);
  const Sample s = SampleOnce(inst, 3);
  EXPECT_EQ(s.plan.subset(0), inst.AllTasks());
}

TEST(CollectTest, WorkerCountDoesNotMatter) {
  const GaprInstance inst = SmallJobprp(3);
  const Dataset a = Collect(inst, 10, 1, 17);
  const Dataset b = Collect(inst, 10, 4, 17);
  EXPECT_EQ(a.plans, b.plans);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.seeds, b.seeds);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.seeds[i], 17u + i);
}

TEST(CollectTest, StoredValuesReevaluate) {
  const GaprInstance inst = SmallJobprp(5);
  const Dataset d = Collect(inst, 30, 2, 1);
  ASSERT_EQ(d.size(), 30);
  EXPECT_EQ(d.meta.n, 30);
  EXPECT_EQ(d.meta.base_seed, 1u);
  double min_value = d.values[0];
  for (int i = 0; i < d.size(); ++i) {
    EXPECT_TRUE(IsFeasible(d.plans[i], inst));
    EXPECT_EQ(EvaluateObjective(d.plans[i], inst).total, d.values[i]);
    min_value = std::min(min_value, d.values[i]);
  }
  EXPECT_EQ(d.MinValue(), min_value);
}

TEST(CollectTest, CoversEveryEquivalenceClass) {
  const GaprInstance inst({1.0, 1.0, 1.0, 1.0}, 2, kUnboundedCapacity, false);
  std::set<std::string> expected;
  for (const AssignmentPlan& plan : EnumerateFeasiblePlans(inst)) {
    expected.insert(Key(plan));
  }
  EXPECT_EQ(expected.size(), 8u);
  const Dataset d = Collect(inst, 2000, 2, 0);
  std::set<std::string> seen;
  for (const AssignmentPlan& plan : d.plans) seen.insert(Key(plan));
  EXPECT_EQ(seen, expected);
}

TEST(CollectTest, RejectsBadArguments) {
  const GaprInstance inst({1.0, 1.0}, 2, 2, false);
  EXPECT_ANY_THROW(Collect(inst, 0, 1, 0));
  EXPECT_ANY_THROW(Collect(inst, 5, 0, 0));
}

}  // namespace
}  // namespace gapr
