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


#include "gapr/generators.h"

#include <random>
#include <vector>

#include "gapr/enumerate.h"
#include "gapr/errors.h"
#include "gapr/plan.h"
#include "gapr/tour.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gapr {
namespace {

const TourGeometry& GeometryOf(const GaprInstance& inst) {
  return dynamic_cast<const TourOracle&>(inst.oracle()).geometry();
}

void ExpectSameInstance(const GaprInstance& a, const GaprInstance& b) {
  EXPECT_EQ(std::vector<double>(a.weights().begin(), a.weights().end()),
            std::vector<double>(b.weights().begin(), b.weights().end()));
  EXPECT_EQ(a.agent_count(), b.agent_count());
  EXPECT_EQ(a.capacity(), b.capacity());
  EXPECT_EQ(GeometryOf(a).points, GeometryOf(b).points);
  EXPECT_EQ(GeometryOf(a).task_nodes, GeometryOf(b).task_nodes);
}

TEST(JobprpTest, SeedDeterminism) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 2;
  p.seed = 7;
  ExpectSameInstance(GenerateJobprp(p), GenerateJobprp(p));
  JobprpParams q = p;
  q.seed = 8;
  EXPECT_NE(GeometryOf(GenerateJobprp(p)).task_nodes,
            GeometryOf(GenerateJobprp(q)).task_nodes);
}

TEST(JobprpTest, CountsAndWeights) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 2;
  p.min_items = 1;
  p.max_items = 3;
  p.seed = 3;
  const GaprInstance inst = GenerateJobprp(p);
  EXPECT_EQ(inst.task_count(), 10);
  EXPECT_EQ(inst.agent_count(), 2);
  EXPECT_FALSE(inst.nonempty_agents());
  const TourGeometry& geo = GeometryOf(inst);
  EXPECT_EQ(geo.metric, Metric::kManhattan);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(inst.weight(i), static_cast<double>(geo.task_nodes[i].size()));
    EXPECT_GE(inst.weight(i), 1.0);
    EXPECT_LE(inst.weight(i), 3.0);
  }
}

TEST(JobprpTest, RandomPlansEvaluate) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 3;
  p.capacity = 8;
  p.seed = 2;
  const GaprInstance inst = GenerateJobprp(p);
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<int> pick(0, 2);
  int evaluated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> owner(10);
    for (int& o : owner) o = pick(gen);
    const AssignmentPlan plan = PlanFromOwners(owner, 3);
    if (!IsFeasible(plan, inst)) continue;
    const ObjectiveValue v = EvaluateObjective(plan, inst);
    EXPECT_GE(v.total, 0.0);
    ++evaluated;
  }
  EXPECT_GT(evaluated, 50);
}

TEST(JobprpTest, InfeasiblePackingRejected) {
  JobprpParams p;
  p.orders = 10;
  p.trolleys = 2;
  p.min_items = 2;
  p.max_items = 2;
  p.capacity = 5;
  EXPECT_THROW(GenerateJobprp(p), GenerationError);
  p.capacity = 1;
  EXPECT_THROW(GenerateJobprp(p), GenerationError);
  p.capacity = 12;
  p.trolleys = 11;
  EXPECT_THROW(GenerateJobprp(p), GenerationError);
}

TEST(CluvrpTest, CountsAndDeterminism) {
  CluvrpParams p;
  p.clusters = 14;
  p.customers = 60;
  p.vehicles = 3;
  p.capacity = 200;
  p.seed = 1;
  const GaprInstance a = GenerateCluvrp(p);
  EXPECT_EQ(a.task_count(), 14);
  EXPECT_EQ(a.agent_count(), 3);
  ExpectSameInstance(a, GenerateCluvrp(p));
  int customers = 0;
  for (const auto& nodes : GeometryOf(a).task_nodes) {
    EXPECT_FALSE(nodes.empty());
    customers += static_cast<int>(nodes.size());
  }
  EXPECT_EQ(customers, 60);
  for (int i = 0; i < 14; ++i) EXPECT_GT(a.weight(i), 0.0);
}

TEST(CluvrpTest, SingleClusterRouteMatchesPermutations) {
  CluvrpParams p;
  p.clusters = 6;
  p.customers = 24;
  p.vehicles = 2;
  p.capacity = 1000;
  p.seed = 4;
  const GaprInstance inst = GenerateCluvrp(p);
  const TourGeometry& geo = GeometryOf(inst);
  int checked = 0;
  for (int k = 0; k < 6; ++k) {
    if (geo.task_nodes[k].size() > 8) continue;
    const RouteResult r = inst.oracle().Route(TaskSet(6, {k}));
    EXPECT_NEAR(r.cost,
                oracle::TspByPermutation(geo.metric, geo.points,
                                         geo.task_nodes[k]),
                1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(CluvrpTest, InvalidParameters) {
  CluvrpParams p;
  p.clusters = 2;
  p.vehicles = 3;
  EXPECT_THROW(GenerateCluvrp(p), GenerationError);
  p.clusters = 10;
  p.customers = 5;
  EXPECT_THROW(GenerateCluvrp(p), GenerationError);
  p.customers = 60;
  p.capacity = 10;
  EXPECT_THROW(GenerateCluvrp(p), GenerationError);
}

}  // namespace
}  // namespace gapr
