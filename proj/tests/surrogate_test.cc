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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gapr/enumerate.h"
#include "gapr/plan.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gapr {
namespace {

AssignmentPlan MakePlan(int tasks, std::vector<std::vector<int>> parts) {
  std::vector<TaskSet> subsets;
  for (const auto& part : parts) subsets.emplace_back(tasks, part);
  return AssignmentPlan(std::move(subsets));
}

std::vector<TaskSet> AllSubsets(int tasks) {
  std::vector<TaskSet> out;
  for (int mask = 1; mask < (1 << tasks); ++mask) {
    TaskSet s(tasks);
    for (int i = 0; i < tasks; ++i) {
      if (mask >> i & 1) s.Insert(i);
    }
    out.push_back(s);
  }
  return out;
}

// Closed form of the inner minimum written from the counting oracle.
double OracleL(const oracle::Owners& owner, int agents,
               const std::vector<TaskSet>& h, const std::vector<double>& beta) {
  double total = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    total += beta[k] >= 0 ? beta[k] * oracle::G(owner, h[k].Ids())
                          : beta[k] * agents;
  }
  return total;
}

struct RandomModel {
  std::vector<TaskSet> h;
  std::vector<double> beta;
};

RandomModel Draw(std::mt19937_64& gen, int tasks, bool mixed) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> mask(1, (1 << tasks) - 1);
  std::uniform_real_distribution<double> weight(mixed ? -2.0 : 0.0, 3.0);
  RandomModel m;
  const int n = count(gen);
  for (int k = 0; k < n; ++k) {
    const int bits = mask(gen);
    TaskSet s(tasks);
    for (int i = 0; i < tasks; ++i) {
      if (bits >> i & 1) s.Insert(i);
    }
    m.h.push_back(s);
    m.beta.push_back(weight(gen));
  }
  return m;
}

GaprInstance UnitInstance(int tasks, int agents, double capacity,
                          bool nonempty) {
  return GaprInstance(std::vector<double>(tasks, 1.0), agents, capacity,
                      nonempty);
}

TEST(CompileTest, CountsWithFiniteCapacity) {
  const std::vector<TaskSet> h = {TaskSet(3, {0, 1}), TaskSet(3, {0, 2}),
                                  TaskSet(3, {1, 2})};
  const SetIndicatorModel model(UnitInstance(3, 2, 2, false), h, {1, 1, 1});
  const BinaryProgram p = Compile(model);
  EXPECT_EQ(p.var_count(), 12);
  EXPECT_EQ(p.constraint_count(), 11);
  const SetIndicatorModel strict(UnitInstance(3, 2, 2, true), h, {1, 1, 1});
  EXPECT_EQ(Compile(strict).constraint_count(), 13);
  EXPECT_EQ(model.big_m(0), 2);
  EXPECT_EQ(p.objective()[model.DeltaVar(1, 2)], 1.0);
}

TEST(CompileTest, SingletonLinkRow) {
  const SetIndicatorModel model(UnitInstance(3, 2, 3, false),
                                {TaskSet(3, {2})}, {1.5});
  const BinaryProgram p = Compile(model);
  int links = 0;
  for (const Constraint& row : p.constraints()) {
    if (row.name.rfind("link_", 0) != 0) continue;
    ++links;
    ASSERT_EQ(row.terms.size(), 2u);
    EXPECT_EQ(row.sense, Sense::kGreaterEqual);
    EXPECT_EQ(row.rhs, 0.0);
    double delta = 0.0, y = 0.0;
    for (const Term& t : row.terms) {
      if (t.var >= 6) {
        delta = t.coef;
      } else {
        y = t.coef;
        EXPECT_EQ(t.var / 2, 2);
      }
    }
    EXPECT_EQ(delta, 1.0);
    EXPECT_EQ(y, -1.0);
  }
  EXPECT_EQ(links, 2);
}

TEST(SetIndicatorModelTest, RejectsBadInput) {
  const GaprInstance inst = UnitInstance(3, 2, 3, false);
  EXPECT_ANY_THROW(SetIndicatorModel(inst, {TaskSet(3, {0})}, {1.0, 2.0}));
  EXPECT_ANY_THROW(SetIndicatorModel(inst, {TaskSet(3)}, {1.0}));
  EXPECT_ANY_THROW(SetIndicatorModel(inst, {TaskSet(4, {0})}, {1.0}));
  EXPECT_ANY_THROW(Compile(SetIndicatorModel(inst, {}, {})));
}

TEST(SolveSurrogateTest, AllSubsetsUnitWeights) {
  for (bool nonempty : {false, true}) {
    const GaprInstance inst =
        UnitInstance(3, 2, kUnboundedCapacity, nonempty);
    const std::vector<TaskSet> h = AllSubsets(3);
    double best = 1e9;
    for (const oracle::Owners& owner :
         oracle::FeasibleOwners({1, 1, 1}, 2, 1e9, nonempty)) {
      best = std::min(best, OracleL(owner, 2, h, std::vector<double>(7, 1.0)));
    }
    const SetIndicatorModel model(inst, h, std::vector<double>(7, 1.0));
    const SurrogateSolution sol = SolveSurrogate(model);
    ASSERT_EQ(sol.mip.status, MipStatus::kOptimal);
    EXPECT_NEAR(sol.mip.objective, best, 1e-6);
    EXPECT_EQ(best, nonempty ? 10.0 : 7.0);
    EXPECT_TRUE(IsFeasible(sol.plan, inst));
    EXPECT_NEAR(EvaluateL(sol.plan, model), best, 1e-9);
  }
}

TEST(SolveSurrogateTest, SingleSubsetAttainsOne) {
  const GaprInstance inst = UnitInstance(5, 3, 3, true);
  const SetIndicatorModel model(inst, {TaskSet(5, {1, 3, 4})}, {1.0});
  const SurrogateSolution sol = SolveSurrogate(model);
  ASSERT_EQ(sol.mip.status, MipStatus::kOptimal);
  EXPECT_NEAR(sol.mip.objective, 1.0, 1e-9);
  EXPECT_TRUE(CheckP1(sol.plan, model.subsets()));
}

TEST(SolveSurrogateTest, MatchesEnumerationOnRandomModels) {
  std::mt19937_64 gen(31);
  std::uniform_int_distribution<int> tasks_dist(3, 6);
  std::uniform_int_distribution<int> agents_dist(2, 3);
  std::uniform_int_distribution<int> weight_dist(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int tasks = tasks_dist(gen);
    const int agents = agents_dist(gen);
    std::vector<double> w(tasks);
    double total = 0.0;
    for (double& v : w) {
      v = weight_dist(gen);
      total += v;
    }
    const double cap = std::max(3.0, std::ceil(total / agents) + 1);
    const bool nonempty = trial % 2 == 0;
    const std::vector<oracle::Owners> owners =
        oracle::FeasibleOwners(w, agents, cap, nonempty);
    if (owners.empty()) continue;
    const GaprInstance inst(w, agents, cap, nonempty);
    const RandomModel m = Draw(gen, tasks, trial % 3 == 0);
    double best = 1e18;
    for (const oracle::Owners& owner : owners) {
      best = std::min(best, OracleL(owner, agents, m.h, m.beta));
    }
    const SetIndicatorModel model(inst, m.h, m.beta);
    const SurrogateSolution sol = SolveSurrogate(model);
    ASSERT_EQ(sol.mip.status, MipStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(sol.mip.objective, best, 1e-6) << "trial " << trial;
    EXPECT_TRUE(IsFeasible(sol.plan, inst));
    EXPECT_NEAR(EvaluateL(sol.plan, model), best, 1e-6);
  }
}

TEST(EvaluateLTest, ExamplePairs) {
  const std::vector<TaskSet> h = {TaskSet(3, {0, 1}), TaskSet(3, {0, 2}),
                                  TaskSet(3, {1, 2})};
  const GaprInstance inst = UnitInstance(3, 2, kUnboundedCapacity, false);
  const AssignmentPlan s1 = MakePlan(3, {{0}, {1, 2}});
  EXPECT_EQ(EvaluateL(s1, SetIndicatorModel(inst, h, {1, 1, 1})), 5.0);
  EXPECT_EQ(EvaluateL(s1, SetIndicatorModel(inst, h, {0, 0, 0})), 0.0);
}

TEST(EvaluateLTest, ClosedFormMatchesFixedPlanMip) {
  std::mt19937_64 gen(202);
  std::uniform_int_distribution<int> tasks_dist(2, 7);
  std::uniform_int_distribution<int> agents_dist(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int tasks = tasks_dist(gen);
    const int agents = agents_dist(gen);
    const GaprInstance inst =
        UnitInstance(tasks, agents, kUnboundedCapacity, false);
    std::uniform_int_distribution<int> agent(0, agents - 1);
    oracle::Owners owner(tasks);
    for (int& o : owner) o = agent(gen);
    const AssignmentPlan plan = PlanFromOwners(owner, agents);
    const RandomModel m = Draw(gen, tasks, true);
    const SetIndicatorModel model(inst, m.h, m.beta);
    const double closed = EvaluateL(plan, model);
    EXPECT_NEAR(closed, EvaluateLByMip(plan, model), 1e-6) << "trial " << trial;
    EXPECT_NEAR(closed, OracleL(owner, agents, m.h, m.beta), 1e-9);
  }
}

TEST(EvaluateLTest, NonnegativeWeightsBoundedBelow) {
  std::mt19937_64 gen(9);
  const GaprInstance inst = UnitInstance(6, 3, kUnboundedCapacity, false);
  std::uniform_int_distribution<int> agent(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Owners owner(6);
    for (int& o : owner) o = agent(gen);
    const RandomModel m = Draw(gen, 6, false);
    double floor = 0.0;
    for (double b : m.beta) floor += b;
    EXPECT_GE(EvaluateL(PlanFromOwners(owner, 3),
                        SetIndicatorModel(inst, m.h, m.beta)),
              floor - 1e-12);
  }
}

TEST(EvaluateLTest, EquivalentPlansScoreAlike) {
  std::mt19937_64 gen(10);
  const GaprInstance inst = UnitInstance(6, 3, kUnboundedCapacity, false);
  std::uniform_int_distribution<int> agent(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Owners owner(6), swapped(6);
    for (int i = 0; i < 6; ++i) {
      owner[i] = agent(gen);
      swapped[i] = (owner[i] + 1) % 3;
    }
    const RandomModel m = Draw(gen, 6, true);
    const SetIndicatorModel model(inst, m.h, m.beta);
    EXPECT_EQ(EvaluateL(PlanFromOwners(owner, 3), model),
              EvaluateL(PlanFromOwners(swapped, 3), model));
  }
}

TEST(DistinguishingHTest, Cases) {
  const AssignmentPlan s1 = MakePlan(3, {{0}, {1, 2}});
  EXPECT_FALSE(DistinguishingH(s1, MakePlan(3, {{1, 2}, {0}})).has_value());
  const AssignmentPlan s2 = MakePlan(3, {{1}, {0, 2}});
  const auto h = DistinguishingH(s1, s2);
  ASSERT_TRUE(h.has_value());
  const GaprInstance inst = UnitInstance(3, 2, kUnboundedCapacity, false);
  const SetIndicatorModel model(inst, *h, std::vector<double>(h->size(), 1.0));
  EXPECT_NE(EvaluateL(s1, model), EvaluateL(s2, model));
}

TEST(DistinguishingHTest, AlwaysSeparatesNonEquivalentPlans) {
  std::mt19937_64 gen(44);
  std::uniform_int_distribution<int> tasks_dist(2, 8);
  std::uniform_int_distribution<int> agents_dist(2, 4);
  int pairs = 0;
  while (pairs < 100) {
    const int tasks = tasks_dist(gen);
    const int agents = agents_dist(gen);
    std::uniform_int_distribution<int> agent(0, agents - 1);
    oracle::Owners a(tasks), b(tasks);
    for (int i = 0; i < tasks; ++i) {
      a[i] = agent(gen);
      b[i] = agent(gen);
    }
    if (oracle::SamePartition(oracle::ToPartition(a, agents),
                              oracle::ToPartition(b, agents))) {
      continue;
    }
    const AssignmentPlan s1 = PlanFromOwners(a, agents);
    const AssignmentPlan s2 = PlanFromOwners(b, agents);
    const auto h = DistinguishingH(s1, s2);
    ASSERT_TRUE(h.has_value());
    const GaprInstance inst =
        UnitInstance(tasks, agents, kUnboundedCapacity, false);
    const SetIndicatorModel model(inst, *h,
                                  std::vector<double>(h->size(), 1.0));
    EXPECT_NE(EvaluateL(s1, model), EvaluateL(s2, model));
    ++pairs;
  }
}

// With every agent required to be nonempty, unit weights on the subsets of a
// plan single out that plan up to relabelling.
TEST(ReconstructionTest, NonemptyAgentsRecoverSeedPlan) {
  struct Case {
    int tasks;
    int agents;
  };
  for (const Case c : {Case{5, 3}, Case{6, 2}, Case{4, 4}}) {
    const GaprInstance inst =
        UnitInstance(c.tasks, c.agents, kUnboundedCapacity, true);
    std::set<std::vector<std::vector<int>>> seen;
    for (const AssignmentPlan& seed : EnumerateFeasiblePlans(inst)) {
      const AssignmentPlan canonical = seed.Canonical();
      std::vector<std::vector<int>> key;
      for (const TaskSet& s : canonical.subsets()) key.push_back(s.Ids());
      if (!seen.insert(key).second) continue;
      const SetIndicatorModel model(inst, seed.subsets(),
                                    std::vector<double>(c.agents, 1.0));
      const SurrogateSolution sol = SolveSurrogate(model);
      ASSERT_EQ(sol.mip.status, MipStatus::kOptimal);
      EXPECT_NEAR(sol.mip.objective, c.agents, 1e-9);
      EXPECT_TRUE(Equivalent(sol.plan, seed));
    }
    EXPECT_FALSE(seen.empty());
  }
}

// When an agent may stay empty, merging two subsets of the seed plan keeps
// every seed subset inside one agent, so the minimizer is not unique.
TEST(ReconstructionTest, MergeableSubsetsBreakUniqueness) {
  const GaprInstance inst = UnitInstance(3, 2, kUnboundedCapacity, false);
  const AssignmentPlan seed = MakePlan(3, {{0, 1}, {2}});
  const AssignmentPlan merged = MakePlan(3, {{0, 1, 2}, {}});
  const SetIndicatorModel model(inst, seed.subsets(), {1.0, 1.0});
  EXPECT_EQ(EvaluateL(seed, model), 2.0);
  EXPECT_EQ(EvaluateL(merged, model), 2.0);
  EXPECT_FALSE(Equivalent(seed, merged));
  int minimizers = 0;
  for (const AssignmentPlan& plan : EnumerateFeasiblePlans(inst)) {
    if (EvaluateL(plan, model) == 2.0) ++minimizers;
  }
  EXPECT_EQ(minimizers, 4);
}

TEST(ReconstructionTest, TightCapacityForbidsMerging) {
  const GaprInstance inst = UnitInstance(3, 2, 2, false);
  const AssignmentPlan seed = MakePlan(3, {{0, 1}, {2}});
  const SetIndicatorModel model(inst, seed.subsets(), {1.0, 1.0});
  for (const AssignmentPlan& plan : EnumerateFeasiblePlans(inst)) {
    if (EvaluateL(plan, model) == 2.0) EXPECT_TRUE(Equivalent(plan, seed));
  }
  EXPECT_TRUE(Equivalent(SolveSurrogate(model).plan, seed));
}

}  // namespace
}  // namespace gapr
