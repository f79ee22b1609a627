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


#include "gapr/branch_and_bound.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gapr/binary_program.h"
#include "gapr/instance.h"
#include "gapr/polytope.h"
#include "gapr/simplex.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gapr {
namespace {

// Row checker written independently of BinaryProgram::IsFeasible.
bool Satisfies(const BinaryProgram& p, const std::vector<int>& x) {
  for (const Constraint& row : p.constraints()) {
    double act = 0.0;
    for (const Term& t : row.terms) act += t.coef * x[t.var];
    if (row.sense != Sense::kGreaterEqual && act > row.rhs + 1e-6) return false;
    if (row.sense != Sense::kLessEqual && act < row.rhs - 1e-6) return false;
  }
  return true;
}

TEST(LpSolveTest, SingleVariable) {
  BinaryProgram p;
  p.AddVariable(-1.0);
  p.AddConstraint({{0, 1.0}}, Sense::kLessEqual, 1.0);
  const LpResult r = LpSolve(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.x[0], 1.0, 1e-9);
  EXPECT_NEAR(r.objective, -1.0, 1e-9);
}

TEST(LpSolveTest, InfeasiblePair) {
  BinaryProgram p;
  p.AddVariable(0.0);
  p.AddConstraint({{0, 1.0}}, Sense::kGreaterEqual, 1.0);
  p.AddConstraint({{0, 1.0}}, Sense::kLessEqual, 0.0);
  EXPECT_EQ(LpSolve(p).status, LpStatus::kInfeasible);
}

TEST(LpSolveTest, AssignmentPolytopeIsIntegral) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GaprInstance inst({1.0, 1.0, 1.0}, 2, kUnboundedCapacity, false);
    BinaryProgram p = AssignmentPolytope(inst);
    std::vector<double> c(6);
    for (int v = 0; v < 6; ++v) {
      c[v] = unit(gen);
      p.SetObjective(v, c[v]);
    }
    double best = 1e9;
    for (const oracle::Owners& owner :
         oracle::FeasibleOwners({1, 1, 1}, 2, 1e9, false)) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i) v += c[i * 2 + owner[i]];
      best = std::min(best, v);
    }
    const LpResult r = LpSolve(p);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.objective, best, 1e-7);
  }
}

TEST(LpSolveTest, FractionalKnapsack) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> val(0.5, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 8;
    std::vector<double> v(n), w(n);
    BinaryProgram p(n);
    std::vector<Term> row;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      v[k] = val(gen);
      w[k] = val(gen);
      total += w[k];
      p.SetObjective(k, -v[k]);
      row.push_back({k, w[k]});
    }
    const double cap = 0.4 * total;
    p.AddConstraint(row, Sense::kLessEqual, cap);
    const LpResult r = LpSolve(p);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(-r.objective, oracle::FractionalKnapsack(v, w, cap), 1e-7);
  }
}

TEST(LpSolveTest, RespectsBoundOverrides) {
  BinaryProgram p(2);
  p.SetObjective(0, -1.0);
  p.SetObjective(1, -1.0);
  const std::vector<double> lo = {0.0, 0.0};
  const std::vector<double> hi = {0.0, 1.0};
  const LpResult r = LpSolve(p, lo, hi);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.0, 1e-9);
}

TEST(BnbSolveTest, IntegralRootSolvesAtRoot) {
  const GaprInstance inst({1.0, 1.0, 1.0, 1.0}, 3, kUnboundedCapacity, false);
  BinaryProgram p = AssignmentPolytope(inst);
  for (int v = 0; v < p.var_count(); ++v) p.SetObjective(v, (v * 7 % 5) + 1.0);
  const MipResult r = BnbSolve(p);
  EXPECT_EQ(r.status, MipStatus::kOptimal);
  EXPECT_EQ(r.nodes, 1);
}

TEST(BnbSolveTest, TinyKnapsack) {
  BinaryProgram p(3);
  for (int v = 0; v < 3; ++v) p.SetObjective(v, -1.0);
  p.AddConstraint({{0, 1.0}, {1, 1.0}, {2, 1.0}}, Sense::kLessEqual, 2.0);
  const MipResult r = BnbSolve(p);
  ASSERT_EQ(r.status, MipStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.objective, -2.0);
}

TEST(BnbSolveTest, MatchesEnumerationOnRandomPrograms) {
  std::mt19937_64 gen(2024);
  int infeasible = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryProgram p = oracle::RandomBinaryProgram(gen);
    const oracle::BinaryOptimum truth = oracle::EnumerateBinary(p);
    const MipResult r = BnbSolve(p);
    if (!truth.feasible) {
      EXPECT_EQ(r.status, MipStatus::kInfeasible) << "trial " << trial;
      EXPECT_FALSE(r.incumbent.has_value());
      ++infeasible;
      continue;
    }
    ASSERT_EQ(r.status, MipStatus::kOptimal) << "trial " << trial;
    ASSERT_TRUE(r.incumbent.has_value());
    EXPECT_TRUE(Satisfies(p, *r.incumbent));
    EXPECT_NEAR(r.objective, truth.objective, 1e-6) << "trial " << trial;
    EXPECT_NEAR(p.ObjectiveValue(*r.incumbent), r.objective, 1e-9);
    EXPECT_LE(r.bound, r.objective + 1e-6);
    EXPECT_LE(r.gap, 1e-6);
  }
  EXPECT_GT(infeasible, 0);
}

TEST(BnbSolveTest, NodeCapKeepsValidBound) {
  std::mt19937_64 gen(77);
  int limited = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BinaryProgram p = oracle::RandomBinaryProgram(gen);
    const oracle::BinaryOptimum truth = oracle::EnumerateBinary(p);
    if (!truth.feasible) continue;
    for (long cap : {1L, 2L, 4L}) {
      MipLimits limits;
      limits.node_cap = cap;
      const MipResult r = BnbSolve(p, limits);
      EXPECT_LE(r.bound, truth.objective + 1e-6);
      if (r.incumbent) {
        EXPECT_TRUE(Satisfies(p, *r.incumbent));
        EXPECT_GE(r.objective, truth.objective - 1e-6);
      }
      if (r.status == MipStatus::kFeasible || r.status == MipStatus::kUnknown) {
        ++limited;
      }
    }
  }
  EXPECT_GT(limited, 0);
}

TEST(BnbSolveTest, Deterministic) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryProgram p = oracle::RandomBinaryProgram(gen);
    const MipResult a = BnbSolve(p);
    const MipResult b = BnbSolve(p);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.incumbent, b.incumbent);
    EXPECT_EQ(a.status, b.status);
  }
}

TEST(BnbSolveTest, PrioritySizeMismatchThrows) {
  BinaryProgram p(3);
  const std::vector<int> priority = {1, 0};
  EXPECT_ANY_THROW(BnbSolve(p, {}, priority));
}

}  // namespace
}  // namespace gapr
