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


#include "gapr/task_set.h"

#include <stdexcept>
#include <unordered_set>

#include "gtest/gtest.h"

namespace gapr {
namespace {

TEST(TaskSetTest, InsertEraseContains) {
  TaskSet s(130);
  s.Insert(0);
  s.Insert(64);
  s.Insert(129);
  EXPECT_EQ(s.Count(), 3);
  EXPECT_TRUE(s.Contains(64));
  s.Erase(64);
  EXPECT_FALSE(s.Contains(64));
  EXPECT_EQ(s.Ids(), (std::vector<int>{0, 129}));
  EXPECT_EQ(s.Label(), "{0,129}");
}

TEST(TaskSetTest, EmptySet) {
  TaskSet s(5);
  EXPECT_TRUE(s.Empty());
  EXPECT_EQ(s.Label(), "{}");
}

TEST(TaskSetTest, SetAlgebra) {
  const TaskSet a(8, {1, 2, 3});
  const TaskSet b(8, {2, 3});
  const TaskSet c(8, {5});
  EXPECT_TRUE(b.IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_FALSE(a.Intersects(c));
  TaskSet u = a;
  u |= c;
  EXPECT_EQ(u, TaskSet(8, {1, 2, 3, 5}));
  u &= b;
  EXPECT_EQ(u, b);
}

TEST(TaskSetTest, RejectsOutOfRangeIds) {
  TaskSet s(4);
  EXPECT_ANY_THROW(s.Insert(4));
  EXPECT_ANY_THROW(s.Insert(-1));
}

TEST(TaskSetTest, RejectsMixedUniverses) {
  TaskSet a(4, {1});
  const TaskSet b(5, {1});
  EXPECT_ANY_THROW(a |= b);
}

TEST(TaskSetTest, CanonicalOrderIsCardinalityFirst) {
  const TaskSet small(6, {5});
  const TaskSet big(6, {0, 1});
  EXPECT_TRUE(CanonicalLess(small, big));
  EXPECT_FALSE(CanonicalLess(big, small));
  EXPECT_TRUE(CanonicalLess(TaskSet(6, {0, 1}), TaskSet(6, {0, 2})));
}

TEST(TaskSetTest, HashAgreesWithEquality) {
  std::unordered_set<TaskSet, TaskSetHash> seen;
  seen.insert(TaskSet(70, {3, 69}));
  EXPECT_TRUE(seen.contains(TaskSet(70, {69, 3})));
  EXPECT_FALSE(seen.contains(TaskSet(70, {3})));
}

}  // namespace
}  // namespace gapr
