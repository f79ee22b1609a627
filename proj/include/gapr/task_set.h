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

#ifndef GAPR_TASK_SET_H_
#define GAPR_TASK_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gapr {

// A subset of a dense id universe {0, ..., universe-1}, stored as a
// multi-word bitset. Used both for task subsets and for routing node sets.
class TaskSet {
 public:
  TaskSet() = default;
  explicit TaskSet(int universe);
  TaskSet(int universe, std::initializer_list<int> ids);
  TaskSet(int universe, std::span<const int> ids);

  int universe() const { return universe_; }

  void Insert(int id);
  void Erase(int id);
  bool Contains(int id) const;

  int Count() const;
  bool Empty() const;

  bool Intersects(const TaskSet& other) const;
  bool IsSubsetOf(const TaskSet& other) const;

  TaskSet& operator|=(const TaskSet& other);
  TaskSet& operator&=(const TaskSet& other);

  // Ids in increasing order.
  std::vector<int> Ids() const;

  // "{0,2,5}".
  std::string Label() const;

  std::size_t Hash() const;

  friend bool operator==(const TaskSet& a, const TaskSet& b) = default;

 private:
  void CheckId(int id) const;
  void CheckSameUniverse(const TaskSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical ordering: by cardinality, then lexicographically by sorted ids.
bool CanonicalLess(const TaskSet& a, const TaskSet& b);

struct TaskSetHash {
  std::size_t operator()(const TaskSet& s) const { return s.Hash(); }
};

}  // namespace gapr

#endif  // GAPR_TASK_SET_H_
