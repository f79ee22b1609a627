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

#include <algorithm>
#include <bit>

#include "gapr/errors.h"

namespace gapr {

namespace {
constexpr int kWordBits = 64;

int WordCount(int universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

TaskSet::TaskSet(int universe) : universe_(universe) {
  if (universe < 0) throw Error("TaskSet: negative universe");
  words_.assign(WordCount(universe), 0);
}

TaskSet::TaskSet(int universe, std::initializer_list<int> ids)
    : TaskSet(universe) {
  for (int id : ids) Insert(id);
}

TaskSet::TaskSet(int universe, std::span<const int> ids) : TaskSet(universe) {
  for (int id : ids) Insert(id);
}

void TaskSet::CheckId(int id) const {
  if (id < 0 || id >= universe_) {
    throw Error("TaskSet: id " + std::to_string(id) + " outside universe of " +
                std::to_string(universe_));
  }
}

void TaskSet::CheckSameUniverse(const TaskSet& other) const {
  if (universe_ != other.universe_) {
    throw Error("TaskSet: mixing universes " + std::to_string(universe_) +
                " and " + std::to_string(other.universe_));
  }
}

void TaskSet::Insert(int id) {
  CheckId(id);
  words_[id / kWordBits] |= std::uint64_t{1} << (id % kWordBits);
}

void TaskSet::Erase(int id) {
  CheckId(id);
  words_[id / kWordBits] &= ~(std::uint64_t{1} << (id % kWordBits));
}

bool TaskSet::Contains(int id) const {
  if (id < 0 || id >= universe_) return false;
  return (words_[id / kWordBits] >> (id % kWordBits)) & 1U;
}

int TaskSet::Count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool TaskSet::Empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool TaskSet::Intersects(const TaskSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool TaskSet::IsSubsetOf(const TaskSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

TaskSet& TaskSet::operator|=(const TaskSet& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

TaskSet& TaskSet::operator&=(const TaskSet& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<int> TaskSet::Ids() const {
  std::vector<int> ids;
  ids.reserve(Count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      ids.push_back(static_cast<int>(w) * kWordBits + b);
      bits &= bits - 1;
    }
  }
  return ids;
}

std::string TaskSet::Label() const {
  std::string out = "{";
  bool first = true;
  for (int id : Ids()) {
    if (!first) out += ',';
    out += std::to_string(id);
    first = false;
  }
  out += '}';
  return out;
}

std::size_t TaskSet::Hash() const {
  // FNV-1a over the words, seeded with the universe size.
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(universe_);
  for (std::uint64_t w : words_) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (w >> (8 * byte)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

bool CanonicalLess(const TaskSet& a, const TaskSet& b) {
  const int ca = a.Count();
  const int cb = b.Count();
  if (ca != cb) return ca < cb;
  const std::vector<int> ia = a.Ids();
  const std::vector<int> ib = b.Ids();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                      ib.end());
}

}  // namespace gapr
