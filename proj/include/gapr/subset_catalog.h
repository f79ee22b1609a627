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

#ifndef GAPR_SUBSET_CATALOG_H_
#define GAPR_SUBSET_CATALOG_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gapr/task_set.h"

namespace gapr {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t BinomialCount(int n, int k);

// All k-subsets of {0..universe-1} in colexicographic order.
std::vector<TaskSet> SubsetsOfCardinality(int universe, int k);

// Hands out the pool of candidate subsets for a cardinality, optionally in a
// seeded random order. Repeated requests for the same k with the same seed
// return the same order; `draw` separates later refills.
class SubsetCatalog {
 public:
  // Refuses pools larger than this.
  static constexpr std::uint64_t kMaxPool = 20'000'000;

  explicit SubsetCatalog(int universe,
                         std::optional<std::uint64_t> shuffle_seed = std::nullopt)
      : universe_(universe), seed_(shuffle_seed) {}

  int universe() const { return universe_; }
  std::vector<TaskSet> Pool(int k, int draw = 0) const;

 private:
  int universe_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace gapr

#endif  // GAPR_SUBSET_CATALOG_H_
