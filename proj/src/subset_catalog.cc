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

#include "gapr/subset_catalog.h"

#include <limits>
#include <string>

#include "gapr/errors.h"
#include "gapr/random.h"

namespace gapr {

std::uint64_t BinomialCount(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<TaskSet> SubsetsOfCardinality(int universe, int k) {
  std::vector<TaskSet> out;
  if (k < 1 || k > universe) return out;
  const std::uint64_t count = BinomialCount(universe, k);
  if (count > SubsetCatalog::kMaxPool) {
    throw Error("subset pool C(" + std::to_string(universe) + "," +
                std::to_string(k) + ") is too large to enumerate");
  }
  out.reserve(count);
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.emplace_back(universe, c);
    // Colex successor: bump the lowest position that has room below its
    // right neighbour and reset everything to its left.
    int i = 0;
    while (i < k) {
      const int limit = i + 1 < k ? c[i + 1] : universe;
      if (c[i] + 1 < limit) break;
      ++i;
    }
    if (i == k) break;
    ++c[i];
    for (int t = 0; t < i; ++t) c[t] = t;
  }
  return out;
}

std::vector<TaskSet> SubsetCatalog::Pool(int k, int draw) const {
  std::vector<TaskSet> pool = SubsetsOfCardinality(universe_, k);
  if (seed_) {
    Rng rng(Mix64(*seed_ ^ Mix64(static_cast<std::uint64_t>(k) * 0x9E37u +
                                 static_cast<std::uint64_t>(draw))));
    rng.Shuffle(pool.begin(), pool.end());
  }
  return pool;
}

}  // namespace gapr
