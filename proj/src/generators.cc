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

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "gapr/errors.h"
#include "gapr/random.h"

namespace gapr {

namespace {

constexpr double kAisleSpacing = 3.0;

void CheckPacking(const std::vector<double>& weights, int agents,
                  double capacity) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total > capacity * agents) {
    throw GenerationError("infeasible packing: total weight " +
                          std::to_string(total) + " exceeds " +
                          std::to_string(agents) + " x capacity " +
                          std::to_string(capacity));
  }
  for (double w : weights) {
    if (w > capacity) {
      throw GenerationError("infeasible packing: a task of weight " +
                            std::to_string(w) + " exceeds capacity " +
                            std::to_string(capacity));
    }
  }
}

}  // namespace

GaprInstance GenerateJobprp(const JobprpParams& p) {
  if (p.trolleys < 1 || p.orders < p.trolleys) {
    throw GenerationError("need orders >= trolleys >= 1");
  }
  if (p.aisles < 1 || p.blocks_per_aisle < 1) {
    throw GenerationError("warehouse grid must be at least 1 x 1");
  }
  const int blocks = p.aisles * p.blocks_per_aisle;
  if (p.min_items < 1 || p.max_items < p.min_items || p.max_items > blocks) {
    throw GenerationError("items per order must satisfy 1 <= min <= max <= blocks");
  }
  if (p.capacity < p.max_items) {
    throw GenerationError("trolley capacity below the largest order size");
  }

  Rng rng(p.seed);
  TourGeometry geometry;
  geometry.metric = Metric::kManhattan;
  geometry.points.push_back({0.0, 0.0});
  for (int a = 0; a < p.aisles; ++a) {
    for (int b = 0; b < p.blocks_per_aisle; ++b) {
      geometry.points.push_back({kAisleSpacing * a, 1.0 + b});
    }
  }
  std::vector<int> pool(blocks);
  std::vector<double> weights;
  for (int o = 0; o < p.orders; ++o) {
    const int size = static_cast<int>(rng.UniformInt(p.min_items, p.max_items));
    std::iota(pool.begin(), pool.end(), 1);
    // Partial Fisher-Yates: the first `size` entries are a uniform draw
    // without replacement.
    for (int k = 0; k < size; ++k) {
      std::swap(pool[k], pool[rng.UniformInt(k, blocks - 1)]);
    }
    std::vector<int> nodes(pool.begin(), pool.begin() + size);
    std::sort(nodes.begin(), nodes.end());
    geometry.task_nodes.push_back(std::move(nodes));
    weights.push_back(size);
  }
  CheckPacking(weights, p.trolleys, p.capacity);
  auto oracle = std::make_shared<TourOracle>(std::move(geometry), p.hk_threshold);
  return GaprInstance(std::move(weights), p.trolleys, p.capacity,
                      /*nonempty_agents=*/false, std::move(oracle));
}

GaprInstance GenerateCluvrp(const CluvrpParams& p) {
  if (p.vehicles < 1 || p.clusters < p.vehicles) {
    throw GenerationError("need clusters >= vehicles >= 1");
  }
  if (p.customers < p.clusters) {
    throw GenerationError("need customers >= clusters");
  }
  Rng rng(p.seed);
  TourGeometry geometry;
  geometry.metric = Metric::kEuclidean;
  geometry.points.push_back({50.0, 50.0});
  for (int c = 0; c < p.customers; ++c) {
    const double x = rng.Uniform(0.0, 100.0);
    const double y = rng.Uniform(0.0, 100.0);
    geometry.points.push_back({x, y});
  }
  // Every cluster gets one customer, the rest are spread at random.
  std::vector<int> cluster_of(p.customers);
  std::vector<int> first(p.customers);
  std::iota(first.begin(), first.end(), 0);
  rng.Shuffle(first.begin(), first.end());
  std::vector<char> seeded(p.customers, 0);
  for (int k = 0; k < p.clusters; ++k) {
    cluster_of[first[k]] = k;
    seeded[first[k]] = 1;
  }
  for (int c = 0; c < p.customers; ++c) {
    if (!seeded[c]) cluster_of[c] = static_cast<int>(rng.UniformInt(0, p.clusters - 1));
  }
  geometry.task_nodes.assign(p.clusters, {});
  std::vector<double> weights(p.clusters, 0.0);
  for (int c = 0; c < p.customers; ++c) {
    geometry.task_nodes[cluster_of[c]].push_back(c + 1);
    weights[cluster_of[c]] += static_cast<double>(rng.UniformInt(1, 10));
  }
  CheckPacking(weights, p.vehicles, p.capacity);
  auto oracle = std::make_shared<TourOracle>(std::move(geometry), p.hk_threshold);
  return GaprInstance(std::move(weights), p.vehicles, p.capacity,
                      /*nonempty_agents=*/false, std::move(oracle));
}

}  // namespace gapr
