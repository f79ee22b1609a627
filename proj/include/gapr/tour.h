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

#ifndef GAPR_TOUR_H_
#define GAPR_TOUR_H_

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gapr/instance.h"
#include "gapr/task_set.h"

namespace gapr {

enum class Metric { kManhattan, kEuclidean };

std::string MetricName(Metric metric);
Metric ParseMetric(const std::string& name);

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

double Distance(Metric metric, const Point& a, const Point& b);

// Node 0 is the depot. task_nodes[i] lists the nodes (>= 1) an agent must
// visit when it is assigned task i.
struct TourGeometry {
  Metric metric = Metric::kEuclidean;
  std::vector<Point> points;
  std::vector<std::vector<int>> task_nodes;
};

// Closed tour through the depot and `nodes` (depot excluded from `nodes`).
// Tours are reported as {0, v1, ..., vk}; the return leg is implicit.
struct Tour {
  double cost = 0.0;
  std::vector<int> order{0};
};

double TourLength(Metric metric, std::span<const Point> points,
                  std::span<const int> order);

// Exact dynamic program over subsets; `nodes.size()` must stay small (the
// table has 2^n * n entries).
Tour HeldKarpTour(Metric metric, std::span<const Point> points,
                  std::span<const int> nodes);

// Nearest-neighbour construction followed by first-improvement 2-opt until no
// improving move remains. Moves are scanned in lexicographic (i, j) order.
Tour TwoOptTour(Metric metric, std::span<const Point> points,
                std::span<const int> nodes);

inline constexpr int kDefaultHeldKarpThreshold = 14;

// Routing oracle over a planar geometry. The cost of a task set is the
// shortest closed tour over the union of its tasks' nodes: Held-Karp when the
// union has at most `hk_threshold` nodes, 2-opt otherwise. Results are cached
// per node set; concurrent callers share the cache.
class TourOracle final : public RoutingOracle {
 public:
  explicit TourOracle(TourGeometry geometry,
                      int hk_threshold = kDefaultHeldKarpThreshold);

  RouteResult Route(const TaskSet& tasks) const override;

  // Route over explicit node ids (each in [1, node count)).
  RouteResult RouteNodes(const TaskSet& nodes) const;

  TaskSet NodesOf(const TaskSet& tasks) const;

  const TourGeometry& geometry() const { return geometry_; }
  int hk_threshold() const { return hk_threshold_; }
  int node_count() const { return static_cast<int>(geometry_.points.size()); }
  std::size_t cache_size() const;

 private:
  TourGeometry geometry_;
  int hk_threshold_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<TaskSet, RouteResult, TaskSetHash> cache_;
};

}  // namespace gapr

#endif  // GAPR_TOUR_H_
