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

#include "gapr/tour.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "gapr/errors.h"

namespace gapr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kImprovementEps = 1e-12;
}  // namespace

std::string MetricName(Metric metric) {
  return metric == Metric::kManhattan ? "manhattan" : "euclidean";
}

Metric ParseMetric(const std::string& name) {
  if (name == "manhattan") return Metric::kManhattan;
  if (name == "euclidean") return Metric::kEuclidean;
  throw FormatError("unknown metric '" + name + "'");
}

double Distance(Metric metric, const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  if (metric == Metric::kManhattan) return std::abs(dx) + std::abs(dy);
  return std::hypot(dx, dy);
}

double TourLength(Metric metric, std::span<const Point> points,
                  std::span<const int> order) {
  if (order.size() < 2) return 0.0;
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    length += Distance(metric, points[order[i]], points[order[i + 1]]);
  }
  return length + Distance(metric, points[order.back()], points[order.front()]);
}

Tour HeldKarpTour(Metric metric, std::span<const Point> points,
                  std::span<const int> nodes) {
  const int n = static_cast<int>(nodes.size());
  Tour tour;
  if (n == 0) return tour;
  if (n > 20) throw SolverError("HeldKarpTour: too many nodes");
  auto dist = [&](int a, int b) {
    // Index n stands for the depot.
    const Point& pa = a == n ? points[0] : points[nodes[a]];
    const Point& pb = b == n ? points[0] : points[nodes[b]];
    return Distance(metric, pa, pb);
  };
  const std::size_t full = std::size_t{1} << n;
  // cost[mask * n + last]: shortest depot -> ... -> last path visiting mask.
  std::vector<double> cost(full * n, kInf);
  std::vector<std::int8_t> parent(full * n, -1);
  for (int v = 0; v < n; ++v) cost[(std::size_t{1} << v) * n + v] = dist(n, v);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int last = 0; last < n; ++last) {
      if (!(mask >> last & 1U)) continue;
      const double base = cost[mask * n + last];
      if (base == kInf) continue;
      for (int next = 0; next < n; ++next) {
        if (mask >> next & 1U) continue;
        const std::size_t nmask = mask | (std::size_t{1} << next);
        const double c = base + dist(last, next);
        if (c < cost[nmask * n + next]) {
          cost[nmask * n + next] = c;
          parent[nmask * n + next] = static_cast<std::int8_t>(last);
        }
      }
    }
  }
  const std::size_t all = full - 1;
  double best = kInf;
  int best_last = 0;
  for (int last = 0; last < n; ++last) {
    const double c = cost[all * n + last] + dist(last, n);
    if (c < best) {
      best = c;
      best_last = last;
    }
  }
  std::vector<int> reversed;
  std::size_t mask = all;
  int cur = best_last;
  while (cur >= 0) {
    reversed.push_back(nodes[cur]);
    const int prev = parent[mask * n + cur];
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  tour.order.assign(1, 0);
  tour.order.insert(tour.order.end(), reversed.rbegin(), reversed.rend());
  tour.cost = best;
  return tour;
}

Tour TwoOptTour(Metric metric, std::span<const Point> points,
                std::span<const int> nodes) {
  Tour tour;
  const int n = static_cast<int>(nodes.size());
  if (n == 0) return tour;
  // Nearest neighbour from the depot; ties go to the earlier node.
  std::vector<char> used(n, 0);
  std::vector<int> order{0};
  order.reserve(n + 1);
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    double best = kInf;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      const double d = Distance(metric, points[cur], points[nodes[v]]);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    used[pick] = 1;
    cur = nodes[pick];
    order.push_back(cur);
  }
  auto d = [&](int a, int b) { return Distance(metric, points[a], points[b]); };
  const int len = n + 1;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < len - 1 && !improved; ++i) {
      for (int j = i + 2; j < len && !improved; ++j) {
        const int a = order[i];
        const int b = order[i + 1];
        const int c = order[j];
        const int e = order[(j + 1) % len];
        if (e == a) continue;
        const double delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
        if (delta < -kImprovementEps) {
          std::reverse(order.begin() + i + 1, order.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
  tour.order = std::move(order);
  tour.cost = TourLength(metric, points, tour.order);
  return tour;
}

TourOracle::TourOracle(TourGeometry geometry, int hk_threshold)
    : geometry_(std::move(geometry)), hk_threshold_(hk_threshold) {
  if (geometry_.points.empty()) {
    throw InvalidInstanceError("TourOracle: geometry needs a depot point");
  }
  if (hk_threshold_ < 0 || hk_threshold_ > 20) {
    throw InvalidInstanceError("TourOracle: hk_threshold must be in [0, 20]");
  }
  for (const auto& nodes : geometry_.task_nodes) {
    for (int v : nodes) {
      if (v <= 0 || v >= node_count()) {
        throw InvalidInstanceError("TourOracle: task references unknown node " +
                                   std::to_string(v));
      }
    }
  }
}

TaskSet TourOracle::NodesOf(const TaskSet& tasks) const {
  TaskSet nodes(node_count());
  for (int i : tasks.Ids()) {
    if (i >= static_cast<int>(geometry_.task_nodes.size())) {
      throw EvaluationError("TourOracle: unknown task " + std::to_string(i));
    }
    for (int v : geometry_.task_nodes[i]) nodes.Insert(v);
  }
  return nodes;
}

RouteResult TourOracle::Route(const TaskSet& tasks) const {
  return RouteNodes(NodesOf(tasks));
}

RouteResult TourOracle::RouteNodes(const TaskSet& nodes) const {
  if (nodes.universe() != node_count()) {
    throw EvaluationError("TourOracle: node set over the wrong universe");
  }
  if (nodes.Contains(0)) {
    throw EvaluationError("TourOracle: the depot is not a visit node");
  }
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(nodes);
    if (it != cache_.end()) return it->second;
  }
  const std::vector<int> ids = nodes.Ids();
  RouteResult result;
  const bool exact = static_cast<int>(ids.size()) <= hk_threshold_;
  const Tour tour = exact ? HeldKarpTour(geometry_.metric, geometry_.points, ids)
                          : TwoOptTour(geometry_.metric, geometry_.points, ids);
  result.cost = tour.cost;
  result.tour = tour.order;
  result.exact = exact || ids.size() <= 3;
  {
    std::unique_lock lock(mutex_);
    cache_[nodes] = result;
  }
  return result;
}

std::size_t TourOracle::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

}  // namespace gapr
