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

#include "gapr/sampler.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "gapr/polytope.h"
#include "gapr/random.h"

namespace gapr {

double Dataset::MinValue() const {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(values.begin(), values.end());
}

std::vector<double> RandomAssignmentCosts(std::uint64_t seed, int tasks,
                                          int agents) {
  std::vector<double> c(static_cast<std::size_t>(tasks) * agents);
  for (int i = 0; i < tasks; ++i) {
    for (int j = 0; j < agents; ++j) {
      c[static_cast<std::size_t>(i) * agents + j] = CounterUniform(seed, i, j);
    }
  }
  return c;
}

Sample SampleOnce(const GaprInstance& inst, std::uint64_t seed,
                  const MipLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  BinaryProgram program = AssignmentPolytope(inst);
  const std::vector<double> costs =
      RandomAssignmentCosts(seed, inst.task_count(), inst.agent_count());
  for (std::size_t k = 0; k < costs.size(); ++k) {
    program.SetObjective(static_cast<int>(k), costs[k]);
  }
  const MipResult mip = BnbSolve(program, limits);
  if (!mip.incumbent) {
    throw SolverError(mip.status == MipStatus::kInfeasible
                          ? "sampling program is infeasible"
                          : "sampling solve hit its limit without a solution");
  }
  Sample sample;
  sample.plan = PlanFromSolution(*mip.incumbent, inst);
  sample.value = EvaluateObjective(sample.plan, inst).total;
  sample.limit_hit = mip.status != MipStatus::kOptimal;
  sample.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return sample;
}

int DefaultWorkerCount() {
  if (const char* env = std::getenv("GAPR_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Dataset Collect(const GaprInstance& inst, int n, int workers,
                std::uint64_t base_seed, const MipLimits& limits) {
  if (n < 1) throw Error("Collect: N must be at least 1");
  if (workers < 1) throw Error("Collect: workers must be at least 1");
  std::vector<std::optional<Sample>> slots(n);
  std::atomic<int> next{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  int first_error = n;
  std::string error_text;

  auto work = [&] {
    for (;;) {
      if (abort.load()) return;
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        slots[i] = SampleOnce(inst, base_seed + static_cast<std::uint64_t>(i), limits);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (i < first_error) {
          first_error = i;
          error_text = e.what();
        }
        abort.store(true);
        return;
      }
    }
  };
  const int threads = std::min(workers, n);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error < n) {
    int completed = 0;
    while (completed < n && slots[completed]) ++completed;
    throw SamplingError("sample " + std::to_string(first_error) + " failed: " +
                            error_text + " (" + std::to_string(completed) +
                            " leading samples completed)",
                        first_error, completed);
  }

  Dataset data;
  data.meta.base_seed = base_seed;
  data.meta.n = n;
  double total_seconds = 0.0;
  for (int i = 0; i < n; ++i) {
    Sample& s = *slots[i];
    data.plans.push_back(std::move(s.plan));
    data.values.push_back(s.value);
    data.seeds.push_back(base_seed + static_cast<std::uint64_t>(i));
    data.limit_hit.push_back(s.limit_hit ? 1 : 0);
    total_seconds += s.seconds;
    data.meta.max_sample_seconds = std::max(data.meta.max_sample_seconds, s.seconds);
    data.meta.limit_hits += s.limit_hit ? 1 : 0;
  }
  data.meta.mean_sample_seconds = total_seconds / n;
  return data;
}

}  // namespace gapr
