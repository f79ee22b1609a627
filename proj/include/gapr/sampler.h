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

#ifndef GAPR_SAMPLER_H_
#define GAPR_SAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gapr/branch_and_bound.h"
#include "gapr/errors.h"
#include "gapr/instance.h"
#include "gapr/plan.h"

namespace gapr {

inline constexpr double kDefaultSampleTimeLimit = 5.0;

struct DatasetMeta {
  std::string instance_digest;
  std::uint64_t base_seed = 0;
  int n = 0;
  double mean_sample_seconds = 0.0;
  double max_sample_seconds = 0.0;
  int limit_hits = 0;
};

// S_N and b_N. Sample i was drawn with seed base_seed + i.
struct Dataset {
  std::vector<AssignmentPlan> plans;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  std::vector<char> limit_hit;
  DatasetMeta meta;

  int size() const { return static_cast<int>(plans.size()); }
  double MinValue() const;
};

struct Sample {
  AssignmentPlan plan;
  double value = 0.0;
  bool limit_hit = false;
  double seconds = 0.0;
};

// Uniform [0,1) assignment costs keyed by (seed, i, j).
std::vector<double> RandomAssignmentCosts(std::uint64_t seed, int tasks,
                                          int agents);

// One Monte-Carlo draw: random costs c, a c-optimal point of P found by
// branch-and-bound, and its true objective value. On a solver limit the best
// incumbent is used and the sample is flagged.
Sample SampleOnce(const GaprInstance& inst, std::uint64_t seed,
                  const MipLimits& limits = {kDefaultSampleTimeLimit});

// Raised by Collect when a sample fails; reports how many samples with a
// lower index completed.
class SamplingError : public Error {
 public:
  SamplingError(const std::string& what, int failed_index, int completed)
      : Error(what), failed_index_(failed_index), completed_(completed) {}
  int failed_index() const { return failed_index_; }
  int completed() const { return completed_; }

 private:
  int failed_index_;
  int completed_;
};

// N independent samples on `workers` threads. The result does not depend on
// the worker count.
Dataset Collect(const GaprInstance& inst, int n, int workers,
                std::uint64_t base_seed,
                const MipLimits& limits = {kDefaultSampleTimeLimit});

// Worker count from GAPR_THREADS, else the hardware concurrency.
int DefaultWorkerCount();

}  // namespace gapr

#endif  // GAPR_SAMPLER_H_
