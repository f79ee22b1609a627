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

#ifndef GAPR_REPORT_H_
#define GAPR_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapr/io.h"
#include "gapr/sampler.h"
#include "gapr/trainer.h"

namespace gapr {

// Everything the comparison report needs from one training run. Written next
// to the model by the train command.
struct RunSummary {
  std::string name;
  std::string instance_digest;
  std::string dataset_instance_digest;
  int tasks = 0;
  int agents = 0;
  int n = 0;
  double objective = 0.0;  // z*, +inf when no surrogate passed the gate
  bool plan_from_samples = false;
  std::string stop_reason;
  long nodes = 0;
  int rows = 0;
  int cols = 0;
  double gap = 0.0;
  double time_mip = 0.0;
  double avg_sample_seconds = 0.0;
  double train_seconds = 0.0;
  double min_sample = 0.0;
  std::optional<double> opt;  // exhaustive optimum when computed
  // Fit of (sample value, surrogate value) pairs and the conditional mean
  // of the true objective at the surrogate optimum.
  std::optional<double> rho;
  std::optional<double> expected_objective;
  std::vector<double> sample_values;
  std::vector<double> accepted_z;

  double time_total() const { return avg_sample_seconds + train_seconds; }
};

RunSummary Summarize(const std::string& name, const std::string& instance_digest,
                     const GaprInstance& inst, const Dataset& data,
                     const TrainReport& report, std::optional<double> opt);

std::string SummaryToJson(const RunSummary& summary);
RunSummary SummaryFromJson(const std::string& text);

// Header plus one row per run.
std::string ReportCsv(std::span<const RunSummary> runs);

// Histogram of sample values with vertical markers for z* and Opt.
std::string SampleHistogramSvg(const RunSummary& run);
// Accepted z per iteration against Min(sample).
std::string ObjectiveCurveSvg(const RunSummary& run);

}  // namespace gapr

#endif  // GAPR_REPORT_H_
