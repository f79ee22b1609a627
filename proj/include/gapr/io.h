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

#ifndef GAPR_IO_H_
#define GAPR_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gapr/instance.h"
#include "gapr/sampler.h"
#include "gapr/task_set.h"
#include "gapr/trainer.h"

namespace gapr {

inline constexpr int kFormatVersion = 1;

// FNV-1a 64 of a string, as 16 lowercase hex digits.
std::string Fnv1aHex(const std::string& text);

struct InstanceRecord {
  std::string family = "custom";  // jobprp | cluvrp | custom
  std::optional<std::uint64_t> seed;
  GaprInstance instance;
};

// Canonical JSON text. Routing geometry is written when the instance routes
// with a TourOracle; other oracles cannot be persisted and are rejected.
std::string InstanceToJson(const InstanceRecord& record);
InstanceRecord InstanceFromJson(const std::string& text);
// Digest of the canonical JSON, so equal content gives equal digests.
std::string InstanceDigest(const InstanceRecord& record);

// Header line plus one record per sample. Timing lives in a separate file so
// this text depends only on the inputs.
std::string DatasetToJsonl(const Dataset& data);
Dataset DatasetFromJsonl(const std::string& text);
std::string DatasetTimingJson(const DatasetMeta& meta);
void ReadDatasetTiming(const std::string& text, DatasetMeta& meta);
std::filesystem::path TimingPath(const std::filesystem::path& dataset_path);

struct ModelRecord {
  std::string instance_digest;
  int task_count = 0;
  int agent_count = 0;
  std::vector<TaskSet> subsets;
  std::vector<double> beta;
  nlohmann::json meta = nlohmann::json::object();
};

std::string ModelToJson(const ModelRecord& model);
ModelRecord ModelFromJson(const std::string& text);

// One CSV line per training iteration.
std::string TrainLogCsv(const TrainReport& report);

// Shortest decimal text that reads back to the same double; "inf"/"-inf"/"nan"
// for non-finite values.
std::string FormatDouble(double v);

// Plain file helpers; both throw FormatError on I/O failure.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& text);

// Plan as a list of per-agent task id lists.
nlohmann::json PlanToJson(const AssignmentPlan& plan);
AssignmentPlan PlanFromJson(const nlohmann::json& value, int task_count);

}  // namespace gapr

#endif  // GAPR_IO_H_
