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

#include "gapr/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gapr/errors.h"
#include "gapr/tour.h"

namespace gapr {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

std::string Fnv1aHex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

namespace {

json Parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

void CheckHeader(const json& j, const char* format) {
  if (!j.is_object() || j.value("format", "") != format) {
    throw FormatError(std::string("not a ") + format + " record");
  }
  if (j.value("format_version", 0) != kFormatVersion) {
    throw FormatError(std::string("unsupported ") + format + " version");
  }
}

template <typename T>
T Get(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace

json PlanToJson(const AssignmentPlan& plan) {
  json out = json::array();
  for (const TaskSet& s : plan.subsets()) out.push_back(s.Ids());
  return out;
}

AssignmentPlan PlanFromJson(const json& value, int task_count) {
  if (!value.is_array()) throw FormatError("plan must be an array");
  std::vector<TaskSet> subsets;
  for (const json& agent : value) {
    std::vector<int> ids;
    try {
      ids = agent.get<std::vector<int>>();
    } catch (const json::exception&) {
      throw FormatError("plan entries must be task id lists");
    }
    for (int id : ids) {
      if (id < 0 || id >= task_count) throw FormatError("plan task id out of range");
    }
    subsets.emplace_back(task_count, ids);
  }
  return AssignmentPlan(std::move(subsets));
}

std::string InstanceToJson(const InstanceRecord& record) {
  const GaprInstance& inst = record.instance;
  ordered_json j;
  j["format"] = "gapr-instance";
  j["format_version"] = kFormatVersion;
  j["family"] = record.family;
  j["seed"] = record.seed ? ordered_json(*record.seed) : ordered_json(nullptr);
  std::vector<double> weights(inst.weights().begin(), inst.weights().end());
  j["tasks"] = {{"count", inst.task_count()}, {"weights", weights}};
  ordered_json agents;
  agents["count"] = inst.agent_count();
  if (std::isinf(inst.capacity())) {
    agents["capacity"] = "inf";
  } else {
    agents["capacity"] = inst.capacity();
  }
  agents["nonempty"] = inst.nonempty_agents();
  j["agents"] = agents;
  const RoutingOracle* oracle = &inst.oracle();
  if (const auto* tour = dynamic_cast<const TourOracle*>(oracle)) {
    const TourGeometry& g = tour->geometry();
    ordered_json routing;
    routing["metric"] = MetricName(g.metric);
    routing["hk_threshold"] = tour->hk_threshold();
    ordered_json points = ordered_json::array();
    for (const Point& p : g.points) points.push_back({p.x, p.y});
    routing["points"] = points;
    routing["task_nodes"] = g.task_nodes;
    j["routing"] = routing;
  } else if (dynamic_cast<const ZeroRoutingOracle*>(oracle)) {
    j["routing"] = nullptr;
  } else {
    throw FormatError("instance routes with an oracle that cannot be saved");
  }
  if (inst.has_assignment_cost()) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < inst.task_count(); ++i) {
      std::vector<double> row;
      for (int k = 0; k < inst.agent_count(); ++k) row.push_back(inst.cost(i, k));
      rows.push_back(row);
    }
    j["assignment_cost"] = rows;
  } else {
    j["assignment_cost"] = nullptr;
  }
  return j.dump(2) + "\n";
}

InstanceRecord InstanceFromJson(const std::string& text) {
  const json j = Parse(text, "instance");
  CheckHeader(j, "gapr-instance");
  const std::string family = Get<std::string>(j, "family");
  if (family != "jobprp" && family != "cluvrp" && family != "custom") {
    throw FormatError("unknown instance family " + family);
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j["seed"].is_null()) seed = Get<std::uint64_t>(j, "seed");
  const json& tasks = j.at("tasks");
  const auto weights = Get<std::vector<double>>(tasks, "weights");
  if (Get<int>(tasks, "count") != static_cast<int>(weights.size())) {
    throw FormatError("task count disagrees with the weight list");
  }
  const json& agents = j.at("agents");
  const int agent_count = Get<int>(agents, "count");
  double capacity;
  if (agents.at("capacity").is_string()) {
    if (agents["capacity"] != "inf") throw FormatError("capacity must be a number or \"inf\"");
    capacity = kUnboundedCapacity;
  } else {
    capacity = Get<double>(agents, "capacity");
  }
  const bool nonempty = Get<bool>(agents, "nonempty");

  std::shared_ptr<const RoutingOracle> oracle;
  if (j.contains("routing") && !j["routing"].is_null()) {
    const json& r = j["routing"];
    TourGeometry g;
    try {
      g.metric = ParseMetric(Get<std::string>(r, "metric"));
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError(e.what());
    }
    for (const auto& p : Get<std::vector<std::vector<double>>>(r, "points")) {
      if (p.size() != 2) throw FormatError("points must be [x, y] pairs");
      g.points.push_back({p[0], p[1]});
    }
    g.task_nodes = Get<std::vector<std::vector<int>>>(r, "task_nodes");
    if (g.task_nodes.size() != weights.size()) {
      throw FormatError("task_nodes must list nodes for every task");
    }
    try {
      oracle = std::make_shared<TourOracle>(std::move(g), Get<int>(r, "hk_threshold"));
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError(std::string("routing: ") + e.what());
    }
  }
  std::vector<double> cost;
  if (j.contains("assignment_cost") && !j["assignment_cost"].is_null()) {
    const auto rows = Get<std::vector<std::vector<double>>>(j, "assignment_cost");
    if (rows.size() != weights.size()) throw FormatError("assignment_cost needs one row per task");
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(agent_count)) {
        throw FormatError("assignment_cost rows need one entry per agent");
      }
      cost.insert(cost.end(), row.begin(), row.end());
    }
  }
  return InstanceRecord{family, seed,
                        GaprInstance(weights, agent_count, capacity, nonempty,
                                     std::move(oracle), std::move(cost))};
}

std::string InstanceDigest(const InstanceRecord& record) {
  return Fnv1aHex(InstanceToJson(record));
}

std::string DatasetToJsonl(const Dataset& data) {
  std::string out;
  ordered_json header;
  header["format"] = "gapr-dataset";
  header["format_version"] = kFormatVersion;
  header["instance_digest"] = data.meta.instance_digest;
  header["base_seed"] = data.meta.base_seed;
  header["n"] = data.size();
  header["limit_hits"] = data.meta.limit_hits;
  out += header.dump() + "\n";
  for (int i = 0; i < data.size(); ++i) {
    ordered_json rec;
    rec["index"] = i;
    rec["seed"] = data.seeds[i];
    rec["value"] = data.values[i];
    rec["limit_hit"] = data.limit_hit[i] != 0;
    rec["plan"] = PlanToJson(data.plans[i]);
    out += rec.dump() + "\n";
  }
  return out;
}

Dataset DatasetFromJsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("dataset is empty");
  const json header = Parse(line, "dataset header");
  CheckHeader(header, "gapr-dataset");
  Dataset data;
  data.meta.instance_digest = Get<std::string>(header, "instance_digest");
  data.meta.base_seed = Get<std::uint64_t>(header, "base_seed");
  data.meta.n = Get<int>(header, "n");
  data.meta.limit_hits = Get<int>(header, "limit_hits");
  int universe = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json rec = Parse(line, "dataset record");
    if (Get<int>(rec, "index") != data.size()) throw FormatError("dataset records out of order");
    const json& plan = rec.at("plan");
    if (universe < 0) {
      // Plans carry no universe; it is the number of ids in the first one.
      universe = 0;
      for (const json& agent : plan) universe += static_cast<int>(agent.size());
    }
    data.plans.push_back(PlanFromJson(plan, universe));
    data.values.push_back(Get<double>(rec, "value"));
    data.seeds.push_back(Get<std::uint64_t>(rec, "seed"));
    data.limit_hit.push_back(Get<bool>(rec, "limit_hit") ? 1 : 0);
  }
  if (data.size() != data.meta.n) throw FormatError("dataset record count disagrees with header");
  return data;
}

std::string DatasetTimingJson(const DatasetMeta& meta) {
  ordered_json j;
  j["mean_sample_seconds"] = meta.mean_sample_seconds;
  j["max_sample_seconds"] = meta.max_sample_seconds;
  return j.dump(2) + "\n";
}

void ReadDatasetTiming(const std::string& text, DatasetMeta& meta) {
  const json j = Parse(text, "dataset timing");
  meta.mean_sample_seconds = Get<double>(j, "mean_sample_seconds");
  meta.max_sample_seconds = Get<double>(j, "max_sample_seconds");
}

std::filesystem::path TimingPath(const std::filesystem::path& dataset_path) {
  std::filesystem::path p = dataset_path;
  p += ".timing.json";
  return p;
}

std::string ModelToJson(const ModelRecord& model) {
  ordered_json j;
  j["format"] = "gapr-model";
  j["format_version"] = kFormatVersion;
  j["instance_digest"] = model.instance_digest;
  j["task_count"] = model.task_count;
  j["agent_count"] = model.agent_count;
  ordered_json subsets = ordered_json::array();
  for (std::size_t k = 0; k < model.subsets.size(); ++k) {
    ordered_json s;
    s["tasks"] = model.subsets[k].Ids();
    s["beta"] = model.beta[k];
    subsets.push_back(s);
  }
  j["subsets"] = subsets;
  j["meta"] = ordered_json::parse(model.meta.dump());
  return j.dump(2) + "\n";
}

ModelRecord ModelFromJson(const std::string& text) {
  const json j = Parse(text, "model");
  CheckHeader(j, "gapr-model");
  ModelRecord model;
  model.instance_digest = Get<std::string>(j, "instance_digest");
  model.task_count = Get<int>(j, "task_count");
  model.agent_count = Get<int>(j, "agent_count");
  for (const json& s : j.at("subsets")) {
    const auto ids = Get<std::vector<int>>(s, "tasks");
    for (int id : ids) {
      if (id < 0 || id >= model.task_count) throw FormatError("model task id out of range");
    }
    model.subsets.emplace_back(model.task_count, ids);
    model.beta.push_back(Get<double>(s, "beta"));
  }
  if (j.contains("meta")) model.meta = j["meta"];
  return model;
}

std::string TrainLogCsv(const TrainReport& report) {
  std::ostringstream out;
  out << "iteration,pi_card,columns,support,pending,gamma,r2,r2_degenerate,"
         "lasso_sweeps,surrogate_solved,mip_status,surrogate_objective,"
         "mip_nodes,rows,cols,mip_gap,mip_seconds,z,accepted,seconds,error\n";
  for (const IterationLog& it : report.iterations) {
    std::string error = it.error;
    for (char& ch : error) {
      if (ch == '"' || ch == '\n' || ch == ',') ch = ' ';
    }
    out << it.index << ',' << it.pi_card << ',' << it.columns << ','
        << it.support << ',' << it.pending << ',' << FormatDouble(it.gamma)
        << ',' << FormatDouble(it.r2) << ',' << (it.r2_degenerate ? 1 : 0)
        << ',' << it.lasso_sweeps << ',' << (it.surrogate_solved ? 1 : 0)
        << ',' << (it.surrogate_solved ? MipStatusName(it.mip_status) : "")
        << ',' << FormatDouble(it.surrogate_objective) << ',' << it.mip_nodes
        << ',' << it.program_rows << ',' << it.program_cols << ','
        << FormatDouble(it.mip_gap) << ',' << FormatDouble(it.mip_seconds)
        << ',' << FormatDouble(it.z) << ',' << (it.accepted ? 1 : 0) << ','
        << FormatDouble(it.seconds) << ',' << error << '\n';
  }
  return out.str();
}

}  // namespace gapr
