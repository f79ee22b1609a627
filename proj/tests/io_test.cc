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

#include <cmath>
#include <filesystem>
#include <limits>
#include <memory>
#include <vector>

#include "gapr/errors.h"
#include "gapr/generators.h"
#include "gapr/report.h"
#include "gapr/sampler.h"
#include "gapr/trainer.h"
#include "gtest/gtest.h"

namespace gapr {
namespace {

InstanceRecord Jobprp(std::uint64_t seed) {
  JobprpParams p;
  p.orders = 8;
  p.trolleys = 2;
  p.seed = seed;
  return {"jobprp", seed, GenerateJobprp(p)};
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(40.0), "40");
  EXPECT_EQ(FormatDouble(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(FormatDouble(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(FormatDouble(std::nan("")), "nan");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(FormatDouble(x)), x);
}

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
}

TEST(InstanceJsonTest, RoundTripIsByteIdentical) {
  for (std::uint64_t seed : {1, 2}) {
    const InstanceRecord rec = Jobprp(seed);
    const std::string text = InstanceToJson(rec);
    const InstanceRecord back = InstanceFromJson(text);
    EXPECT_EQ(InstanceToJson(back), text);
    EXPECT_EQ(InstanceDigest(back), InstanceDigest(rec));
    EXPECT_EQ(back.family, "jobprp");
    EXPECT_EQ(back.seed, seed);
  }
  CluvrpParams c;
  c.clusters = 6;
  c.customers = 20;
  c.vehicles = 2;
  c.capacity = 100;
  const InstanceRecord rec{"cluvrp", 0, GenerateCluvrp(c)};
  EXPECT_EQ(InstanceToJson(InstanceFromJson(InstanceToJson(rec))),
            InstanceToJson(rec));
}

TEST(InstanceJsonTest, CustomInstanceWithCostsAndInfiniteCapacity) {
  const InstanceRecord rec{
      "custom", std::nullopt,
      GaprInstance({1.0, 2.5, 0.0}, 2, kUnboundedCapacity, true, nullptr,
                   {0.1, 0.2, 0.3, 0.4, 0.5, 0.6})};
  const std::string text = InstanceToJson(rec);
  const InstanceRecord back = InstanceFromJson(text);
  EXPECT_EQ(InstanceToJson(back), text);
  EXPECT_FALSE(back.seed.has_value());
  EXPECT_TRUE(std::isinf(back.instance.capacity()));
  EXPECT_TRUE(back.instance.nonempty_agents());
  EXPECT_EQ(back.instance.cost(1, 1), 0.4);
}

TEST(InstanceJsonTest, DigestTracksContent) {
  EXPECT_NE(InstanceDigest(Jobprp(1)), InstanceDigest(Jobprp(2)));
  EXPECT_EQ(InstanceDigest(Jobprp(1)), InstanceDigest(Jobprp(1)));
  EXPECT_EQ(InstanceDigest(Jobprp(1)).size(), 16u);
}

TEST(InstanceJsonTest, MalformedInputRejected) {
  EXPECT_THROW(InstanceFromJson("not json"), FormatError);
  EXPECT_THROW(InstanceFromJson("{\"format\":\"gapr-model\"}"), FormatError);
}

TEST(DatasetJsonlTest, RoundTripIsByteIdentical) {
  const InstanceRecord rec = Jobprp(3);
  Dataset d = Collect(rec.instance, 25, 1, 4);
  d.meta.instance_digest = InstanceDigest(rec);
  const std::string text = DatasetToJsonl(d);
  const Dataset back = DatasetFromJsonl(text);
  EXPECT_EQ(DatasetToJsonl(back), text);
  EXPECT_EQ(back.plans, d.plans);
  EXPECT_EQ(back.values, d.values);
  EXPECT_EQ(back.seeds, d.seeds);
  EXPECT_EQ(back.meta.instance_digest, d.meta.instance_digest);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  EXPECT_EQ(lines, 26);
}

TEST(DatasetJsonlTest, TimingSidecarRoundTrip) {
  DatasetMeta meta;
  meta.mean_sample_seconds = 0.0125;
  meta.max_sample_seconds = 0.5;
  DatasetMeta back;
  ReadDatasetTiming(DatasetTimingJson(meta), back);
  EXPECT_EQ(back.mean_sample_seconds, 0.0125);
  EXPECT_EQ(back.max_sample_seconds, 0.5);
  EXPECT_EQ(TimingPath("runs/a.jsonl").string(), "runs/a.jsonl.timing.json");
}

TEST(DatasetJsonlTest, MalformedInputRejected) {
  EXPECT_THROW(DatasetFromJsonl(""), FormatError);
  EXPECT_THROW(DatasetFromJsonl("{\"format\":\"gapr-dataset\"}\n{oops}\n"),
               FormatError);
}

TEST(ModelJsonTest, RoundTripIsByteIdentical) {
  ModelRecord m;
  m.instance_digest = "0123456789abcdef";
  m.task_count = 5;
  m.agent_count = 2;
  m.subsets = {TaskSet(5, {0, 1, 4}), TaskSet(5, {2})};
  m.beta = {0.75, -1.0 / 3.0};
  m.meta["stop_reason"] = "non-improvement";
  const std::string text = ModelToJson(m);
  const ModelRecord back = ModelFromJson(text);
  EXPECT_EQ(ModelToJson(back), text);
  EXPECT_EQ(back.subsets, m.subsets);
  EXPECT_EQ(back.beta, m.beta);
}

TEST(PlanJsonTest, RoundTrip) {
  const AssignmentPlan plan(
      std::vector<TaskSet>{TaskSet(4, {1, 3}), TaskSet(4), TaskSet(4, {0, 2})});
  EXPECT_EQ(PlanFromJson(PlanToJson(plan), 4), plan);
  EXPECT_THROW(PlanFromJson(PlanToJson(plan), 3), FormatError);
}

TEST(SummaryJsonTest, RoundTripIsByteIdentical) {
  const InstanceRecord rec = Jobprp(5);
  const PipelineResult r = Pipeline(rec.instance, 60, TrainConfig{}, 1, 1);
  const RunSummary s = Summarize("run", InstanceDigest(rec), rec.instance,
                                 r.data, r.report, 12.0);
  const std::string text = SummaryToJson(s);
  EXPECT_EQ(SummaryToJson(SummaryFromJson(text)), text);
  EXPECT_EQ(s.min_sample, r.data.MinValue());
  EXPECT_NEAR(s.time_total(), s.avg_sample_seconds + s.train_seconds, 1e-12);
}

TEST(SummaryJsonTest, NonFiniteObjectiveSurvives) {
  RunSummary s;
  s.name = "x";
  s.objective = std::numeric_limits<double>::infinity();
  s.plan_from_samples = true;
  const RunSummary back = SummaryFromJson(SummaryToJson(s));
  EXPECT_TRUE(std::isinf(back.objective));
  EXPECT_TRUE(back.plan_from_samples);
}

TEST(ReportCsvTest, OneRowPerRun) {
  std::vector<RunSummary> runs(3);
  for (int k = 0; k < 3; ++k) {
    runs[k].name = "r" + std::to_string(k);
    runs[k].objective = 10 + k;
    runs[k].min_sample = 11;
    runs[k].opt = 10;
  }
  const std::string csv = ReportCsv(runs);
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(csv.rfind("run,instance_digest,tasks,agents,n,obj,", 0), 0u);
}

}  // namespace
}  // namespace gapr
