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

// gapr: instance generation, sampling, training, self-checks and reports.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags, unreadable
// input or an empty run directory, 3 infeasible generation parameters,
// 4 sampling failure, 5 instance digest mismatch.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gapr/enumerate.h"
#include "gapr/errors.h"
#include "gapr/generators.h"
#include "gapr/io.h"
#include "gapr/report.h"
#include "gapr/sampler.h"
#include "gapr/trainer.h"
#include "gapr/verify.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
  kSamplingFailed = 4,
  kDigestMismatch = 5,
};

struct ExitError {
  int code;
  std::string message;
};

struct GenFlags {
  std::string family = "jobprp";
  int tasks = 10;
  int agents = 2;
  std::optional<double> capacity;
  std::uint64_t seed = 0;
  int customers = 60;
  int min_items = 1;
  int max_items = 2;
  int aisles = 4;
  int blocks = 5;
  int hk_threshold = gapr::kDefaultHeldKarpThreshold;
  std::string out;
};

int RunGen(const GenFlags& f) {
  gapr::InstanceRecord record{f.family, f.seed, gapr::GaprInstance({1.0}, 1, 1.0, false)};
  try {
    if (f.family == "jobprp") {
      gapr::JobprpParams p;
      p.orders = f.tasks;
      p.trolleys = f.agents;
      if (f.capacity) p.capacity = *f.capacity;
      p.min_items = f.min_items;
      p.max_items = f.max_items;
      p.aisles = f.aisles;
      p.blocks_per_aisle = f.blocks;
      p.seed = f.seed;
      p.hk_threshold = f.hk_threshold;
      record.instance = gapr::GenerateJobprp(p);
    } else if (f.family == "cluvrp") {
      gapr::CluvrpParams p;
      p.clusters = f.tasks;
      p.customers = f.customers;
      p.vehicles = f.agents;
      if (f.capacity) p.capacity = *f.capacity;
      p.seed = f.seed;
      p.hk_threshold = f.hk_threshold;
      record.instance = gapr::GenerateCluvrp(p);
    } else {
      record.instance = gapr::RandomSmallInstance(f.tasks, f.agents, false, false, f.seed);
      if (f.capacity) {
        const gapr::GaprInstance& base = record.instance;
        std::vector<double> w(base.weights().begin(), base.weights().end());
        record.instance = gapr::GaprInstance(w, base.agent_count(), *f.capacity,
                                             false, base.oracle_ptr());
      }
    }
  } catch (const gapr::GenerationError& e) {
    throw ExitError{kInfeasible, e.what()};
  } catch (const gapr::InvalidInstanceError& e) {
    throw ExitError{kInfeasible, e.what()};
  }
  gapr::WriteFile(f.out, gapr::InstanceToJson(record));
  std::cout << "wrote " << f.out << " (digest " << gapr::InstanceDigest(record)
            << ")\n";
  return kOk;
}

gapr::InstanceRecord LoadInstance(const std::string& path) {
  return gapr::InstanceFromJson(gapr::ReadFile(path));
}

struct SampleFlags {
  std::string instance;
  int n = 500;
  int workers = 0;
  std::uint64_t seed = 0;
  double time_limit = gapr::kDefaultSampleTimeLimit;
  std::string out;
};

int RunSample(const SampleFlags& f) {
  const gapr::InstanceRecord record = LoadInstance(f.instance);
  const int workers = f.workers > 0 ? f.workers : gapr::DefaultWorkerCount();
  gapr::Dataset data;
  try {
    data = gapr::Collect(record.instance, f.n, workers, f.seed, {f.time_limit});
  } catch (const gapr::SamplingError& e) {
    throw ExitError{kSamplingFailed, e.what()};
  }
  data.meta.instance_digest = gapr::InstanceDigest(record);
  gapr::WriteFile(f.out, gapr::DatasetToJsonl(data));
  gapr::WriteFile(gapr::TimingPath(f.out), gapr::DatasetTimingJson(data.meta));
  std::cout << "wrote " << data.size() << " samples to " << f.out << " (min "
            << gapr::FormatDouble(data.MinValue()) << ", limit hits "
            << data.meta.limit_hits << ")\n";
  return kOk;
}

struct TrainFlags {
  std::string instance;
  std::string dataset;
  gapr::TrainConfig config;
  std::optional<std::uint64_t> shuffle_seed;
  double time_limit = gapr::kDefaultSurrogateTimeLimit;
  std::optional<double> budget;
  bool brute_force = false;
  std::string out;
};

int RunTrain(TrainFlags f) {
  const gapr::InstanceRecord record = LoadInstance(f.instance);
  gapr::Dataset data = gapr::DatasetFromJsonl(gapr::ReadFile(f.dataset));
  const std::string digest = gapr::InstanceDigest(record);
  if (data.meta.instance_digest != digest) {
    throw ExitError{kDigestMismatch, "dataset was sampled from instance " +
                                         data.meta.instance_digest +
                                         ", not " + digest};
  }
  if (fs::exists(gapr::TimingPath(f.dataset))) {
    gapr::ReadDatasetTiming(gapr::ReadFile(gapr::TimingPath(f.dataset)), data.meta);
  }
  f.config.shuffle_seed = f.shuffle_seed;
  f.config.surrogate_limits.time_s = f.time_limit;
  if (f.budget) f.config.time_budget_s = *f.budget;
  try {
    f.config.Validate();
  } catch (const gapr::Error& e) {
    throw ExitError{kUsage, e.what()};
  }
  const gapr::TrainReport report = gapr::Train(record.instance, data, f.config);

  std::optional<double> opt;
  if (f.brute_force) opt = gapr::BruteForceOptimum(record.instance).objective;

  gapr::ModelRecord model;
  model.instance_digest = digest;
  model.task_count = record.instance.task_count();
  model.agent_count = record.instance.agent_count();
  model.subsets = report.best_subsets;
  model.beta = report.best_beta;
  model.meta["best_objective"] = gapr::FormatDouble(report.best_objective);
  model.meta["best_plan"] = gapr::PlanToJson(report.best_plan);
  model.meta["best_plan_from_samples"] = report.best_plan_from_samples;
  model.meta["stop_reason"] = gapr::StopReasonName(report.stop_reason);
  model.meta["theta"] = f.config.theta;
  model.meta["pi_card"] = f.config.pi_card;
  model.meta["pi_limit"] = f.config.pi_limit;
  model.meta["r_limit"] = f.config.r_limit;
  model.meta["samples"] = data.size();
  gapr::WriteFile(f.out, gapr::ModelToJson(model));
  gapr::WriteFile(f.out + ".log.csv", gapr::TrainLogCsv(report));
  const gapr::RunSummary summary =
      gapr::Summarize(fs::path(f.out).stem().string(), digest, record.instance,
                      data, report, opt);
  gapr::WriteFile(f.out + ".summary.json", gapr::SummaryToJson(summary));

  std::cout << "z* = " << gapr::FormatDouble(report.best_objective)
            << " (min sample " << gapr::FormatDouble(data.MinValue()) << ")";
  if (opt) std::cout << ", opt " << gapr::FormatDouble(*opt);
  std::cout << ", stop: " << gapr::StopReasonName(report.stop_reason) << ", "
            << report.iterations.size() << " iterations";
  if (report.best_plan_from_samples) std::cout << ", plan taken from samples";
  std::cout << "\n";
  return kOk;
}

int RunVerify(const std::string& suite, std::uint64_t seed) {
  if (!gapr::IsSuite(suite)) throw ExitError{kUsage, "unknown suite " + suite};
  bool ok = true;
  for (const gapr::CheckResult& r : gapr::RunSuite(suite, seed)) {
    // Multi-line details (matrices) go below the verdict line.
    const std::size_t eol = r.detail.find('\n');
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name
              << " (" << r.detail.substr(0, eol) << ")\n";
    if (eol != std::string::npos) std::cout << r.detail.substr(eol + 1) << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerifyFailed;
}

int RunReport(const std::string& runs, const std::string& out,
              const std::string& plots) {
  std::vector<fs::path> files;
  if (fs::is_directory(runs)) {
    for (const auto& entry : fs::recursive_directory_iterator(runs)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.size() > 13 &&
          name.ends_with(".summary.json")) {
        files.push_back(entry.path());
      }
    }
  }
  if (files.empty()) throw ExitError{kUsage, "no completed runs under " + runs};
  std::sort(files.begin(), files.end());
  std::vector<gapr::RunSummary> summaries;
  for (const fs::path& p : files) {
    gapr::RunSummary s = gapr::SummaryFromJson(gapr::ReadFile(p));
    if (s.instance_digest != s.dataset_instance_digest) {
      throw ExitError{kDigestMismatch, p.string() + " mixes instance " +
                                           s.instance_digest + " with a dataset of " +
                                           s.dataset_instance_digest};
    }
    summaries.push_back(std::move(s));
  }
  gapr::WriteFile(out, gapr::ReportCsv(summaries));
  if (!plots.empty()) {
    fs::create_directories(plots);
    for (std::size_t k = 0; k < summaries.size(); ++k) {
      const std::string stem = std::to_string(k) + "_" + summaries[k].name;
      gapr::WriteFile(fs::path(plots) / (stem + "_samples.svg"),
                      gapr::SampleHistogramSvg(summaries[k]));
      gapr::WriteFile(fs::path(plots) / (stem + "_curve.svg"),
                      gapr::ObjectiveCurveSvg(summaries[k]));
    }
  }
  std::cout << "wrote " << summaries.size() << " rows to " << out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surrogate MIP learning for assignment problems with routing"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", gen.family, "jobprp, cluvrp or custom")
      ->check(CLI::IsMember({"jobprp", "cluvrp", "custom"}));
  gen_cmd->add_option("--tasks,--orders,--clusters", gen.tasks, "Number of tasks")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--agents", gen.agents, "Number of agents")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--capacity", gen.capacity, "Agent capacity");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--customers", gen.customers, "Customers (cluvrp)");
  gen_cmd->add_option("--min-items", gen.min_items, "Fewest items per order (jobprp)");
  gen_cmd->add_option("--max-items", gen.max_items, "Most items per order (jobprp)");
  gen_cmd->add_option("--aisles", gen.aisles, "Aisles (jobprp)");
  gen_cmd->add_option("--blocks", gen.blocks, "Blocks per aisle (jobprp)");
  gen_cmd->add_option("--hk-threshold", gen.hk_threshold,
                      "Largest route solved exactly by Held-Karp")
      ->check(CLI::Range(0, 20));
  gen_cmd->add_option("--out", gen.out, "Output instance file")->required();

  SampleFlags sample;
  auto* sample_cmd = app.add_subcommand("sample", "Collect Monte-Carlo samples");
  sample_cmd->add_option("--instance", sample.instance, "Instance file")->required();
  sample_cmd->add_option("--n", sample.n, "Number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--workers", sample.workers,
                         "Worker threads (default: GAPR_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--seed", sample.seed, "Base seed");
  sample_cmd->add_option("--time-limit", sample.time_limit, "Seconds per sample solve")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--out", sample.out, "Output dataset (JSON lines)")->required();

  TrainFlags train;
  auto* train_cmd = app.add_subcommand("train", "Greedy search training");
  train_cmd->add_option("--instance", train.instance, "Instance file")->required();
  train_cmd->add_option("--dataset", train.dataset, "Dataset file")->required();
  train_cmd->add_option("--theta", train.config.theta, "Column budget fraction of N");
  train_cmd->add_option("--pi-card", train.config.pi_card, "First subset cardinality");
  train_cmd->add_option("--pi-limit", train.config.pi_limit, "Last subset cardinality");
  train_cmd->add_option("--r-limit", train.config.r_limit, "R-squared gate");
  train_cmd->add_option("--shuffle-seed", train.shuffle_seed,
                        "Shuffle candidate subsets with this seed");
  train_cmd->add_option("--time-limit", train.time_limit, "Seconds per surrogate solve")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--budget", train.budget, "Total training seconds")
      ->check(CLI::PositiveNumber);
  train_cmd->add_flag("--brute-force", train.brute_force,
                      "Also compute the exhaustive optimum (small instances)");
  train_cmd->add_option("--out", train.out, "Output model file")->required();

  std::string suite = "all";
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  verify_cmd->add_option("--suite", suite, "Suite name or all");
  verify_cmd->add_option("--seed", verify_seed, "Seed for random cases");

  std::string runs, report_out, plots;
  auto* report_cmd = app.add_subcommand("report", "Comparison CSV over runs");
  report_cmd->add_option("--runs", runs, "Directory holding *.summary.json files")
      ->required();
  report_cmd->add_option("--out", report_out, "Output CSV")->required();
  report_cmd->add_option("--plots", plots, "Directory for SVG plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*sample_cmd) return RunSample(sample);
    if (*train_cmd) return RunTrain(train);
    if (*verify_cmd) return RunVerify(suite, verify_seed);
    if (*report_cmd) return RunReport(runs, report_out, plots);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const gapr::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gapr::InvalidInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
