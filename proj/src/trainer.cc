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

#include "gapr/trainer.h"

#include <chrono>
#include <cmath>
#include <exception>

#include "gapr/errors.h"
#include "gapr/features.h"
#include "gapr/subset_catalog.h"
#include "gapr/surrogate.h"

namespace gapr {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(theta > 0.0 && theta <= 1.0)) throw Error("theta must lie in (0, 1]");
  if (pi_card < 1) throw Error("pi_card must be at least 1");
  if (pi_limit < pi_card) throw Error("pi_limit must be at least pi_card");
  if (!(eps_zero >= 0.0)) throw Error("eps_zero must be nonnegative");
  if (std::isnan(r_limit)) throw Error("r_limit is NaN");
}

const char* StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kNonImprovement: return "non-improvement";
    case StopReason::kCardinalityExhausted: return "cardinality-exhausted";
    case StopReason::kR2NeverPassed: return "r2-never-passed";
    case StopReason::kBudget: return "budget";
  }
  return "?";
}

TrainReport Train(const GaprInstance& inst, const Dataset& data,
                  const TrainConfig& config) {
  config.Validate();
  if (data.size() == 0) throw Error("training needs a nonempty dataset");
  const int n = data.size();
  const auto cap = static_cast<std::size_t>(std::floor(config.theta * n));
  if (cap < 1) throw Error("theta * N is below one column");
  const auto start = Clock::now();

  TrainReport report;
  report.avg_sample_seconds = data.meta.mean_sample_seconds;
  const SubsetCatalog catalog(inst.task_count(), config.shuffle_seed);
  LassoOptions lasso;
  lasso.eps_zero = config.eps_zero;

  std::vector<TaskSet> h;
  std::vector<TaskSet> pending;
  std::size_t pending_head = 0;
  int pi = config.pi_card;
  int last_refill = 0;
  bool any_solved = false;
  bool stopped = false;

  auto pending_empty = [&] { return pending_head >= pending.size(); };

  while (pi <= config.pi_limit || !pending_empty()) {
    if (Since(start) > config.time_budget_s) {
      report.stop_reason = StopReason::kBudget;
      stopped = true;
      break;
    }
    if (pending_empty()) {
      pending = catalog.Pool(pi, pi);
      pending_head = 0;
      last_refill = pi;
      ++pi;
      if (pending.empty()) continue;
    }
    const std::size_t left = pending.size() - pending_head;
    if (h.size() + left <= cap) {
      h.insert(h.end(), pending.begin() + pending_head, pending.end());
      pending_head = pending.size();
    } else {
      if (h.size() >= cap) {
        // The pruned support already fills the column budget; nothing new
        // can enter.
        report.stop_reason = StopReason::kBudget;
        stopped = true;
        break;
      }
      const std::size_t take = cap - h.size();
      h.insert(h.end(), pending.begin() + pending_head,
               pending.begin() + pending_head + take);
      pending_head += take;
    }

    const auto iter_start = Clock::now();
    IterationLog log;
    log.index = static_cast<int>(report.iterations.size());
    log.pi_card = last_refill;
    log.columns = static_cast<int>(h.size());
    log.pending = static_cast<int>(pending.size() - pending_head);

    const FeatureMatrix a = BuildFeatures(data.plans, h);
    log.gamma = GammaSelect(a.values, data.values);
    const RegressionResult fit = LassoFit(a.values, data.values, log.gamma, lasso);
    log.r2 = fit.r2;
    log.r2_degenerate = fit.r2_degenerate;
    log.lasso_sweeps = fit.sweeps;

    std::vector<TaskSet> kept;
    std::vector<double> beta;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (std::abs(fit.beta[k]) > config.eps_zero) {
        kept.push_back(h[k]);
        beta.push_back(fit.beta[k]);
      }
    }
    h = kept;
    log.support = static_cast<int>(h.size());

    bool stop_now = false;
    if (fit.r2 > config.r_limit && !h.empty()) {
      const auto solve_start = Clock::now();
      try {
        const SetIndicatorModel model(inst, h, beta);
        const SurrogateSolution sol = SolveSurrogate(model, config.surrogate_limits);
        log.surrogate_solved = true;
        log.mip_status = sol.mip.status;
        log.surrogate_objective = sol.mip.objective;
        log.mip_nodes = sol.mip.nodes;
        log.program_rows = sol.rows;
        log.program_cols = sol.cols;
        log.mip_gap = sol.mip.gap;
        log.mip_seconds = sol.mip.elapsed;
        log.z = EvaluateObjective(sol.plan, inst).total;
        any_solved = true;
        if (log.z < report.best_objective) {
          log.accepted = true;
          report.best_objective = log.z;
          report.best_plan = sol.plan;
          report.best_subsets = h;
          report.best_beta = beta;
        } else {
          stop_now = true;
        }
      } catch (const std::exception& e) {
        log.error = e.what();
      }
      report.solve_seconds += Since(solve_start);
    }
    log.seconds = Since(iter_start);
    report.iterations.push_back(std::move(log));
    if (stop_now) {
      report.stop_reason = StopReason::kNonImprovement;
      stopped = true;
      break;
    }
  }
  if (!stopped) {
    report.stop_reason = any_solved ? StopReason::kCardinalityExhausted
                                    : StopReason::kR2NeverPassed;
  }
  if (!std::isfinite(report.best_objective)) {
    int best = 0;
    for (int i = 1; i < n; ++i) {
      if (data.values[i] < data.values[best]) best = i;
    }
    report.best_plan = data.plans[best];
    report.best_plan_from_samples = true;
  }
  report.train_seconds = Since(start);
  return report;
}

PipelineResult Pipeline(const GaprInstance& inst, int n, const TrainConfig& config,
                        std::uint64_t base_seed, int workers,
                        const MipLimits& sample_limits) {
  config.Validate();
  PipelineResult out;
  out.data = Collect(inst, n, workers, base_seed, sample_limits);
  out.report = Train(inst, out.data, config);
  return out;
}

}  // namespace gapr
