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

#include "gapr/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "gapr/branch_and_bound.h"
#include "gapr/enumerate.h"
#include "gapr/errors.h"
#include "gapr/features.h"
#include "gapr/lasso.h"
#include "gapr/random.h"
#include "gapr/stats.h"
#include "gapr/surrogate.h"
#include "gapr/tour.h"

namespace gapr {
namespace {

CheckResult Check(const std::string& suite, const std::string& name, bool ok,
                  const std::string& detail) {
  return {suite, name, ok, detail};
}

std::string Count(int bad, int total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " agree";
}

TaskSet RandomSubset(int universe, int max_size, Rng& rng) {
  const int k = static_cast<int>(rng.UniformInt(1, std::min(max_size, universe)));
  std::vector<int> ids(universe);
  for (int i = 0; i < universe; ++i) ids[i] = i;
  rng.Shuffle(ids.begin(), ids.end());
  ids.resize(k);
  return TaskSet(universe, ids);
}

AssignmentPlan RandomPlan(const GaprInstance& inst, Rng& rng) {
  const std::vector<AssignmentPlan> plans = EnumerateFeasiblePlans(inst);
  return plans[rng.UniformInt(0, static_cast<long>(plans.size()) - 1)];
}

// Same plan with agents relabelled.
AssignmentPlan Permuted(const AssignmentPlan& plan, Rng& rng) {
  std::vector<TaskSet> subsets = plan.subsets();
  rng.Shuffle(subsets.begin(), subsets.end());
  return AssignmentPlan(std::move(subsets));
}

std::vector<CheckResult> FeatureMatrixSuite() {
  const int n = 3;
  const std::vector<AssignmentPlan> plans = {
      AssignmentPlan({TaskSet(n, {0}), TaskSet(n, {1, 2})}),
      AssignmentPlan({TaskSet(n, {1}), TaskSet(n, {0, 2})}),
      AssignmentPlan({TaskSet(n, {2}), TaskSet(n, {0, 1})}),
  };
  const std::vector<TaskSet> all = {TaskSet(n, {0}),    TaskSet(n, {1}),
                                    TaskSet(n, {2}),    TaskSet(n, {0, 1}),
                                    TaskSet(n, {0, 2}), TaskSet(n, {1, 2}),
                                    TaskSet(n, {0, 1, 2})};
  const int expected[3][7] = {{1, 1, 1, 2, 2, 1, 2},
                              {1, 1, 1, 2, 1, 2, 2},
                              {1, 1, 1, 1, 2, 2, 2}};
  const FeatureMatrix a = BuildFeatures(plans, all);
  std::ostringstream text;
  int bad = 0;
  for (int r = 0; r < 3; ++r) {
    text << "\n  s" << r + 1 << ":";
    for (int c = 0; c < 7; ++c) {
      text << ' ' << a.values(r, c);
      bad += a.values(r, c) == expected[r][c] ? 0 : 1;
    }
  }
  return {Check("features", "matrix", bad == 0,
                std::to_string(21 - bad) + "/21 entries match" + text.str())};
}

std::vector<CheckResult> ContainmentSuite(std::uint64_t seed) {
  Rng rng(seed);
  int bad = 0, total = 0;
  for (int tasks : {4, 5, 6}) {
    for (int agents : {2, 3}) {
      for (bool tight : {false, true}) {
        const GaprInstance inst =
            RandomSmallInstance(tasks, agents, tight, false, rng.UniformInt(0, 1 << 30));
        for (const AssignmentPlan& plan : EnumerateFeasiblePlans(inst)) {
          for (int trial = 0; trial < 3; ++trial) {
            std::vector<TaskSet> h;
            const int size = static_cast<int>(rng.UniformInt(1, 3));
            for (int k = 0; k < size; ++k) h.push_back(RandomSubset(tasks, tasks, rng));
            bool direct = true;
            for (const TaskSet& s : h) {
              bool inside = false;
              for (const TaskSet& part : plan.subsets()) inside = inside || s.IsSubsetOf(part);
              direct = direct && inside;
            }
            ++total;
            bad += CheckP1(plan, h) == direct ? 0 : 1;
          }
        }
      }
    }
  }
  return {Check("containment", "containment", bad == 0, Count(bad, total))};
}

std::vector<CheckResult> ClosedFormSuite(std::uint64_t seed) {
  Rng rng(seed);
  int bad_pos = 0, bad_mixed = 0;
  const int cases = 40;
  double worst = 0.0;
  for (int t = 0; t < cases; ++t) {
    const int tasks = static_cast<int>(rng.UniformInt(3, 7));
    const int agents = static_cast<int>(rng.UniformInt(2, 3));
    const GaprInstance inst = RandomSmallInstance(tasks, agents, false, false,
                                                  rng.UniformInt(0, 1 << 30));
    const AssignmentPlan plan = RandomPlan(inst, rng);
    std::vector<TaskSet> h;
    std::vector<double> beta;
    const int size = static_cast<int>(rng.UniformInt(1, 5));
    for (int k = 0; k < size; ++k) {
      h.push_back(RandomSubset(tasks, tasks, rng));
      beta.push_back(rng.Uniform(0.0, 3.0));
    }
    const SetIndicatorModel pos(inst, h, beta);
    const double d1 = std::abs(EvaluateL(plan, pos) - EvaluateLByMip(plan, pos));
    bad_pos += d1 <= 1e-6 ? 0 : 1;
    for (double& b : beta) b = rng.Uniform(-2.0, 2.0);
    const SetIndicatorModel mixed(inst, h, beta);
    const double d2 = std::abs(EvaluateL(plan, mixed) - EvaluateLByMip(plan, mixed));
    bad_mixed += d2 <= 1e-6 ? 0 : 1;
    worst = std::max({worst, d1, d2});
  }
  return {Check("closed-form", "closed form vs MIP, beta >= 0", bad_pos == 0,
                Count(bad_pos, cases)),
          Check("closed-form", "closed form vs MIP, mixed sign", bad_mixed == 0,
                Count(bad_mixed, cases) + ", max diff " + std::to_string(worst))};
}

std::vector<CheckResult> SeparationSuite(std::uint64_t seed) {
  Rng rng(seed);
  int bad_eq = 0, bad_sep = 0;
  const int pairs = 30;
  for (int t = 0; t < pairs; ++t) {
    const int tasks = static_cast<int>(rng.UniformInt(3, 7));
    const int agents = static_cast<int>(rng.UniformInt(2, 3));
    const GaprInstance inst = RandomSmallInstance(tasks, agents, false, false,
                                                  rng.UniformInt(0, 1 << 30));
    const std::vector<AssignmentPlan> plans = EnumerateFeasiblePlans(inst);
    const AssignmentPlan s1 = plans[rng.UniformInt(0, static_cast<long>(plans.size()) - 1)];
    const AssignmentPlan s1p = Permuted(s1, rng);
    for (int draw = 0; draw < 10; ++draw) {
      std::vector<TaskSet> h;
      std::vector<double> beta;
      const int size = static_cast<int>(rng.UniformInt(1, 4));
      for (int k = 0; k < size; ++k) {
        h.push_back(RandomSubset(tasks, tasks, rng));
        beta.push_back(rng.Uniform(-2.0, 2.0));
      }
      const SetIndicatorModel model(inst, h, beta);
      bad_eq += EvaluateL(s1, model) == EvaluateL(s1p, model) ? 0 : 1;
    }
    AssignmentPlan s2 = plans[rng.UniformInt(0, static_cast<long>(plans.size()) - 1)];
    if (Equivalent(s1, s2)) continue;
    const auto h = DistinguishingH(s1, s2);
    if (!h) {
      ++bad_sep;
      continue;
    }
    const SetIndicatorModel model(inst, *h, std::vector<double>(h->size(), 1.0));
    bad_sep += EvaluateL(s1, model) != EvaluateL(s2, model) ? 0 : 1;
  }
  return {Check("separation", "equivalent plans agree", bad_eq == 0,
                Count(bad_eq, pairs * 10)),
          Check("separation", "distinguishing subset separates", bad_sep == 0,
                std::to_string(bad_sep) + " failures")};
}

std::vector<CheckResult> ReconstructionSuite(std::uint64_t seed) {
  Rng rng(seed);
  int bad_solver = 0, bad_exhaustive = 0, total = 0;
  for (int tasks : {4, 5, 6}) {
    for (int agents : {2, 3}) {
      ++total;
      const GaprInstance inst = RandomSmallInstance(tasks, agents, true, true,
                                                    rng.UniformInt(0, 1 << 30));
      const BruteForceResult best = BruteForceOptimum(inst);
      std::vector<TaskSet> h;
      for (const TaskSet& s : best.plan.subsets()) {
        if (!s.Empty()) h.push_back(s);
      }
      const SetIndicatorModel model(inst, h, std::vector<double>(h.size(), 1.0));
      const SurrogateSolution sol = SolveSurrogate(model);
      bad_solver += Equivalent(sol.plan, best.plan) ? 0 : 1;
      const double floor = static_cast<double>(h.size());
      for (const AssignmentPlan& p : EnumerateFeasiblePlans(inst)) {
        if (EvaluateL(p, model) <= floor + 1e-9 && !Equivalent(p, best.plan)) {
          ++bad_exhaustive;
          break;
        }
      }
    }
  }
  return {Check("reconstruction", "surrogate optimum equivalent to optimum",
                bad_solver == 0, Count(bad_solver, total)),
          Check("reconstruction", "every minimizer equivalent", bad_exhaustive == 0,
                Count(bad_exhaustive, total))};
}

std::vector<CheckResult> ResidualBoundSuite(std::uint64_t seed) {
  Rng rng(seed);
  int bad = 0, bad_lambda = 0;
  const int cases = 20;
  for (int t = 0; t < cases; ++t) {
    DenseMatrix a;
    if (t == 0) {
      const int rows[3][7] = {{1, 1, 1, 2, 2, 1, 2},
                              {1, 1, 1, 2, 1, 2, 2},
                              {1, 1, 1, 1, 2, 2, 2}};
      a = DenseMatrix(3, 7);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 7; ++c) a(r, c) = rows[r][c];
      }
    } else {
      const int r = static_cast<int>(rng.UniformInt(4, 30));
      const int c = static_cast<int>(rng.UniformInt(1, r - 1));
      a = DenseMatrix(r, c);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) a(i, j) = static_cast<double>(rng.UniformInt(1, 3));
      }
    }
    std::vector<double> b(a.rows());
    for (double& v : b) v = rng.Uniform(1.0, 10.0);
    const ResidualBound rb = ResidualBoundCheck(a, b);
    bad += rb.holds ? 0 : 1;
    const bool zero_or_one =
        std::abs(rb.lambda_max) <= 1e-9 || std::abs(rb.lambda_max - 1.0) <= 1e-9;
    bad_lambda += zero_or_one ? 0 : 1;
  }
  return {Check("residual-bound", "residual within bound", bad == 0, Count(bad, cases)),
          Check("residual-bound", "lambda_max in {0, 1}", bad_lambda == 0,
                Count(bad_lambda, cases))};
}

std::vector<CheckResult> CalibrationSuite(std::uint64_t seed) {
  Rng rng(seed);
  const double mu_x = 10.0, mu_y = 5.0, sx = 2.0, sy = 1.0, rho = 0.8;
  const int draws = 100000;
  std::vector<double> xs(draws), ys(draws);
  std::normal_distribution<double> normal;
  std::mt19937_64 engine(seed);
  for (int i = 0; i < draws; ++i) {
    const double z1 = normal(engine);
    const double z2 = normal(engine);
    ys[i] = mu_y + sy * z1;
    xs[i] = mu_x + sx * (rho * z1 + std::sqrt(1 - rho * rho) * z2);
  }
  const BivariateFit fit = FitBivariate(xs, ys);
  std::vector<CheckResult> out;
  const double y_hat = 5.5, eps = 0.05;
  for (double alpha : {0.05, 0.5}) {
    const double zeta = ConditionalUpperBound(fit, y_hat, alpha);
    int in = 0, below = 0;
    for (int i = 0; i < draws; ++i) {
      if (std::abs(ys[i] - y_hat) > eps) continue;
      ++in;
      below += xs[i] < zeta ? 1 : 0;
    }
    const double coverage = static_cast<double>(below) / std::max(1, in);
    out.push_back(Check("calibration", "coverage at alpha " + std::to_string(alpha),
                        std::abs(coverage - (1 - alpha)) <= 0.02,
                        "empirical " + std::to_string(coverage) + " over " +
                            std::to_string(in) + " draws"));
  }
  const double e0 = ConditionalExpectation(fit, 0.0);
  const double slope = fit.sigma_x * fit.rho / fit.sigma_y;
  bool affine = true;
  for (double y : {-3.0, 2.0, 7.5}) {
    affine = affine && std::abs(ConditionalExpectation(fit, y) - (e0 + slope * y)) <= 1e-9;
  }
  out.push_back(Check("calibration", "conditional mean affine", affine, "3 points"));
  return out;
}

std::vector<CheckResult> Bnb(std::uint64_t seed) {
  Rng rng(seed);
  int bad = 0;
  const int cases = 30;
  for (int t = 0; t < cases; ++t) {
    const int n = static_cast<int>(rng.UniformInt(2, 14));
    const int m = static_cast<int>(rng.UniformInt(1, 8));
    BinaryProgram p(n);
    for (int v = 0; v < n; ++v) p.SetObjective(v, rng.Uniform(-5.0, 5.0));
    for (int r = 0; r < m; ++r) {
      std::vector<Term> terms;
      for (int v = 0; v < n; ++v) {
        if (rng.Uniform() < 0.6) terms.push_back({v, static_cast<double>(rng.UniformInt(-3, 5))});
      }
      const Sense sense = rng.Uniform() < 0.7 ? Sense::kLessEqual : Sense::kGreaterEqual;
      p.AddConstraint(std::move(terms), sense, static_cast<double>(rng.UniformInt(0, 6)));
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> x(n);
    for (long mask = 0; mask < (1L << n); ++mask) {
      for (int v = 0; v < n; ++v) x[v] = (mask >> v) & 1;
      if (p.IsFeasible(x)) best = std::min(best, p.ObjectiveValue(x));
    }
    const MipResult r = BnbSolve(p);
    if (std::isinf(best)) {
      bad += r.status == MipStatus::kInfeasible ? 0 : 1;
    } else {
      bad += r.status == MipStatus::kOptimal && std::abs(r.objective - best) <= 1e-6 ? 0 : 1;
    }
  }
  return {Check("bnb", "matches enumeration", bad == 0, Count(bad, cases))};
}

std::vector<CheckResult> Lasso(std::uint64_t seed) {
  Rng rng(seed);
  int bad = 0;
  const int cases = 20;
  double overall = 0.0;
  for (int t = 0; t < cases; ++t) {
    double worst = 0.0;
    const int rows = static_cast<int>(rng.UniformInt(4, 12));
    const int cols = static_cast<int>(rng.UniformInt(1, rows));
    // Orthonormal columns from a random signed permutation.
    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    rng.Shuffle(perm.begin(), perm.end());
    DenseMatrix a(rows, cols);
    for (int c = 0; c < cols; ++c) a(perm[c], c) = rng.Uniform() < 0.5 ? -1.0 : 1.0;
    std::vector<double> b(rows);
    for (double& v : b) v = rng.Uniform(-5.0, 5.0);
    const double gamma = rng.Uniform(0.0, 3.0);
    const RegressionResult fit = LassoFit(a, b, gamma);
    for (int c = 0; c < cols; ++c) {
      double z = 0.0;
      for (int r = 0; r < rows; ++r) z += a(r, c) * b[r];
      const double expect = z > gamma ? z - gamma : (z < -gamma ? z + gamma : 0.0);
      worst = std::max(worst, std::abs(fit.beta[c] - expect));
    }
    bad += worst <= 1e-8 ? 0 : 1;
    overall = std::max(overall, worst);
  }
  return {Check("lasso", "soft-threshold oracle", bad == 0,
                Count(bad, cases) + ", max error " + std::to_string(overall))};
}

}  // namespace

GaprInstance RandomSmallInstance(int tasks, int agents, bool tight,
                                 bool nonempty, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> weights(tasks);
  for (double& w : weights) w = static_cast<double>(rng.UniformInt(1, 3));
  TourGeometry g;
  g.metric = Metric::kEuclidean;
  g.points.push_back({5.0, 5.0});
  for (int i = 0; i < tasks; ++i) {
    g.points.push_back({rng.Uniform(0.0, 10.0), rng.Uniform(0.0, 10.0)});
    g.task_nodes.push_back({i + 1});
  }
  auto oracle = std::make_shared<TourOracle>(std::move(g));
  if (!tight) {
    return GaprInstance(weights, agents, kUnboundedCapacity, nonempty, oracle);
  }
  double total = 0.0, heaviest = 0.0;
  for (double w : weights) {
    total += w;
    heaviest = std::max(heaviest, w);
  }
  for (double q = std::max(heaviest, std::ceil(total / agents));; q += 1.0) {
    GaprInstance inst(weights, agents, q, nonempty, oracle);
    bool any = false;
    try {
      ForEachFeasibleAssignment(inst, [&](std::span<const int>) { any = true; });
    } catch (const Error&) {
      return inst;  // too large to check; the caller asked for a big one
    }
    if (any) return inst;
  }
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "features", "containment", "closed-form", "separation", "reconstruction",
      "residual-bound", "calibration", "bnb", "lasso"};
  return names;
}

bool IsSuite(const std::string& name) {
  if (name == "all") return true;
  const auto& names = SuiteNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> RunSuite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const std::string& s : SuiteNames()) {
      const auto part = RunSuite(s, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "features") return FeatureMatrixSuite();
  if (name == "containment") return ContainmentSuite(seed);
  if (name == "closed-form") return ClosedFormSuite(seed);
  if (name == "separation") return SeparationSuite(seed);
  if (name == "reconstruction") return ReconstructionSuite(seed);
  if (name == "residual-bound") return ResidualBoundSuite(seed);
  if (name == "calibration") return CalibrationSuite(seed);
  if (name == "bnb") return Bnb(seed);
  if (name == "lasso") return Lasso(seed);
  throw Error("unknown suite " + name);
}

}  // namespace gapr
