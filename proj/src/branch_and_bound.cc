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

#include "gapr/branch_and_bound.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

#include "gapr/errors.h"
#include "gapr/simplex.h"

namespace gapr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIntegralityTol = 1e-6;
constexpr double kFeasibilityTol = 1e-6;

double Violation(const Constraint& c, double activity) {
  switch (c.sense) {
    case Sense::kLessEqual: return std::max(0.0, activity - c.rhs);
    case Sense::kGreaterEqual: return std::max(0.0, c.rhs - activity);
    case Sense::kEqual: return std::abs(activity - c.rhs);
  }
  return 0.0;
}

double Activity(const Constraint& c, const std::vector<int>& x) {
  double a = 0.0;
  for (const Term& t : c.terms) a += t.coef * x[t.var];
  return a;
}

bool IsPartitionRow(const Constraint& c) {
  if (c.sense != Sense::kEqual || c.rhs != 1.0 || c.terms.empty()) return false;
  return std::all_of(c.terms.begin(), c.terms.end(),
                     [](const Term& t) { return t.coef == 1.0; });
}

struct OpenNode {
  std::vector<std::int8_t> fix;  // -1 free, 0 or 1 fixed
  double bound = -kInf;
  long seq = 0;
};

struct WorseNode {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

}  // namespace

std::string MipStatusName(MipStatus status) {
  switch (status) {
    case MipStatus::kOptimal: return "optimal";
    case MipStatus::kFeasible: return "feasible";
    case MipStatus::kInfeasible: return "infeasible";
    case MipStatus::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<std::vector<int>> RoundingHeuristic(const BinaryProgram& program,
                                                  std::span<const double> lp_x) {
  const int n = program.var_count();
  const auto& rows = program.constraints();
  std::vector<int> x(n, 0);
  std::vector<int> group_of(n, -1);
  std::vector<std::vector<int>> groups;
  for (const Constraint& c : rows) {
    if (!IsPartitionRow(c)) continue;
    std::vector<int> members;
    for (const Term& t : c.terms) {
      if (group_of[t.var] < 0) members.push_back(t.var);
    }
    if (members.empty()) continue;
    for (int j : members) group_of[j] = static_cast<int>(groups.size());
    groups.push_back(std::move(members));
  }
  // Chosen member per group: largest LP value, lowest index on ties.
  std::vector<int> chosen(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    int best = groups[g].front();
    for (int j : groups[g]) {
      if (lp_x[j] > lp_x[best] + 1e-12) best = j;
    }
    chosen[g] = best;
    x[best] = 1;
  }
  std::vector<char> row_has_free(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Term& t : rows[r].terms) {
      if (group_of[t.var] < 0) row_has_free[r] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (group_of[j] < 0) x[j] = program.objective()[j] < 0 ? 1 : 0;
  }

  auto group_violation = [&]() {
    double v = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_has_free[r]) v += Violation(rows[r], Activity(rows[r], x));
    }
    return v;
  };

  // Repairs rows by flipping free variables, cheapest objective change first.
  auto repair_free = [&]() {
    for (int pass = 0; pass < 2 * n + 2; ++pass) {
      bool changed = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!row_has_free[r]) continue;
        const Constraint& c = rows[r];
        double activity = Activity(c, x);
        if (Violation(c, activity) <= kFeasibilityTol) continue;
        const bool need_up =
            c.sense == Sense::kGreaterEqual ||
            (c.sense == Sense::kEqual && activity < c.rhs);
        std::vector<const Term*> options;
        for (const Term& t : c.terms) {
          if (group_of[t.var] >= 0) continue;
          const bool raises = (t.coef > 0) == (x[t.var] == 0);
          if (raises == need_up && t.coef != 0.0) options.push_back(&t);
        }
        std::sort(options.begin(), options.end(), [&](const Term* a, const Term* b) {
          const double ca = program.objective()[a->var] * (x[a->var] ? -1 : 1);
          const double cb = program.objective()[b->var] * (x[b->var] ? -1 : 1);
          if (ca != cb) return ca < cb;
          return a->var < b->var;
        });
        for (const Term* t : options) {
          if (Violation(c, activity) <= kFeasibilityTol) break;
          activity -= t->coef * x[t->var];
          x[t->var] = 1 - x[t->var];
          activity += t->coef * x[t->var];
          changed = true;
        }
      }
      if (!changed) return;
    }
  };

  for (int round = 0; round < 4 * static_cast<int>(groups.size()) + 4; ++round) {
    repair_free();
    double current = group_violation();
    if (current <= kFeasibilityTol) break;
    // Best single reassignment within a group.
    double best_violation = current;
    double best_cost = kInf;
    int best_group = -1;
    int best_member = -1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const int from = chosen[g];
      for (int to : groups[g]) {
        if (to == from) continue;
        x[from] = 0;
        x[to] = 1;
        const double v = group_violation();
        const double cost = program.objective()[to] - program.objective()[from];
        x[to] = 0;
        x[from] = 1;
        if (v < best_violation - 1e-12 ||
            (v <= best_violation + 1e-12 && best_group >= 0 && cost < best_cost)) {
          best_violation = v;
          best_cost = cost;
          best_group = static_cast<int>(g);
          best_member = to;
        }
      }
    }
    if (best_group < 0) break;
    x[chosen[best_group]] = 0;
    x[best_member] = 1;
    chosen[best_group] = best_member;
  }
  repair_free();
  if (!program.IsFeasible(x, kFeasibilityTol)) return std::nullopt;
  // Drop free variables that only cost objective.
  for (int j = 0; j < n; ++j) {
    if (group_of[j] >= 0) continue;
    const double c = program.objective()[j];
    if ((x[j] == 1 && c > 0) || (x[j] == 0 && c < 0)) {
      x[j] = 1 - x[j];
      if (!program.IsFeasible(x, kFeasibilityTol)) x[j] = 1 - x[j];
    }
  }
  return x;
}

MipResult BnbSolve(const BinaryProgram& program, const MipLimits& limits,
                   std::span<const int> priority) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  program.Validate();
  const int n = program.var_count();
  if (!priority.empty() && priority.size() != static_cast<std::size_t>(n)) {
    throw SolverError("branching priority needs one entry per variable");
  }
  MipResult result;
  BoundedSimplex lp(program);
  std::vector<std::int8_t> engine_fix(n, -1);

  double incumbent_obj = kInf;
  auto offer = [&](const std::vector<int>& x) {
    if (!program.IsFeasible(x, kFeasibilityTol)) return;
    const double obj = program.ObjectiveValue(x);
    if (obj < incumbent_obj) {
      incumbent_obj = obj;
      result.incumbent = x;
    }
  };
  auto cutoff = [&] {
    if (!result.incumbent) return kInf;
    return incumbent_obj - limits.gap_tol * std::max(std::abs(incumbent_obj), 1.0);
  };

  std::priority_queue<OpenNode, std::vector<OpenNode>, WorseNode> open;
  long seq = 0;
  std::optional<OpenNode> current = OpenNode{std::vector<std::int8_t>(n, -1), -kInf, seq++};
  double pruned_min = kInf;
  bool limit_hit = false;
  bool first_solve = true;

  for (;;) {
    if (!current) {
      while (!open.empty() && open.top().bound >= cutoff()) {
        pruned_min = std::min(pruned_min, open.top().bound);
        open.pop();
      }
      if (open.empty()) break;
      current = open.top();
      open.pop();
    }
    if (result.nodes >= limits.node_cap || elapsed() > limits.time_s) {
      limit_hit = true;
      break;
    }
    for (int j = 0; j < n; ++j) {
      if (current->fix[j] == engine_fix[j]) continue;
      engine_fix[j] = current->fix[j];
      if (engine_fix[j] < 0) {
        lp.SetBounds(j, 0.0, 1.0);
      } else {
        lp.SetBounds(j, engine_fix[j], engine_fix[j]);
      }
    }
    const LpStatus status = first_solve ? lp.SolvePrimal() : lp.Reoptimize();
    const bool is_root = first_solve;
    first_solve = false;
    ++result.nodes;
    if (status != LpStatus::kOptimal) {
      // Binary variables keep every relaxation bounded, so anything but
      // optimal means the node is empty.
      current.reset();
      continue;
    }
    const double lp_obj = lp.Objective();
    const std::vector<double> x = lp.Solution();
    if (is_root) {
      if (auto heuristic = RoundingHeuristic(program, x)) offer(*heuristic);
    }
    if (lp_obj >= cutoff()) {
      pruned_min = std::min(pruned_min, lp_obj);
      current.reset();
      continue;
    }
    int branch = -1;
    double most = 0.0;
    int level = std::numeric_limits<int>::min();
    for (int j = 0; j < n; ++j) {
      const double frac = std::min(x[j] - std::floor(x[j]), std::ceil(x[j]) - x[j]);
      if (frac <= kIntegralityTol) continue;
      const int pj = priority.empty() ? 0 : priority[j];
      if (pj > level || (pj == level && frac > most + 1e-12)) {
        level = pj;
        most = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      std::vector<int> rounded(n);
      for (int j = 0; j < n; ++j) rounded[j] = static_cast<int>(std::lround(x[j]));
      offer(rounded);
      pruned_min = std::min(pruned_min, lp_obj);
      current.reset();
      continue;
    }
    OpenNode up{current->fix, lp_obj, seq++};
    OpenNode down{current->fix, lp_obj, seq++};
    up.fix[branch] = 1;
    down.fix[branch] = 0;
    if (x[branch] >= 0.5) {
      open.push(std::move(down));
      current = std::move(up);
    } else {
      open.push(std::move(up));
      current = std::move(down);
    }
  }

  result.elapsed = elapsed();
  result.lp_iterations = lp.iterations();
  result.objective = incumbent_obj;
  if (limit_hit) {
    double bound = std::min(pruned_min, incumbent_obj);
    if (current) bound = std::min(bound, current->bound);
    while (!open.empty()) {
      bound = std::min(bound, open.top().bound);
      open.pop();
    }
    result.bound = bound;
  } else {
    result.bound = std::min(pruned_min, incumbent_obj);
  }
  if (!result.incumbent) {
    result.status = limit_hit ? MipStatus::kUnknown : MipStatus::kInfeasible;
    if (!limit_hit) result.bound = kInf;
    return result;
  }
  result.gap = (result.objective - result.bound) /
               std::max(std::abs(result.objective), 1.0);
  if (result.gap < 0) result.gap = 0.0;
  result.status = (!limit_hit || result.gap <= limits.gap_tol)
                      ? MipStatus::kOptimal
                      : MipStatus::kFeasible;
  return result;
}

}  // namespace gapr
