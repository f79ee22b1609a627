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

#ifndef GAPR_BRANCH_AND_BOUND_H_
#define GAPR_BRANCH_AND_BOUND_H_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapr/binary_program.h"

namespace gapr {

struct MipLimits {
  double time_s = std::numeric_limits<double>::infinity();
  long node_cap = std::numeric_limits<long>::max();
  double gap_tol = 1e-6;
};

enum class MipStatus {
  kOptimal,
  // A limit stopped the search; the incumbent is the best found.
  kFeasible,
  kInfeasible,
  // A limit stopped the search before any incumbent was found.
  kUnknown,
};

std::string MipStatusName(MipStatus status);

struct MipResult {
  MipStatus status = MipStatus::kUnknown;
  std::optional<std::vector<int>> incumbent;
  double objective = std::numeric_limits<double>::infinity();
  // Best proven lower bound.
  double bound = -std::numeric_limits<double>::infinity();
  // (objective - bound) / max(|objective|, 1).
  double gap = std::numeric_limits<double>::infinity();
  long nodes = 0;
  long lp_iterations = 0;
  double elapsed = 0.0;
};

// LP-based branch-and-bound for a pure binary program. Branches on the most
// fractional variable (lowest index on ties), dives into the child the LP
// value rounds to, and otherwise picks the open node with the best bound.
// A rounding heuristic seeds the incumbent at the root. With `priority`
// (one entry per variable), only fractional variables of the highest
// priority present are branching candidates.
MipResult BnbSolve(const BinaryProgram& program, const MipLimits& limits = {},
                   std::span<const int> priority = {});

// Root primal heuristic: rounds set-partitioning rows (all-ones equality rows
// with right-hand side 1) to their largest LP value, moves items out of
// violated knapsack rows, then sets the remaining variables greedily and
// repairs violated rows. Returns nothing when no feasible point is reached.
std::optional<std::vector<int>> RoundingHeuristic(const BinaryProgram& program,
                                                  std::span<const double> lp_x);

}  // namespace gapr

#endif  // GAPR_BRANCH_AND_BOUND_H_
