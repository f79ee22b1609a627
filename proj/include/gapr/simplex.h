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

#ifndef GAPR_SIMPLEX_H_
#define GAPR_SIMPLEX_H_

#include <span>
#include <vector>

#include "gapr/binary_program.h"

namespace gapr {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  long iterations = 0;
};

struct SimplexOptions {
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Rebuild the tableau from the original columns every this many pivots.
  int refactor_period = 100;
  // Pivots without objective progress before switching to Bland's rule;
  // 0 means 10 * var_count.
  long bland_trigger = 0;
  // 0 picks a size-based cap.
  long max_iterations = 0;
};

// Dense-tableau simplex over the LP relaxation of a BinaryProgram with
// per-variable bounds (default [0, 1]). Each row gets a logical variable
// (row activity slack) and an artificial used only by phase I. The engine
// keeps its basis between solves so that bound changes can be re-optimised
// by the dual simplex, which is what branch-and-bound relies on.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const BinaryProgram& program,
                          SimplexOptions options = {});

  // Phase I / phase II primal simplex from the slack basis.
  LpStatus SolvePrimal();

  // Dual simplex from the current basis after SetBounds calls. Falls back to
  // SolvePrimal when the basis cannot be made dual feasible or the dual
  // iterations stall.
  LpStatus Reoptimize();

  void SetBounds(int var, double lower, double upper);
  double lower(int var) const { return lo_[var]; }
  double upper(int var) const { return hi_[var]; }

  // Structural part of the current primal solution.
  std::vector<double> Solution() const;
  double Objective() const;
  long iterations() const { return iterations_; }
  bool has_basis() const { return has_basis_; }

 private:
  enum class VarStatus : unsigned char { kBasic, kLower, kUpper };

  void LoadSlackBasis();
  void Refactor();
  void ComputeReducedCosts();
  void RecomputeBasicValues();
  void Pivot(int row, int col);
  // Runs primal iterations with the current cost vector; false on unbounded.
  bool PrimalLoop();
  // Dual iterations; returns the terminal status or nullopt-equivalent via
  // `stalled`.
  LpStatus DualLoop(bool& stalled);
  void MoveNonbasic(int col, double value);
  bool IsFixed(int col) const { return hi_[col] - lo_[col] <= 0.0; }
  double PrimalTol(double bound) const;
  void CountPivot();

  SimplexOptions options_;
  int m_ = 0;      // rows
  int n_ = 0;      // structural columns
  int cols_ = 0;   // n + 2m
  std::vector<double> a_;        // original matrix, m x cols, row-major
  std::vector<double> b_;
  std::vector<double> structural_cost_;
  std::vector<double> cost_;     // active cost vector
  std::vector<double> tab_;      // B^-1 * original, m x cols
  std::vector<double> tab_rhs_;  // B^-1 * b
  std::vector<double> d_;        // reduced costs
  std::vector<double> x_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<int> basis_;       // column basic in each row
  std::vector<VarStatus> status_;
  std::vector<char> dead_;       // artificial columns retired after phase I
  std::vector<int> live_cols_;
  bool has_basis_ = false;
  bool phase_two_ = false;
  long iterations_ = 0;
  long since_refactor_ = 0;
  double cost_scale_ = 1.0;
};

// Solves the relaxation 0 <= x <= 1 (or the given bounds) from scratch.
LpResult LpSolve(const BinaryProgram& program,
                 std::span<const double> lower = {},
                 std::span<const double> upper = {},
                 SimplexOptions options = {});

}  // namespace gapr

#endif  // GAPR_SIMPLEX_H_
