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

#include "gapr/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gapr/errors.h"

namespace gapr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieEps = 1e-12;

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
}  // namespace

BoundedSimplex::BoundedSimplex(const BinaryProgram& program,
                               SimplexOptions options)
    : options_(options) {
  program.Validate();
  m_ = program.constraint_count();
  n_ = program.var_count();
  cols_ = n_ + 2 * m_;
  a_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
  b_.resize(m_);
  lo_.assign(cols_, 0.0);
  hi_.assign(cols_, 0.0);
  for (int j = 0; j < n_; ++j) hi_[j] = 1.0;
  for (int r = 0; r < m_; ++r) {
    const Constraint& c = program.constraint(r);
    for (const Term& t : c.terms) a_[r * cols_ + t.var] += t.coef;
    a_[r * cols_ + n_ + r] = 1.0;
    a_[r * cols_ + n_ + m_ + r] = 1.0;
    b_[r] = c.rhs;
    const int logical = n_ + r;
    switch (c.sense) {
      case Sense::kLessEqual: lo_[logical] = 0.0; hi_[logical] = kInf; break;
      case Sense::kGreaterEqual: lo_[logical] = -kInf; hi_[logical] = 0.0; break;
      case Sense::kEqual: lo_[logical] = 0.0; hi_[logical] = 0.0; break;
    }
  }
  structural_cost_ = program.objective();
  for (double c : structural_cost_) cost_scale_ = std::max(cost_scale_, std::abs(c));
  x_.assign(cols_, 0.0);
  d_.assign(cols_, 0.0);
  cost_.assign(cols_, 0.0);
  status_.assign(cols_, VarStatus::kLower);
  dead_.assign(cols_, 0);
  if (options_.bland_trigger <= 0) {
    options_.bland_trigger = std::max<long>(50, 10L * n_);
  }
  if (options_.max_iterations <= 0) {
    options_.max_iterations = 200L * (m_ + n_) + 10000;
  }
}

double BoundedSimplex::PrimalTol(double bound) const {
  return options_.primal_tol * (1.0 + std::abs(bound));
}

void BoundedSimplex::SetBounds(int var, double lower, double upper) {
  if (var < 0 || var >= n_) throw SolverError("SetBounds: variable out of range");
  lo_[var] = lower;
  hi_[var] = upper;
  if (!has_basis_ || status_[var] == VarStatus::kBasic) return;
  if (status_[var] == VarStatus::kUpper && !IsFixed(var)) {
    MoveNonbasic(var, upper);
  } else {
    status_[var] = VarStatus::kLower;
    MoveNonbasic(var, lower);
  }
}

void BoundedSimplex::MoveNonbasic(int col, double value) {
  const double delta = value - x_[col];
  x_[col] = value;
  if (delta == 0.0) return;
  for (int i = 0; i < m_; ++i) {
    x_[basis_[i]] -= tab_[static_cast<std::size_t>(i) * cols_ + col] * delta;
  }
}

void BoundedSimplex::LoadSlackBasis() {
  phase_two_ = false;
  basis_.assign(m_, -1);
  std::fill(dead_.begin(), dead_.end(), 0);
  std::fill(cost_.begin(), cost_.end(), 0.0);
  for (int j = 0; j < n_; ++j) {
    if (std::isfinite(lo_[j])) {
      status_[j] = VarStatus::kLower;
      x_[j] = lo_[j];
    } else if (std::isfinite(hi_[j])) {
      status_[j] = VarStatus::kUpper;
      x_[j] = hi_[j];
    } else {
      status_[j] = VarStatus::kLower;
      x_[j] = 0.0;
    }
  }
  for (int r = 0; r < m_; ++r) {
    double activity = 0.0;
    for (int j = 0; j < n_; ++j) activity += a_[r * cols_ + j] * x_[j];
    const double residual = b_[r] - activity;
    const int logical = n_ + r;
    const int art = n_ + m_ + r;
    if (residual >= lo_[logical] - PrimalTol(lo_[logical]) &&
        residual <= hi_[logical] + PrimalTol(hi_[logical])) {
      basis_[r] = logical;
      status_[logical] = VarStatus::kBasic;
      x_[logical] = residual;
      status_[art] = VarStatus::kLower;
      lo_[art] = hi_[art] = 0.0;
      x_[art] = 0.0;
      a_[r * cols_ + art] = 1.0;
    } else {
      const double s = std::clamp(residual, lo_[logical], hi_[logical]);
      x_[logical] = s;
      status_[logical] =
          (s == lo_[logical]) ? VarStatus::kLower : VarStatus::kUpper;
      const double gap = residual - s;
      a_[r * cols_ + art] = gap >= 0 ? 1.0 : -1.0;
      basis_[r] = art;
      status_[art] = VarStatus::kBasic;
      lo_[art] = 0.0;
      hi_[art] = kInf;
      x_[art] = std::abs(gap);
      cost_[art] = 1.0;
    }
  }
  live_cols_.clear();
  for (int r = 0; r < m_; ++r) {
    const int art = n_ + m_ + r;
    if (basis_[r] == art) {
      live_cols_.push_back(art);
    } else {
      dead_[art] = 1;
    }
  }
  has_basis_ = true;
  Refactor();
}

void BoundedSimplex::Refactor() {
  since_refactor_ = 0;
  tab_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
  tab_rhs_.assign(m_, 0.0);
  if (m_ > 0) {
    Eigen::MatrixXd basis(m_, m_);
    for (int i = 0; i < m_; ++i) {
      for (int r = 0; r < m_; ++r) basis(r, i) = a_[r * cols_ + basis_[i]];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
    Eigen::Map<const RowMatrix> original(a_.data(), m_, cols_);
    RowMatrix solved = lu.solve(original);
    std::copy(solved.data(), solved.data() + solved.size(), tab_.begin());
    Eigen::Map<const Eigen::VectorXd> rhs(b_.data(), m_);
    Eigen::VectorXd solved_rhs = lu.solve(rhs);
    for (int i = 0; i < m_; ++i) tab_rhs_[i] = solved_rhs(i);
    // Clean the basic columns to exact unit vectors.
    for (int i = 0; i < m_; ++i) {
      for (int r = 0; r < m_; ++r) {
        tab_[static_cast<std::size_t>(r) * cols_ + basis_[i]] = (r == i) ? 1.0 : 0.0;
      }
    }
  }
  RecomputeBasicValues();
  ComputeReducedCosts();
}

void BoundedSimplex::RecomputeBasicValues() {
  std::vector<int> moved;
  for (int j = 0; j < cols_; ++j) {
    if (status_[j] != VarStatus::kBasic && !dead_[j] && x_[j] != 0.0) {
      moved.push_back(j);
    }
  }
  for (int i = 0; i < m_; ++i) {
    const double* row = &tab_[static_cast<std::size_t>(i) * cols_];
    double v = tab_rhs_[i];
    for (int j : moved) v -= row[j] * x_[j];
    x_[basis_[i]] = v;
  }
}

void BoundedSimplex::ComputeReducedCosts() {
  d_ = cost_;
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &tab_[static_cast<std::size_t>(i) * cols_];
    for (int j = 0; j < cols_; ++j) d_[j] -= cb * row[j];
  }
  for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
}

void BoundedSimplex::Pivot(int row, int col) {
  const int dense = n_ + m_;
  double* prow = &tab_[static_cast<std::size_t>(row) * cols_];
  const double inv = 1.0 / prow[col];
  for (int j = 0; j < dense; ++j) prow[j] *= inv;
  for (int j : live_cols_) prow[j] *= inv;
  tab_rhs_[row] *= inv;
  prow[col] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == row) continue;
    double* irow = &tab_[static_cast<std::size_t>(i) * cols_];
    const double f = irow[col];
    if (f == 0.0) continue;
    for (int j = 0; j < dense; ++j) irow[j] -= f * prow[j];
    for (int j : live_cols_) irow[j] -= f * prow[j];
    tab_rhs_[i] -= f * tab_rhs_[row];
    irow[col] = 0.0;
  }
  const double f = d_[col];
  if (f != 0.0) {
    for (int j = 0; j < dense; ++j) d_[j] -= f * prow[j];
    for (int j : live_cols_) d_[j] -= f * prow[j];
    d_[col] = 0.0;
  }
  basis_[row] = col;
}

void BoundedSimplex::CountPivot() {
  ++iterations_;
  ++since_refactor_;
  if (since_refactor_ >= options_.refactor_period) Refactor();
}

bool BoundedSimplex::PrimalLoop() {
  const double dtol = options_.dual_tol * cost_scale_;
  bool bland = false;
  long stall = 0;
  long local = 0;
  const int dense = n_ + m_;
  for (;;) {
    if (++local > options_.max_iterations) {
      throw SolverError("simplex: iteration limit exceeded");
    }
    // Pricing: Dantzig, or the smallest eligible index under Bland's rule.
    int q = -1;
    double best = 0.0;
    auto consider = [&](int j) {
      if (status_[j] == VarStatus::kBasic || dead_[j] || IsFixed(j)) return false;
      double score = 0.0;
      if (status_[j] == VarStatus::kLower && d_[j] < -dtol) {
        score = -d_[j];
      } else if (status_[j] == VarStatus::kUpper && d_[j] > dtol) {
        score = d_[j];
      } else {
        return false;
      }
      if (bland) {
        q = j;
        return true;
      }
      if (score > best) {
        best = score;
        q = j;
      }
      return false;
    };
    bool done = false;
    for (int j = 0; j < dense && !done; ++j) done = consider(j);
    for (std::size_t k = 0; k < live_cols_.size() && !done; ++k) {
      done = consider(live_cols_[k]);
    }
    if (q < 0) return true;

    const double dir = d_[q] < 0 ? 1.0 : -1.0;
    int leave_row = -1;
    double t_best = kInf;
    double alpha_best = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double alpha = tab_[static_cast<std::size_t>(i) * cols_ + q];
      if (std::abs(alpha) <= options_.pivot_tol) continue;
      const int bv = basis_[i];
      const double rate = -dir * alpha;
      double t;
      if (rate < 0) {
        if (!std::isfinite(lo_[bv])) continue;
        t = (x_[bv] - lo_[bv]) / -rate;
      } else {
        if (!std::isfinite(hi_[bv])) continue;
        t = (hi_[bv] - x_[bv]) / rate;
      }
      t = std::max(t, 0.0);
      bool take = false;
      if (leave_row < 0 || t < t_best - kTieEps) {
        take = true;
      } else if (t <= t_best + kTieEps) {
        take = bland ? bv < basis_[leave_row]
                     : std::abs(alpha) > std::abs(alpha_best);
      }
      if (take) {
        leave_row = i;
        t_best = t;
        alpha_best = alpha;
      }
    }
    const double range = hi_[q] - lo_[q];
    if (leave_row < 0 && !std::isfinite(range)) return false;

    const double improvement = std::abs(d_[q]);
    if (leave_row < 0 || range <= t_best) {
      // Bound flip, no basis change.
      const double target = dir > 0 ? hi_[q] : lo_[q];
      MoveNonbasic(q, target);
      status_[q] = dir > 0 ? VarStatus::kUpper : VarStatus::kLower;
      stall = (range * improvement > kTieEps) ? 0 : stall + 1;
      ++iterations_;
    } else {
      const double t = t_best;
      x_[q] += dir * t;
      for (int i = 0; i < m_; ++i) {
        x_[basis_[i]] -= dir * tab_[static_cast<std::size_t>(i) * cols_ + q] * t;
      }
      const int leaving = basis_[leave_row];
      const bool to_lower = -dir * alpha_best < 0;
      x_[leaving] = to_lower ? lo_[leaving] : hi_[leaving];
      status_[leaving] = to_lower ? VarStatus::kLower : VarStatus::kUpper;
      Pivot(leave_row, q);
      status_[q] = VarStatus::kBasic;
      if (phase_two_ && leaving >= n_ + m_) {
        dead_[leaving] = 1;
        live_cols_.erase(std::remove(live_cols_.begin(), live_cols_.end(), leaving),
                         live_cols_.end());
      }
      stall = (t * improvement > kTieEps) ? 0 : stall + 1;
      CountPivot();
    }
    if (stall > options_.bland_trigger) bland = true;
  }
}

LpStatus BoundedSimplex::SolvePrimal() {
  LoadSlackBasis();
  if (!live_cols_.empty()) {
    PrimalLoop();
    double infeasibility = 0.0;
    double scale = 1.0;
    for (double v : b_) scale = std::max(scale, std::abs(v));
    for (int art : live_cols_) infeasibility += std::max(0.0, x_[art]);
    if (infeasibility > 1e-7 * scale) {
      has_basis_ = false;
      return LpStatus::kInfeasible;
    }
  }
  phase_two_ = true;
  std::vector<int> still_live;
  for (int art : live_cols_) {
    lo_[art] = hi_[art] = 0.0;
    if (status_[art] == VarStatus::kBasic) {
      still_live.push_back(art);
    } else {
      dead_[art] = 1;
      x_[art] = 0.0;
    }
  }
  live_cols_ = std::move(still_live);
  std::fill(cost_.begin(), cost_.end(), 0.0);
  std::copy(structural_cost_.begin(), structural_cost_.end(), cost_.begin());
  ComputeReducedCosts();
  if (!PrimalLoop()) return LpStatus::kUnbounded;
  return LpStatus::kOptimal;
}

LpStatus BoundedSimplex::DualLoop(bool& stalled) {
  stalled = false;
  const long cap = 20L * (m_ + n_) + 1000;
  long local = 0;
  const int dense = n_ + m_;
  for (;;) {
    int r = -1;
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int bv = basis_[i];
      const double xb = x_[bv];
      double v = 0.0;
      if (xb < lo_[bv] - PrimalTol(lo_[bv])) {
        v = lo_[bv] - xb;
      } else if (xb > hi_[bv] + PrimalTol(hi_[bv])) {
        v = xb - hi_[bv];
      }
      if (v > worst) {
        worst = v;
        r = i;
      }
    }
    if (r < 0) return LpStatus::kOptimal;
    const int bv = basis_[r];
    const bool below = x_[bv] < lo_[bv];
    const double target = below ? lo_[bv] : hi_[bv];
    const double* prow = &tab_[static_cast<std::size_t>(r) * cols_];

    int q = -1;
    double best_ratio = kInf;
    double best_alpha = 0.0;
    auto consider = [&](int j) {
      if (status_[j] == VarStatus::kBasic || dead_[j] || IsFixed(j)) return;
      const double alpha = prow[j];
      if (std::abs(alpha) <= options_.pivot_tol) return;
      const bool at_lower = status_[j] == VarStatus::kLower;
      const bool ok = below ? (at_lower ? alpha < 0 : alpha > 0)
                            : (at_lower ? alpha > 0 : alpha < 0);
      if (!ok) return;
      const double ratio = std::abs(d_[j]) / std::abs(alpha);
      if (q < 0 || ratio < best_ratio - kTieEps ||
          (ratio <= best_ratio + kTieEps && std::abs(alpha) > std::abs(best_alpha))) {
        q = j;
        best_ratio = ratio;
        best_alpha = alpha;
      }
    };
    for (int j = 0; j < dense; ++j) consider(j);
    for (int j : live_cols_) consider(j);
    if (q < 0) return LpStatus::kInfeasible;

    const double delta = (x_[bv] - target) / best_alpha;
    x_[q] += delta;
    for (int i = 0; i < m_; ++i) {
      x_[basis_[i]] -= tab_[static_cast<std::size_t>(i) * cols_ + q] * delta;
    }
    x_[bv] = target;
    status_[bv] = below ? VarStatus::kLower : VarStatus::kUpper;
    Pivot(r, q);
    status_[q] = VarStatus::kBasic;
    if (bv >= n_ + m_) {
      dead_[bv] = 1;
      live_cols_.erase(std::remove(live_cols_.begin(), live_cols_.end(), bv),
                       live_cols_.end());
    }
    CountPivot();
    if (++local > cap) {
      stalled = true;
      return LpStatus::kInfeasible;
    }
  }
}

LpStatus BoundedSimplex::Reoptimize() {
  if (!has_basis_ || !phase_two_) return SolvePrimal();
  const double dtol = options_.dual_tol * cost_scale_;
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic || dead_[j] || IsFixed(j)) continue;
    if (status_[j] == VarStatus::kLower && d_[j] < -dtol) {
      if (!std::isfinite(hi_[j])) return SolvePrimal();
      status_[j] = VarStatus::kUpper;
      MoveNonbasic(j, hi_[j]);
    } else if (status_[j] == VarStatus::kUpper && d_[j] > dtol) {
      if (!std::isfinite(lo_[j])) return SolvePrimal();
      status_[j] = VarStatus::kLower;
      MoveNonbasic(j, lo_[j]);
    }
  }
  bool stalled = false;
  const LpStatus status = DualLoop(stalled);
  if (stalled) return SolvePrimal();
  return status;
}

std::vector<double> BoundedSimplex::Solution() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

double BoundedSimplex::Objective() const {
  double v = 0.0;
  for (int j = 0; j < n_; ++j) v += structural_cost_[j] * x_[j];
  return v;
}

LpResult LpSolve(const BinaryProgram& program, std::span<const double> lower,
                 std::span<const double> upper, SimplexOptions options) {
  BoundedSimplex engine(program, options);
  for (int j = 0; j < program.var_count(); ++j) {
    const double lo = lower.empty() ? 0.0 : lower[j];
    const double hi = upper.empty() ? 1.0 : upper[j];
    engine.SetBounds(j, lo, hi);
  }
  LpResult result;
  result.status = engine.SolvePrimal();
  result.iterations = engine.iterations();
  if (result.status == LpStatus::kOptimal) {
    result.x = engine.Solution();
    result.objective = engine.Objective();
  }
  return result;
}

}  // namespace gapr
