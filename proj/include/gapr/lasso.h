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

#ifndef GAPR_LASSO_H_
#define GAPR_LASSO_H_

#include <span>
#include <vector>

#include "gapr/features.h"

namespace gapr {

inline constexpr double kZeroCoefficient = 1e-8;

struct LassoOptions {
  double tol = 1e-8;  // max coefficient change per sweep
  int max_sweeps = 10000;
  double eps_zero = kZeroCoefficient;
  // Record the objective after every sweep (costs one residual pass each).
  bool record_trace = false;
};

struct RSquaredValue {
  double value = 0.0;
  bool degenerate = false;  // b has zero variance; value pinned to 0
};

struct RegressionResult {
  std::vector<double> beta;
  double gamma = 0.0;
  double r2 = 0.0;
  bool r2_degenerate = false;
  double rss = 0.0;
  int nonzero_count = 0;
  int sweeps = 0;
  bool converged = false;
  std::vector<double> objective_trace;
};

// 1/2 ||A beta - b||^2 + gamma ||beta||_1.
double LassoObjective(const DenseMatrix& a, std::span<const double> b,
                      std::span<const double> beta, double gamma);

// ||A^T b||_inf, the smallest gamma with an all-zero solution.
double GammaMax(const DenseMatrix& a, std::span<const double> b);

// Cyclic coordinate descent on the Gram matrix, no intercept, no
// standardization. `warm_start` may be empty.
RegressionResult LassoFit(const DenseMatrix& a, std::span<const double> b,
                          double gamma, const LassoOptions& options = {},
                          std::span<const double> warm_start = {});

struct GammaPath {
  std::vector<double> gammas;  // decreasing
  std::vector<double> bic;
  int selected = 0;
  RegressionResult fit;  // the fit at gammas[selected]
};

inline constexpr int kGammaGridSize = 50;
inline constexpr double kGammaGridRatio = 1e-4;

// Walks the geometric grid from GammaMax down with warm starts and keeps the
// BIC minimizer, df = number of nonzero coefficients.
GammaPath SelectGammaPath(const DenseMatrix& a, std::span<const double> b,
                          const LassoOptions& options = {});
double GammaSelect(const DenseMatrix& a, std::span<const double> b);

RSquaredValue RSquared(const DenseMatrix& a, std::span<const double> beta,
                       std::span<const double> b);

}  // namespace gapr

#endif  // GAPR_LASSO_H_
