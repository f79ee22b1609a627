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

#ifndef GAPR_STATS_H_
#define GAPR_STATS_H_

#include <span>

#include "gapr/features.h"

namespace gapr {

struct BivariateFit {
  double mu_x = 0.0;
  double mu_y = 0.0;
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double rho = 0.0;
  int n = 0;
};

// Unbiased sample moments and Pearson correlation. Needs at least three
// pairs and positive variance in both coordinates.
BivariateFit FitBivariate(std::span<const double> x, std::span<const double> y);

// E[X | Y = y_hat] under the bivariate normal model.
double ConditionalExpectation(const BivariateFit& fit, double y_hat);

// Standard deviation of X given Y: sigma_x * sqrt(1 - rho^2).
double ConditionalSigma(const BivariateFit& fit);

// zeta with P(X < zeta | Y = y_hat) = 1 - alpha.
double ConditionalUpperBound(const BivariateFit& fit, double y_hat, double alpha);

double NormalCdf(double z);
// Inverse standard normal CDF on (0, 1).
double NormalQuantile(double p);

struct NormalityReport {
  int bins = 0;
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  bool rejected = false;  // at alpha = 0.05
};

// Sturges' rule: ceil(log2 n) + 1.
int SturgesBins(int n);

// Pearson chi-squared test against the normal with the sample mean and
// standard deviation, over equal-probability bins. `bins` = 0 picks Sturges.
NormalityReport Chi2Normality(std::span<const double> values, int bins = 0);

// Survival function of the chi-squared distribution.
double Chi2Survival(double statistic, int dof);

struct ResidualBound {
  double residual = 0.0;
  double bound = 0.0;
  double lambda_max = 0.0;
  bool holds = false;
  bool pseudo_inverse = false;  // A^T A was singular or A not tall
};

// Least-squares residual of A beta against b / ||b|| and the square root of
// the largest eigenvalue of I - A (A^T A)^{-1} A^T.
ResidualBound ResidualBoundCheck(const DenseMatrix& a, std::span<const double> b);

}  // namespace gapr

#endif  // GAPR_STATS_H_
