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

#include "gapr/stats.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "gapr/errors.h"
#include "gapr/random.h"

namespace gapr {

BivariateFit FitBivariate(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("bivariate fit: length mismatch");
  if (x.size() < 3) throw Error("bivariate fit: need at least 3 pairs");
  BivariateFit fit;
  fit.n = static_cast<int>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.mu_x += x[i];
    fit.mu_y += y[i];
  }
  fit.mu_x /= fit.n;
  fit.mu_y /= fit.n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - fit.mu_x;
    const double dy = y[i] - fit.mu_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw Error("bivariate fit: zero variance");
  fit.sigma_x = std::sqrt(sxx / (fit.n - 1));
  fit.sigma_y = std::sqrt(syy / (fit.n - 1));
  fit.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  return fit;
}

namespace {

void CheckFit(const BivariateFit& fit) {
  if (!(fit.sigma_x > 0.0) || !(fit.sigma_y > 0.0) || std::abs(fit.rho) > 1.0) {
    throw Error("degenerate bivariate fit");
  }
}

}  // namespace

double ConditionalExpectation(const BivariateFit& fit, double y_hat) {
  CheckFit(fit);
  return fit.mu_x + fit.sigma_x * fit.rho * (y_hat - fit.mu_y) / fit.sigma_y;
}

double ConditionalSigma(const BivariateFit& fit) {
  CheckFit(fit);
  return fit.sigma_x * std::sqrt(std::max(0.0, 1.0 - fit.rho * fit.rho));
}

double ConditionalUpperBound(const BivariateFit& fit, double y_hat, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  return ConditionalSigma(fit) * NormalQuantile(1.0 - alpha) +
         ConditionalExpectation(fit, y_hat);
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error("normal quantile needs p in (0, 1)");
  // Acklam's rational approximation followed by one Halley step.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00, 2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  double x;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - kLow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = NormalCdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

int SturgesBins(int n) {
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

double Chi2Survival(double statistic, int dof) {
  if (dof < 1) throw Error("chi-squared needs a positive dof");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

NormalityReport Chi2Normality(std::span<const double> values, int bins) {
  const int n = static_cast<int>(values.size());
  if (n < 30) throw Error("chi-squared normality test needs at least 30 values");
  if (bins == 0) bins = SturgesBins(n);
  if (bins < 4) throw Error("chi-squared normality test needs at least 4 bins");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1));
  if (!(sd > 0.0)) throw Error("chi-squared normality test: zero variance");

  std::vector<double> edges;  // interior bin edges
  for (int k = 1; k < bins; ++k) {
    edges.push_back(mean + sd * NormalQuantile(static_cast<double>(k) / bins));
  }
  std::vector<int> observed(bins, 0);
  for (double v : values) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    ++observed[it - edges.begin()];
  }
  const double expected = static_cast<double>(n) / bins;
  NormalityReport report;
  report.bins = bins;
  for (int o : observed) report.statistic += (o - expected) * (o - expected) / expected;
  report.dof = bins - 3;
  report.p_value = Chi2Survival(report.statistic, report.dof);
  report.rejected = report.p_value < 0.05;
  return report;
}

ResidualBound ResidualBoundCheck(const DenseMatrix& a, std::span<const double> b) {
  const int rows = a.rows();
  const int cols = a.cols();
  if (static_cast<std::size_t>(rows) != b.size() || rows == 0 || cols == 0) {
    throw Error("residual bound: shape mismatch");
  }
  Eigen::MatrixXd m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = a(r, c);
  }
  Eigen::VectorXd bn(rows);
  for (int r = 0; r < rows; ++r) bn(r) = b[r];
  const double norm = bn.norm();
  if (norm == 0.0) throw Error("residual bound: b is zero");
  bn /= norm;

  ResidualBound out;
  // X maps b to the least-squares coefficients: (A^T A)^{-1} A^T, or the
  // pseudo-inverse when that inverse does not exist.
  Eigen::MatrixXd x;
  bool normal_ok = false;
  if (rows > cols) {
    const Eigen::MatrixXd gram = m.transpose() * m;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive() &&
        ldlt.rcond() > 1e-12) {
      x = ldlt.solve(m.transpose());
      normal_ok = true;
    }
  }
  if (!normal_ok) {
    out.pseudo_inverse = true;
    x = m.completeOrthogonalDecomposition().pseudoInverse();
  }
  const Eigen::VectorXd beta = x * bn;
  out.residual = (m * beta - bn).norm();

  const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(rows, rows) - m * x;
  Eigen::VectorXd v(rows);
  for (int r = 0; r < rows; ++r) v(r) = 0.5 + CounterUniform(0x7435, r);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Eigen::VectorXd w = proj * v;
    const double next = v.dot(w);
    const double wn = w.norm();
    if (wn < 1e-300) {
      lambda = 0.0;
      break;
    }
    v = w / wn;
    const bool done = std::abs(next - lambda) < 1e-10 && it > 0;
    lambda = next;
    if (done) break;
  }
  out.lambda_max = std::max(0.0, lambda);
  out.bound = std::sqrt(out.lambda_max);
  out.holds = out.residual <= out.bound + 1e-9;
  return out;
}

}  // namespace gapr
