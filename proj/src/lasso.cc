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

#include "gapr/lasso.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gapr/errors.h"

namespace gapr {
namespace {

void CheckShapes(const DenseMatrix& a, std::span<const double> b) {
  if (static_cast<std::size_t>(a.rows()) != b.size()) {
    throw Error("lasso: row count and response length differ");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw Error("lasso: non-finite response");
  }
  for (int c = 0; c < a.cols(); ++c) {
    for (double v : a.column(c)) {
      if (!std::isfinite(v)) throw Error("lasso: non-finite design entry");
    }
  }
}

double Dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<double> Residual(const DenseMatrix& a, std::span<const double> b,
                             std::span<const double> beta) {
  std::vector<double> r(b.begin(), b.end());
  for (int c = 0; c < a.cols(); ++c) {
    if (beta[c] == 0.0) continue;
    const auto col = a.column(c);
    for (int i = 0; i < a.rows(); ++i) r[i] -= col[i] * beta[c];
  }
  return r;
}

constexpr int kPolishPeriod = 10;

double SoftThreshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

}  // namespace

double LassoObjective(const DenseMatrix& a, std::span<const double> b,
                      std::span<const double> beta, double gamma) {
  const std::vector<double> r = Residual(a, b, beta);
  double l1 = 0.0;
  for (double v : beta) l1 += std::abs(v);
  return 0.5 * Dot(r, r) + gamma * l1;
}

double GammaMax(const DenseMatrix& a, std::span<const double> b) {
  double m = 0.0;
  for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(Dot(a.column(c), b)));
  return m;
}

RegressionResult LassoFit(const DenseMatrix& a, std::span<const double> b,
                          double gamma, const LassoOptions& options,
                          std::span<const double> warm_start) {
  CheckShapes(a, b);
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error("lasso: gamma must be finite and nonnegative");
  }
  const int p = a.cols();
  RegressionResult result;
  result.gamma = gamma;
  result.beta.assign(p, 0.0);
  if (!warm_start.empty()) {
    if (warm_start.size() != static_cast<std::size_t>(p)) {
      throw Error("lasso: warm start has the wrong length");
    }
    result.beta.assign(warm_start.begin(), warm_start.end());
  }
  std::vector<double>& beta = result.beta;

  // Gram matrix G = A^T A and q = A^T (b - A beta), kept current as beta
  // moves so a coordinate step costs O(p).
  std::vector<double> gram(static_cast<std::size_t>(p) * p);
  for (int j = 0; j < p; ++j) {
    for (int k = j; k < p; ++k) {
      const double g = Dot(a.column(j), a.column(k));
      gram[static_cast<std::size_t>(j) * p + k] = g;
      gram[static_cast<std::size_t>(k) * p + j] = g;
    }
  }
  std::vector<double> q(p);
  for (int j = 0; j < p; ++j) q[j] = Dot(a.column(j), b);
  for (int k = 0; k < p; ++k) {
    if (beta[k] == 0.0) continue;
    for (int j = 0; j < p; ++j) q[j] -= gram[static_cast<std::size_t>(k) * p + j] * beta[k];
  }

  auto step = [&](int j) {
    const double gjj = gram[static_cast<std::size_t>(j) * p + j];
    if (gjj <= 0.0) {
      beta[j] = 0.0;
      return 0.0;
    }
    const double updated = SoftThreshold(q[j] + gjj * beta[j], gamma) / gjj;
    const double delta = updated - beta[j];
    if (delta == 0.0) return 0.0;
    const double* gcol = &gram[static_cast<std::size_t>(j) * p];
    for (int k = 0; k < p; ++k) q[k] -= gcol[k] * delta;
    beta[j] = updated;
    return std::abs(delta);
  };

  std::vector<double> c(p);
  for (int j = 0; j < p; ++j) c[j] = Dot(a.column(j), b);
  const double bb = Dot(b, b);
  auto gram_objective = [&](const std::vector<double>& x) {
    double quad = 0.0, lin = 0.0, l1 = 0.0;
    for (int j = 0; j < p; ++j) {
      if (x[j] == 0.0) continue;
      lin += x[j] * c[j];
      l1 += std::abs(x[j]);
      const double* gcol = &gram[static_cast<std::size_t>(j) * p];
      for (int k = 0; k < p; ++k) quad += x[j] * gcol[k] * x[k];
    }
    return 0.5 * (bb - 2.0 * lin + quad) + gamma * l1;
  };

  // Coordinate descent crawls along nearly collinear columns, so every few
  // sweeps the iterate is polished. Within a fixed sign pattern the objective
  // is a smooth quadratic: walk along null directions of the support columns
  // (A beta and the quadratic unchanged, ||beta||_1 not increasing) until the
  // support columns are independent, solve for the quadratic's minimizer, and
  // move toward it up to the first sign change. The polished point is kept
  // only if it is no worse than the current iterate.
  auto support_of = [&](const std::vector<double>& x) {
    std::vector<int> support;
    for (int j = 0; j < p; ++j) {
      if (x[j] != 0.0) support.push_back(j);
    }
    return support;
  };
  auto support_gram = [&](const std::vector<int>& support) {
    const int k = static_cast<int>(support.size());
    Eigen::MatrixXd gss(k, k);
    for (int u = 0; u < k; ++u) {
      for (int v = 0; v < k; ++v) {
        gss(u, v) = gram[static_cast<std::size_t>(support[u]) * p + support[v]];
      }
    }
    return gss;
  };
  auto reduce = [&](std::vector<double>& x) {
    const std::vector<int> support = support_of(x);
    if (support.empty()) return;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(support_gram(support));
    lu.setThreshold(1e-10);
    if (lu.rank() == static_cast<Eigen::Index>(support.size())) return;
    Eigen::MatrixXd kernel = lu.kernel();
    for (Eigen::Index col = kernel.cols() - 1; col >= 0; --col) {
      Eigen::VectorXd d = kernel.col(col);
      if (d.norm() < 1e-12) continue;
      double slope = 0.0;
      for (std::size_t u = 0; u < support.size(); ++u) {
        if (x[support[u]] != 0.0) slope += (x[support[u]] > 0 ? 1.0 : -1.0) * d(u);
      }
      if (slope > 0) d = -d;
      double step = std::numeric_limits<double>::infinity();
      int hit = -1;
      for (std::size_t u = 0; u < support.size(); ++u) {
        const double v = x[support[u]];
        if (v * d(u) < 0 && -v / d(u) < step) {
          step = -v / d(u);
          hit = static_cast<int>(u);
        }
      }
      if (hit < 0) continue;
      for (std::size_t u = 0; u < support.size(); ++u) {
        if (x[support[u]] != 0.0) x[support[u]] += step * d(u);
      }
      x[support[hit]] = 0.0;
      for (Eigen::Index other = 0; other < col; ++other) {
        kernel.col(other) -= (kernel(hit, other) / d(hit)) * d;
      }
    }
  };
  auto gradient = [&](const std::vector<double>& x) {
    std::vector<double> grad(c);
    for (int j = 0; j < p; ++j) {
      if (x[j] == 0.0) continue;
      const double* gcol = &gram[static_cast<std::size_t>(j) * p];
      for (int t = 0; t < p; ++t) grad[t] -= gcol[t] * x[j];
    }
    return grad;
  };
  auto polish = [&]() {
    const double before = gram_objective(beta);
    std::vector<double> x = beta;
    bool optimal = false;
    for (int round = 0; round <= p && !optimal; ++round) {
      reduce(x);
      const std::vector<int> support = support_of(x);
      const int k = static_cast<int>(support.size());
      std::vector<double> target(p, 0.0);
      if (k > 0) {
        Eigen::VectorXd rhs(k);
        for (int u = 0; u < k; ++u) {
          rhs(u) = c[support[u]] - gamma * (x[support[u]] > 0 ? 1.0 : -1.0);
        }
        Eigen::LDLT<Eigen::MatrixXd> ldlt(support_gram(support));
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
            ldlt.rcond() < 1e-12) {
          break;
        }
        const Eigen::VectorXd sol = ldlt.solve(rhs);
        for (int u = 0; u < k; ++u) target[support[u]] = sol(u);
      }
      double step = 1.0;
      int hit = -1;
      for (int j : support) {
        if (!std::isfinite(target[j])) return false;
        if (target[j] * x[j] <= 0.0) {
          const double t = x[j] / (x[j] - target[j]);
          if (t < step) {
            step = t;
            hit = j;
          }
        }
      }
      for (int j : support) x[j] += step * (target[j] - x[j]);
      if (hit >= 0) {
        x[hit] = 0.0;
        continue;
      }
      const std::vector<double> grad = gradient(x);
      const double slack = 1e-9 * std::max(1.0, gamma);
      optimal = true;
      for (int j = 0; j < p && optimal; ++j) {
        optimal = x[j] != 0.0 || std::abs(grad[j]) <= gamma + slack;
      }
      if (!optimal) break;
    }
    if (gram_objective(x) > before) return false;
    beta = x;
    q = gradient(beta);
    return optimal;
  };

  if (options.record_trace) {
    result.objective_trace.push_back(LassoObjective(a, b, beta, gamma));
  }
  // Full sweeps alternate with sweeps restricted to the current support;
  // convergence is declared only after a full sweep.
  bool full = true;
  while (result.sweeps < options.max_sweeps) {
    double max_change = 0.0;
    for (int j = 0; j < p; ++j) {
      if (full || beta[j] != 0.0) max_change = std::max(max_change, step(j));
    }
    ++result.sweeps;
    if (options.record_trace) {
      result.objective_trace.push_back(LassoObjective(a, b, beta, gamma));
    }
    if (max_change < options.tol) {
      if (full) {
        result.converged = true;
        break;
      }
      full = true;
    } else {
      full = false;
    }
    if (result.sweeps % kPolishPeriod == 0) {
      const bool solved = polish();
      if (options.record_trace) {
        result.objective_trace.push_back(LassoObjective(a, b, beta, gamma));
      }
      if (solved) {
        result.converged = true;
        break;
      }
      full = true;
    }
  }

  const std::vector<double> r = Residual(a, b, beta);
  result.rss = Dot(r, r);
  for (double v : beta) result.nonzero_count += std::abs(v) > options.eps_zero ? 1 : 0;
  const RSquaredValue r2 = RSquared(a, beta, b);
  result.r2 = r2.value;
  result.r2_degenerate = r2.degenerate;
  return result;
}

GammaPath SelectGammaPath(const DenseMatrix& a, std::span<const double> b,
                          const LassoOptions& options) {
  CheckShapes(a, b);
  if (a.cols() == 0 || a.rows() == 0) throw Error("lasso: empty design matrix");
  GammaPath path;
  const double gmax = GammaMax(a, b);
  for (int k = 0; k < kGammaGridSize; ++k) {
    path.gammas.push_back(
        gmax * std::pow(kGammaGridRatio, static_cast<double>(k) / (kGammaGridSize - 1)));
  }
  double mean = 0.0;
  for (double v : b) mean += v;
  mean /= static_cast<double>(b.size());
  double tss = 0.0;
  for (double v : b) tss += (v - mean) * (v - mean);
  if (gmax == 0.0 || tss == 0.0) {
    path.bic.assign(1, 0.0);
    path.gammas.resize(1);
    path.fit = LassoFit(a, b, path.gammas[0], options);
    return path;
  }

  const double n = static_cast<double>(b.size());
  // RSS can reach exactly zero on planted data; floor it so ln stays finite.
  const double rss_floor = 1e-300 + 1e-20 * Dot(b, b);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> warm;
  for (int k = 0; k < kGammaGridSize; ++k) {
    RegressionResult fit = LassoFit(a, b, path.gammas[k], options, warm);
    warm = fit.beta;
    const double bic = n * std::log(std::max(fit.rss, rss_floor) / n) +
                       fit.nonzero_count * std::log(n);
    path.bic.push_back(bic);
    if (bic < best) {
      best = bic;
      path.selected = k;
      path.fit = std::move(fit);
    }
  }
  return path;
}

double GammaSelect(const DenseMatrix& a, std::span<const double> b) {
  const GammaPath path = SelectGammaPath(a, b);
  return path.gammas[path.selected];
}

RSquaredValue RSquared(const DenseMatrix& a, std::span<const double> beta,
                       std::span<const double> b) {
  if (beta.size() != static_cast<std::size_t>(a.cols()) ||
      b.size() != static_cast<std::size_t>(a.rows())) {
    throw Error("r_squared: shape mismatch");
  }
  if (b.empty()) return {0.0, true};
  double mean = 0.0;
  for (double v : b) mean += v;
  mean /= static_cast<double>(b.size());
  double tss = 0.0;
  for (double v : b) tss += (v - mean) * (v - mean);
  const std::vector<double> r = Residual(a, b, beta);
  const double rss = Dot(r, r);
  if (tss == 0.0) {
    // Constant target: only an exact fit counts as explained.
    const bool exact = rss <= 1e-24 * std::max(1.0, Dot(b, b));
    return {exact ? 1.0 : 0.0, true};
  }
  return {1.0 - rss / tss, false};
}

}  // namespace gapr
