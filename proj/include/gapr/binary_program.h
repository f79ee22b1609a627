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

#ifndef GAPR_BINARY_PROGRAM_H_
#define GAPR_BINARY_PROGRAM_H_

#include <span>
#include <string>
#include <vector>

namespace gapr {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// min c^T x subject to linear rows, x in {0,1}^n.
class BinaryProgram {
 public:
  BinaryProgram() = default;
  explicit BinaryProgram(int var_count);

  int AddVariable(double objective = 0.0, std::string name = {});
  void SetObjective(int var, double coef);
  int AddConstraint(std::vector<Term> terms, Sense sense, double rhs,
                    std::string name = {});

  int var_count() const { return static_cast<int>(objective_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  int nonzero_count() const;
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& constraint(int r) const { return constraints_[r]; }

  // Name used in dumps; "x<index>" when none was given.
  std::string VarName(int var) const;
  std::string ConstraintName(int row) const;

  double ObjectiveValue(std::span<const int> x) const;
  double Activity(int row, std::span<const double> x) const;
  // Largest violation of any row by x (0 when feasible).
  double MaxViolation(std::span<const double> x) const;
  bool IsFeasible(std::span<const int> x, double tol = 1e-6) const;

  // Throws SolverError on out-of-range indices or non-finite data.
  void Validate() const;

 private:
  std::vector<double> objective_;
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

// Plain-text LP-style dump; the grammar is described in docs/lp_format.md.
std::string WriteLpFormat(const BinaryProgram& program);
// Reads what WriteLpFormat produces. Throws FormatError on malformed input.
BinaryProgram ReadLpFormat(const std::string& text);

}  // namespace gapr

#endif  // GAPR_BINARY_PROGRAM_H_
